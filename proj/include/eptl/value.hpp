#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace eptl {

/// A trace value: integer, boolean, string, or a finite set of values.
/// Sets are canonicalized on construction (sorted, deduplicated), so equality
/// and the ordering are structural and independent of member order.
class Value {
public:
    enum class Kind { Integer, Boolean, String, Set };

    Value() : data_(std::int64_t{0}) {}

    static Value integer(std::int64_t v);
    static Value boolean(bool v);
    static Value string(std::string v);
    static Value set(std::vector<Value> members);

    Kind kind() const;
    bool is_set() const { return kind() == Kind::Set; }

    std::int64_t as_integer() const;
    bool as_boolean() const;
    const std::string& as_string() const;
    /// Set members in canonical order. Only valid for set values.
    const std::vector<Value>& members() const;
    /// Set membership; false for non-set values.
    bool contains(const Value& v) const;

    /// Rendering used in event labels and reports: 42, true, "x", {1,2}.
    std::string to_string() const;

    friend bool operator==(const Value& a, const Value& b) { return a.data_ == b.data_; }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
    /// Total order: kind rank first, then content. Used for canonical sets,
    /// sorted domains and deterministic interpretation enumeration.
    friend bool operator<(const Value& a, const Value& b);

private:
    std::variant<std::int64_t, bool, std::string, std::vector<Value>> data_;
};

} // namespace eptl
