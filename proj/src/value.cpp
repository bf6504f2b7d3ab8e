#include "eptl/value.hpp"

#include "eptl/errors.hpp"

#include <algorithm>
#include <sstream>

namespace eptl {

Value Value::integer(std::int64_t v) {
    Value out;
    out.data_ = v;
    return out;
}

Value Value::boolean(bool v) {
    Value out;
    out.data_ = v;
    return out;
}

Value Value::string(std::string v) {
    Value out;
    out.data_ = std::move(v);
    return out;
}

Value Value::set(std::vector<Value> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Value out;
    out.data_ = std::move(members);
    return out;
}

Value::Kind Value::kind() const {
    switch (data_.index()) {
    case 0: return Kind::Integer;
    case 1: return Kind::Boolean;
    case 2: return Kind::String;
    default: return Kind::Set;
    }
}

std::int64_t Value::as_integer() const {
    if (kind() != Kind::Integer) throw Error("value is not an integer");
    return std::get<std::int64_t>(data_);
}

bool Value::as_boolean() const {
    if (kind() != Kind::Boolean) throw Error("value is not a boolean");
    return std::get<bool>(data_);
}

const std::string& Value::as_string() const {
    if (kind() != Kind::String) throw Error("value is not a string");
    return std::get<std::string>(data_);
}

const std::vector<Value>& Value::members() const {
    if (kind() != Kind::Set) throw Error("value is not a set");
    return std::get<std::vector<Value>>(data_);
}

bool Value::contains(const Value& v) const {
    if (kind() != Kind::Set) return false;
    const auto& m = std::get<std::vector<Value>>(data_);
    return std::binary_search(m.begin(), m.end(), v);
}

std::string Value::to_string() const {
    switch (kind()) {
    case Kind::Integer: return std::to_string(std::get<std::int64_t>(data_));
    case Kind::Boolean: return std::get<bool>(data_) ? "true" : "false";
    case Kind::String: {
        std::ostringstream os;
        os << '"';
        for (char c : std::get<std::string>(data_)) {
            if (c == '"' || c == '\\') os << '\\';
            os << c;
        }
        os << '"';
        return os.str();
    }
    case Kind::Set: {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (const auto& m : std::get<std::vector<Value>>(data_)) {
            if (!first) os << ',';
            first = false;
            os << m.to_string();
        }
        os << '}';
        return os.str();
    }
    }
    return {};
}

bool operator<(const Value& a, const Value& b) {
    if (a.data_.index() != b.data_.index()) return a.data_.index() < b.data_.index();
    switch (a.kind()) {
    case Value::Kind::Integer: return std::get<std::int64_t>(a.data_) < std::get<std::int64_t>(b.data_);
    case Value::Kind::Boolean: return std::get<bool>(a.data_) < std::get<bool>(b.data_);
    case Value::Kind::String: return std::get<std::string>(a.data_) < std::get<std::string>(b.data_);
    case Value::Kind::Set:
        return std::get<std::vector<Value>>(a.data_) < std::get<std::vector<Value>>(b.data_);
    }
    return false;
}

} // namespace eptl
