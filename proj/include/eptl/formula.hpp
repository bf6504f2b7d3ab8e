#pragma once

#include "eptl/errors.hpp"
#include "eptl/event_graph.hpp"
#include "eptl/value.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eptl {

/// Argument / return-value pattern: a literal value, a free variable, or the
/// wildcard `_`.
struct Pattern {
    enum class Kind { Literal, Variable, Wildcard };

    Kind kind = Kind::Wildcard;
    Value literal;
    std::string var;

    static Pattern lit(Value v);
    static Pattern variable(std::string name);
    static Pattern wildcard();

    bool operator==(const Pattern& o) const;
    std::string to_string() const;
};

/// Constraint on an event's recorded return value.
struct RetPredicate {
    enum class Kind { Equals, Contains };

    Kind kind = Kind::Equals;
    Pattern pattern;

    bool operator==(const RetPredicate& o) const;
};

/// Parameterized proposition over events: operation name, one pattern per
/// argument, and an optional return-value predicate.
struct Proposition {
    std::string op_name;
    std::vector<Pattern> args;
    std::optional<RetPredicate> ret;

    bool operator==(const Proposition& o) const;
    std::string to_string() const;
};

/// Assignment of values to free variables.
using Interpretation = std::map<std::string, Value>;

enum class FormulaOp {
    True,
    False,
    Prop,
    Not,
    Or,
    And,
    Implies,
    Ex,
    Ax,
    Until,
    Eventually,
    Always,
    WeakUntil,
};

/// Immutable formula tree. Copies share nodes; identity() is stable for the
/// lifetime of any formula holding the node and keys evaluation caches.
class Formula {
public:
    Formula();  // "true"

    static Formula tt();
    static Formula ff();
    static Formula prop(Proposition p);
    static Formula negation(Formula f);
    static Formula disjunction(Formula a, Formula b);
    static Formula conjunction(Formula a, Formula b);
    static Formula implication(Formula a, Formula b);
    static Formula ex(Formula f);
    static Formula ax(Formula f);
    static Formula until(Formula a, Formula b);
    static Formula eventually(Formula f);
    static Formula always(Formula f);
    static Formula weak_until(Formula a, Formula b);

    FormulaOp op() const;
    /// Unary operand, or left operand of a binary node.
    Formula lhs() const;
    Formula rhs() const;
    const Proposition& proposition() const;

    /// Free variables of this subtree, sorted; cached at construction.
    const std::vector<std::string>& free_vars() const;
    const void* identity() const;

    bool operator==(const Formula& o) const;  // structural
    bool operator!=(const Formula& o) const { return !(*this == o); }

    std::string render() const;

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses the formula grammar (see README). Throws ParseError with the byte
/// offset and expected-token set.
Formula parse(const std::string& text);

/// Canonical text form; parse(render(f)) is structurally equal to f.
std::string render(const Formula& f);

std::set<std::string> free_vars(const Formula& f);

/// Q[I](e): does the proposition hold at this event under interpretation I?
/// Throws UnboundVariableError when a variable pattern has no binding.
bool match_prop(const Proposition& p, const Event& e, const Interpretation& interp);

} // namespace eptl
