#pragma once

#include "eptl/event_graph.hpp"
#include "eptl/formula.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace eptl {

/// One reason an execution-level check failed: which starting event, under
/// which variable assignment, the operator path from the root to the failing
/// obligation, and the event witnessing the failure.
struct Failure {
    std::string starting_event;
    Interpretation interpretation;
    std::vector<std::string> path;
    std::string violating_event;
};

struct Verdict {
    bool satisfied = true;
    std::vector<Failure> failures;
};

/// Memo table keyed by (subformula identity, event, interpretation restricted
/// to the subformula's free variables). Entries are write-once; repeated
/// inserts for the same key carry the same outcome, so the table can be
/// shared across starting events and interpretations.
class EvalCache {
public:
    std::optional<bool> find(const void* node, int event,
                             const std::vector<std::pair<std::string, Value>>& restricted) const;
    void store(const void* node, int event,
               const std::vector<std::pair<std::string, Value>>& restricted, bool outcome);

private:
    using OpenKey = std::pair<int, std::vector<std::pair<std::string, Value>>>;
    struct PerNode {
        std::vector<signed char> closed;  // used when the node has no free variables
        std::map<OpenKey, bool> open;
    };
    std::unordered_map<const void*, PerNode> table_;
};

/// Values the execution-level check quantifies free variables over when no
/// explicit domain is given: every value appearing as an operation argument
/// or as a member of a set-valued return, plus one fresh integer that no
/// proposition in the trace can match.
std::vector<Value> default_domain(const AbstractExecution& a);

/// (A, e) |= f under interpretation `interp`. Requires interp to cover
/// free_vars(f). Throws UnknownIdError, UnboundVariableError.
bool sat(const AbstractExecution& a, const std::string& event, const Formula& f,
         const Interpretation& interp = {});
bool sat(const AbstractExecution& a, const std::string& event, const Formula& f,
         const Interpretation& interp, EvalCache& cache);

/// When sat(...) is false, an event witnessing the failure of the outermost
/// temporal obligation (recursively refined); absent when sat(...) is true.
std::optional<std::string> diagnose(const AbstractExecution& a, const std::string& event,
                                    const Formula& f, const Interpretation& interp = {});

/// A |= f: every starting event satisfies f under every interpretation of
/// the free variables over `domain` (default: default_domain(a)). Throws
/// EmptyDomainError when f has free variables and the domain is empty.
Verdict check_execution(const AbstractExecution& a, const Formula& f,
                        const std::optional<std::vector<Value>>& domain = std::nullopt);

} // namespace eptl
