#pragma once

#include "eptl/errors.hpp"
#include "eptl/value.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eptl {

/// One operation execution: name, arguments, and the recorded return value
/// (present exactly when the trace recorded one).
struct OperationRecord {
    std::string name;
    std::vector<Value> args;
    std::optional<Value> ret;

    /// "op(a,b)" or "op(a,b) => r", as drawn on event graphs.
    std::string label() const;
};

struct Event {
    std::string id;
    OperationRecord op;
    /// Metadata only; never consulted by the logic.
    std::optional<std::string> replica;
};

/// A finite abstract execution: a set of events plus a visibility relation
/// that is a strict partial order (irreflexive, transitive, antisymmetric).
/// The transitive reduction is stored, the closure is cached; order queries
/// go through the closure. Immutable after validate(), so instances are safe
/// to share across threads.
class AbstractExecution {
public:
    /// Builds an execution from raw events and any relation whose transitive
    /// closure is a strict partial order; callers may supply the reduction,
    /// the closure, or anything in between.
    /// Throws DuplicateIdError, UnknownIdError, CycleError.
    static AbstractExecution validate(std::vector<Event> raw_events,
                                      const std::vector<std::pair<std::string, std::string>>& raw_vis);

    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }
    /// Events in canonical (id-sorted) order.
    const std::vector<Event>& events() const { return events_; }
    bool contains(const std::string& id) const { return index_.count(id) != 0; }
    const Event& event(const std::string& id) const { return events_[index_of(id)]; }

    /// e1 = e2 or (e1,e2) in the visibility closure.
    bool leq(const std::string& e1, const std::string& e2) const;
    /// (e1,e2) in the visibility closure.
    bool lt(const std::string& e1, const std::string& e2) const;
    /// Distinct and unrelated in either direction.
    bool concurrent(const std::string& e1, const std::string& e2) const;

    /// Events with no predecessor.
    std::set<std::string> starting_events() const;
    /// Events with no strict successor.
    std::set<std::string> last_events() const;
    /// Minimal elements of e's strict successor set (covering relation).
    std::set<std::string> immediate_successors(const std::string& e) const;
    /// { e1 | e <= e1 }, including e itself.
    std::set<std::string> successors_including(const std::string& e) const;

    /// Reduction / closure edges as sorted id pairs.
    std::vector<std::pair<std::string, std::string>> reduction_edges() const;
    std::vector<std::pair<std::string, std::string>> closure_edges() const;

    /// Every total order consistent with the visibility order, in
    /// lexicographic order of the id sequences. Throws TooLargeError when the
    /// execution exceeds max_events (factorial growth).
    std::vector<std::vector<std::string>> linear_extensions(std::size_t max_events = 10) const;

    /// DOT digraph of the reduction; node labels are operation expressions.
    std::string to_dot() const;

    // Index-based views of the same data; hot paths in the evaluator use
    // these. Indices follow the id-sorted event order.
    int index_of(const std::string& id) const;
    const Event& event_at(int idx) const { return events_[static_cast<std::size_t>(idx)]; }
    bool lt_idx(int a, int b) const { return closure_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; }
    bool leq_idx(int a, int b) const { return a == b || lt_idx(a, b); }
    const std::vector<int>& immediate_successor_indices(int idx) const {
        return reduction_succ_[static_cast<std::size_t>(idx)];
    }
    /// Sorted, includes idx itself.
    const std::vector<int>& successor_indices_including(int idx) const {
        return succ_including_[static_cast<std::size_t>(idx)];
    }
    const std::vector<int>& starting_indices() const { return starting_; }
    const std::vector<int>& last_indices() const { return last_; }

private:
    AbstractExecution() = default;

    std::vector<Event> events_;
    std::map<std::string, int> index_;
    std::vector<std::vector<unsigned char>> closure_;
    std::vector<std::vector<int>> reduction_succ_;
    std::vector<std::vector<int>> succ_including_;
    std::vector<int> starting_;
    std::vector<int> last_;
};

} // namespace eptl
