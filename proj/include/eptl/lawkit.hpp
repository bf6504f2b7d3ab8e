#pragma once

#include "eptl/evaluator.hpp"
#include "eptl/event_graph.hpp"
#include "eptl/formula.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eptl {

/// Truth assignment of atomic propositions per event; absent means false.
struct Labeling {
    std::map<std::string, std::set<std::string>> true_props;

    bool holds(const std::string& event, const std::string& prop) const;
};

/// Finite sequence of states, each the set of propositions true there.
struct LtlTrace {
    std::vector<std::set<std::string>> states;
};

/// Finite-trace LTL semantics over bare 0-ary propositions. EX maps to the
/// strong next step, AX to the weak one (true at the final position).
/// Throws UnsupportedOperatorError for propositions with arguments or return
/// predicates, Error when the position is out of range.
bool ltl_sat(const LtlTrace& trace, std::size_t position, const Formula& f);

enum class LawKind { Equivalence, Implication, NonLaw };
enum class SideCondition { None, LastEventsOnly, NonLastEventsOnly };

struct FixtureExpectation {
    Formula formula;
    std::string event;
    bool expected = false;
};

/// Refuting model for a non-law: the graph, its labeling, and the exact
/// satisfaction pattern that breaks the candidate rule.
struct LawFixture {
    AbstractExecution execution;
    Labeling labeling;
    std::vector<FixtureExpectation> expectations;
};

/// One rewrite rule (or refuted candidate). Schemas range over the atomic
/// propositions phi(), psi(), rho(); conditional rules carry the side
/// condition they hold under.
struct Law {
    std::string name;
    LawKind kind = LawKind::Equivalence;
    SideCondition condition = SideCondition::None;
    /// For NonLaw entries: whether the refuted candidate claimed an
    /// equivalence or only an implication.
    LawKind candidate_kind = LawKind::Implication;
    Formula lhs;
    Formula rhs;
    std::vector<std::string> vars;
    std::optional<LawFixture> fixture;
};

/// The full rule catalog: 14 equivalences, 6 implications (3 conditional on
/// last events), 6 refuted candidates with their fixture graphs.
std::vector<Law> law_catalog();

/// Streams every strict partial order on exactly `events` labeled points
/// (as transitively closed relations), paired with every labeling of `props`
/// atomic propositions. Event operations encode the label set, so the stock
/// evaluator runs unchanged. Deterministic order.
/// Bounds: events <= 5, props <= 3 (BoundError beyond).
void enumerate_models(int events, int props,
                      const std::function<void(const AbstractExecution&, const Labeling&)>& fn);

/// Model stream covering sizes 1..max_events.
class ModelStream {
public:
    ModelStream(int max_events, int props);

    int max_events() const { return max_events_; }
    int props() const { return props_; }
    void for_each(const std::function<void(const AbstractExecution&, const Labeling&)>& fn) const;

private:
    int max_events_;
    int props_;
};

/// Formula matching one atomic proposition over label-encoded operations
/// ("s", "s_p", "s_pq", ...).
Formula atom_formula(const std::string& prop, int props);

/// Replaces every 0-ary proposition named in `atoms` by its mapped formula.
Formula instantiate(const Formula& schema, const std::map<std::string, Formula>& atoms);

struct LawReport {
    std::string law;
    LawKind kind = LawKind::Equivalence;
    long models_checked = 0;
    long events_checked = 0;
    bool expectation_met = false;
    std::string detail;
    std::optional<AbstractExecution> counterexample_model;
    Labeling counterexample_labeling;
    std::string counterexample_event;
};

/// Laws: asserts lhs <=> rhs (resp. lhs => rhs) at every event of every
/// model satisfying the side condition, for every instantiation of the
/// schema variables; reports the first counterexample (expected: none).
/// Non-laws: asserts the fixture refutes the candidate exactly as recorded,
/// and additionally scans the stream for a refuting model.
LawReport check_law(const Law& law, const ModelStream& models);

struct ChainEquivalenceReport {
    long checks = 0;
    long disagreements = 0;
    std::string first_disagreement;
};

/// Evaluates a fixed formula battery on every totally ordered execution with
/// up to max_events events, both through the EPTL evaluator and through the
/// finite-trace LTL oracle; the verdicts must coincide at every position.
ChainEquivalenceReport chain_equivalence_check(int max_events, int props);

} // namespace eptl
