#include "eptl/lawkit.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace eptl {

bool Labeling::holds(const std::string& event, const std::string& prop) const {
    auto it = true_props.find(event);
    return it != true_props.end() && it->second.count(prop) != 0;
}

// ---------------------------------------------------------------------------
// Finite-trace LTL oracle

namespace {

bool ltl_all(const LtlTrace& t, std::size_t j, const Formula& f);

bool ltl_until(const LtlTrace& t, std::size_t j, const Formula& lhs, const Formula& rhs) {
    for (std::size_t k = j; k < t.states.size(); ++k) {
        if (!ltl_sat(t, k, rhs)) continue;
        bool prefix = true;
        for (std::size_t i = j; i < k && prefix; ++i) prefix = ltl_sat(t, i, lhs);
        if (prefix) return true;
    }
    return false;
}

bool ltl_all(const LtlTrace& t, std::size_t j, const Formula& f) {
    for (std::size_t k = j; k < t.states.size(); ++k)
        if (!ltl_sat(t, k, f)) return false;
    return true;
}

} // namespace

bool ltl_sat(const LtlTrace& trace, std::size_t position, const Formula& f) {
    if (position >= trace.states.size())
        throw Error("LTL position " + std::to_string(position) + " out of range (trace length " +
                    std::to_string(trace.states.size()) + ")");
    switch (f.op()) {
    case FormulaOp::True: return true;
    case FormulaOp::False: return false;
    case FormulaOp::Prop: {
        const Proposition& p = f.proposition();
        if (!p.args.empty() || p.ret)
            throw UnsupportedOperatorError("finite-trace LTL propositions are bare names: " +
                                           p.to_string());
        return trace.states[position].count(p.op_name) != 0;
    }
    case FormulaOp::Not: return !ltl_sat(trace, position, f.lhs());
    case FormulaOp::Or: return ltl_sat(trace, position, f.lhs()) || ltl_sat(trace, position, f.rhs());
    case FormulaOp::And: return ltl_sat(trace, position, f.lhs()) && ltl_sat(trace, position, f.rhs());
    case FormulaOp::Implies:
        return !ltl_sat(trace, position, f.lhs()) || ltl_sat(trace, position, f.rhs());
    case FormulaOp::Ex:  // strong next step
        return position + 1 < trace.states.size() && ltl_sat(trace, position + 1, f.lhs());
    case FormulaOp::Ax:  // weak next step: vacuously true at the final position
        return position + 1 >= trace.states.size() || ltl_sat(trace, position + 1, f.lhs());
    case FormulaOp::Until: return ltl_until(trace, position, f.lhs(), f.rhs());
    case FormulaOp::Eventually: {
        for (std::size_t k = position; k < trace.states.size(); ++k)
            if (ltl_sat(trace, k, f.lhs())) return true;
        return false;
    }
    case FormulaOp::Always: return ltl_all(trace, position, f.lhs());
    case FormulaOp::WeakUntil:
        return ltl_all(trace, position, f.lhs()) || ltl_until(trace, position, f.lhs(), f.rhs());
    }
    return false;
}

// ---------------------------------------------------------------------------
// Model enumeration

namespace {

constexpr const char* kLetters[3] = {"p", "q", "r"};

std::string subset_op_name(unsigned mask, int props) {
    std::string name = "s";
    if (mask != 0) {
        name += '_';
        for (int i = 0; i < props; ++i)
            if (mask & (1u << i)) name += kLetters[i];
    }
    return name;
}

/// All irreflexive, transitive, antisymmetric relations on n labeled points,
/// found by filtering every edge subset. Returned as flattened n*n matrices
/// in ascending bitmask order.
std::vector<std::vector<unsigned char>> strict_partial_orders(int n) {
    std::vector<std::vector<unsigned char>> result;
    const int pairs = n * (n - 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        std::vector<unsigned char> rel(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if (mask & (std::uint64_t{1} << bit)) rel[static_cast<std::size_t>(i * n + j)] = 1;
                ++bit;
            }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (!rel[static_cast<std::size_t>(i * n + j)]) continue;
                if (rel[static_cast<std::size_t>(j * n + i)]) ok = false;
                for (int k = 0; k < n && ok; ++k)
                    if (rel[static_cast<std::size_t>(j * n + k)] && !rel[static_cast<std::size_t>(i * n + k)])
                        ok = false;
            }
        if (ok) result.push_back(std::move(rel));
    }
    return result;
}

void check_model_bounds(int events, int props) {
    if (events < 0 || events > 5)
        throw BoundError("model enumeration supports at most 5 events (asked for " +
                         std::to_string(events) + ")");
    if (props < 0 || props > 3)
        throw BoundError("model enumeration supports at most 3 atomic propositions (asked for " +
                         std::to_string(props) + ")");
}

} // namespace

void enumerate_models(int events, int props,
                      const std::function<void(const AbstractExecution&, const Labeling&)>& fn) {
    check_model_bounds(events, props);
    const auto posets = strict_partial_orders(events);
    const unsigned labelings = 1u << (events * props);
    for (const auto& rel : posets) {
        std::vector<std::pair<std::string, std::string>> vis;
        for (int i = 0; i < events; ++i)
            for (int j = 0; j < events; ++j)
                if (rel[static_cast<std::size_t>(i * events + j)])
                    vis.emplace_back("e" + std::to_string(i + 1), "e" + std::to_string(j + 1));
        for (unsigned lmask = 0; lmask < labelings; ++lmask) {
            std::vector<Event> evs;
            Labeling lab;
            for (int i = 0; i < events; ++i) {
                const unsigned bits = (lmask >> (i * props)) & ((1u << props) - 1u);
                Event ev;
                ev.id = "e" + std::to_string(i + 1);
                ev.op.name = subset_op_name(bits, props);
                for (int j = 0; j < props; ++j)
                    if (bits & (1u << j)) lab.true_props[ev.id].insert(kLetters[j]);
                evs.push_back(std::move(ev));
            }
            fn(AbstractExecution::validate(std::move(evs), vis), lab);
        }
    }
}

ModelStream::ModelStream(int max_events, int props) : max_events_(max_events), props_(props) {
    check_model_bounds(max_events, props);
}

void ModelStream::for_each(const std::function<void(const AbstractExecution&, const Labeling&)>& fn) const {
    for (int n = 1; n <= max_events_; ++n) enumerate_models(n, props_, fn);
}

Formula atom_formula(const std::string& prop, int props) {
    int letter = -1;
    for (int i = 0; i < props; ++i)
        if (prop == kLetters[i]) letter = i;
    if (letter < 0) throw Error("unknown atomic proposition: " + prop);
    std::optional<Formula> acc;
    for (unsigned mask = 0; mask < (1u << props); ++mask) {
        if (!(mask & (1u << letter))) continue;
        Formula term = Formula::prop(Proposition{subset_op_name(mask, props), {}, std::nullopt});
        acc = acc ? Formula::disjunction(std::move(*acc), std::move(term)) : std::move(term);
    }
    return *acc;
}

Formula instantiate(const Formula& schema, const std::map<std::string, Formula>& atoms) {
    switch (schema.op()) {
    case FormulaOp::True:
    case FormulaOp::False:
        return schema;
    case FormulaOp::Prop: {
        const Proposition& p = schema.proposition();
        if (p.args.empty() && !p.ret) {
            auto it = atoms.find(p.op_name);
            if (it != atoms.end()) return it->second;
        }
        return schema;
    }
    case FormulaOp::Not: return Formula::negation(instantiate(schema.lhs(), atoms));
    case FormulaOp::Ex: return Formula::ex(instantiate(schema.lhs(), atoms));
    case FormulaOp::Ax: return Formula::ax(instantiate(schema.lhs(), atoms));
    case FormulaOp::Eventually: return Formula::eventually(instantiate(schema.lhs(), atoms));
    case FormulaOp::Always: return Formula::always(instantiate(schema.lhs(), atoms));
    case FormulaOp::Or:
        return Formula::disjunction(instantiate(schema.lhs(), atoms), instantiate(schema.rhs(), atoms));
    case FormulaOp::And:
        return Formula::conjunction(instantiate(schema.lhs(), atoms), instantiate(schema.rhs(), atoms));
    case FormulaOp::Implies:
        return Formula::implication(instantiate(schema.lhs(), atoms), instantiate(schema.rhs(), atoms));
    case FormulaOp::Until:
        return Formula::until(instantiate(schema.lhs(), atoms), instantiate(schema.rhs(), atoms));
    case FormulaOp::WeakUntil:
        return Formula::weak_until(instantiate(schema.lhs(), atoms), instantiate(schema.rhs(), atoms));
    }
    return schema;
}

// ---------------------------------------------------------------------------
// Law catalog

namespace {

Formula atom(const char* name) {
    return Formula::prop(Proposition{name, {}, std::nullopt});
}

struct FixtureGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;                 // 1-based
    std::map<std::string, std::set<int>> labels;            // prop -> events
};

LawFixture make_fixture(const FixtureGraph& g, std::vector<FixtureExpectation> expectations) {
    std::vector<Event> events;
    Labeling lab;
    for (int i = 1; i <= g.n; ++i) {
        Event ev;
        ev.id = "e" + std::to_string(i);
        ev.op.name = "none";
        for (const auto& [prop, at] : g.labels)
            if (at.count(i)) {
                ev.op.name = prop;  // paper fixtures label each event with at most one prop
                lab.true_props[ev.id].insert(prop);
            }
        events.push_back(std::move(ev));
    }
    std::vector<std::pair<std::string, std::string>> vis;
    for (const auto& [a, b] : g.edges)
        vis.emplace_back("e" + std::to_string(a), "e" + std::to_string(b));
    return LawFixture{AbstractExecution::validate(std::move(events), vis), std::move(lab),
                      std::move(expectations)};
}

} // namespace

std::vector<Law> law_catalog() {
    const Formula phi = atom("phi");
    const Formula psi = atom("psi");
    const Formula rho = atom("rho");
    std::vector<Law> laws;

    auto equivalence = [&](const char* name, Formula l, Formula r, std::vector<std::string> vars) {
        laws.push_back(Law{name, LawKind::Equivalence, SideCondition::None, LawKind::Equivalence,
                           std::move(l), std::move(r), std::move(vars), std::nullopt});
    };
    auto implication = [&](const char* name, Formula l, Formula r, std::vector<std::string> vars,
                           SideCondition cond = SideCondition::None) {
        laws.push_back(Law{name, LawKind::Implication, cond, LawKind::Implication, std::move(l),
                           std::move(r), std::move(vars), std::nullopt});
    };
    auto non_law = [&](const char* name, LawKind candidate, Formula l, Formula r,
                       std::vector<std::string> vars, LawFixture fixture) {
        laws.push_back(Law{name, LawKind::NonLaw, SideCondition::None, candidate, std::move(l),
                           std::move(r), std::move(vars), std::move(fixture)});
    };

    // Distributivity equivalences.
    equivalence("ex-or", Formula::disjunction(Formula::ex(phi), Formula::ex(psi)),
                Formula::ex(Formula::disjunction(phi, psi)), {"phi", "psi"});
    equivalence("ax-and", Formula::conjunction(Formula::ax(phi), Formula::ax(psi)),
                Formula::ax(Formula::conjunction(phi, psi)), {"phi", "psi"});
    equivalence("f-or", Formula::disjunction(Formula::eventually(phi), Formula::eventually(psi)),
                Formula::eventually(Formula::disjunction(phi, psi)), {"phi", "psi"});
    equivalence("g-and", Formula::conjunction(Formula::always(phi), Formula::always(psi)),
                Formula::always(Formula::conjunction(phi, psi)), {"phi", "psi"});
    equivalence("u-and", Formula::conjunction(Formula::until(phi, rho), Formula::until(psi, rho)),
                Formula::until(Formula::conjunction(phi, psi), rho), {"phi", "psi", "rho"});

    // Negation dualities.
    equivalence("not-ex", Formula::negation(Formula::ex(phi)), Formula::ax(Formula::negation(phi)),
                {"phi"});
    equivalence("not-ax", Formula::negation(Formula::ax(phi)), Formula::ex(Formula::negation(phi)),
                {"phi"});
    equivalence("not-f", Formula::negation(Formula::eventually(phi)),
                Formula::always(Formula::negation(phi)), {"phi"});
    equivalence("not-g", Formula::negation(Formula::always(phi)),
                Formula::eventually(Formula::negation(phi)), {"phi"});

    // Idempotence.
    equivalence("f-idempotent", Formula::eventually(Formula::eventually(phi)),
                Formula::eventually(phi), {"phi"});
    equivalence("g-idempotent", Formula::always(Formula::always(phi)), Formula::always(phi),
                {"phi"});
    equivalence("u-idempotent", Formula::until(phi, Formula::until(phi, psi)),
                Formula::until(phi, psi), {"phi", "psi"});

    // Induction.
    equivalence("f-induction", Formula::eventually(phi),
                Formula::disjunction(phi, Formula::ex(Formula::eventually(phi))), {"phi"});
    equivalence("g-induction", Formula::always(phi),
                Formula::conjunction(phi, Formula::ax(Formula::always(phi))), {"phi"});

    // One-directional distributivity.
    implication("ax-or-implication", Formula::disjunction(Formula::ax(phi), Formula::ax(psi)),
                Formula::ax(Formula::disjunction(phi, psi)), {"phi", "psi"});
    implication("ex-and-implication", Formula::ex(Formula::conjunction(phi, psi)),
                Formula::conjunction(Formula::ex(phi), Formula::ex(psi)), {"phi", "psi"});
    implication("u-or-implication",
                Formula::disjunction(Formula::until(phi, psi), Formula::until(phi, rho)),
                Formula::until(phi, Formula::disjunction(psi, rho)), {"phi", "psi", "rho"});

    // Last-event rules.
    implication("last-event-ax", Formula::tt(), Formula::ax(phi), {"phi"},
                SideCondition::LastEventsOnly);
    implication("last-event-not-ex", Formula::tt(), Formula::negation(Formula::ex(phi)), {"phi"},
                SideCondition::LastEventsOnly);
    implication("non-last-ax-implies-ex", Formula::ax(phi), Formula::ex(phi), {"phi"},
                SideCondition::NonLastEventsOnly);

    // Refuted candidates, each with its fixture graph.
    FixtureGraph branch;  // e1 -> e2, e1 -> e3; phi only at e2, psi only at e3
    branch.n = 3;
    branch.edges = {{1, 2}, {1, 3}};
    branch.labels = {{"phi", {2}}, {"psi", {3}}};

    non_law("ax-or-converse", LawKind::Implication,
            Formula::ax(Formula::disjunction(phi, psi)),
            Formula::disjunction(Formula::ax(phi), Formula::ax(psi)), {"phi", "psi"},
            make_fixture(branch,
                         {{Formula::ax(Formula::disjunction(phi, psi)), "e1", true},
                          {Formula::disjunction(Formula::ax(phi), Formula::ax(psi)), "e1", false}}));
    non_law("ex-and-converse", LawKind::Implication,
            Formula::conjunction(Formula::ex(phi), Formula::ex(psi)),
            Formula::ex(Formula::conjunction(phi, psi)), {"phi", "psi"},
            make_fixture(branch,
                         {{Formula::conjunction(Formula::ex(phi), Formula::ex(psi)), "e1", true},
                          {Formula::ex(Formula::conjunction(phi, psi)), "e1", false}}));

    FixtureGraph two_strands;  // e1 -> e2 -> e3 and e1 -> e4 -> e5
    two_strands.n = 5;
    two_strands.edges = {{1, 2}, {2, 3}, {1, 4}, {4, 5}};
    two_strands.labels = {{"phi", {1}}, {"psi", {2}}, {"rho", {4}}};

    non_law("u-or-converse", LawKind::Implication,
            Formula::until(phi, Formula::disjunction(psi, rho)),
            Formula::disjunction(Formula::until(phi, psi), Formula::until(phi, rho)),
            {"phi", "psi", "rho"},
            make_fixture(two_strands,
                         {{Formula::until(phi, Formula::disjunction(psi, rho)), "e1", true},
                          {Formula::until(phi, psi), "e1", false},
                          {Formula::until(phi, rho), "e1", false}}));

    FixtureGraph last_event;  // single event; AX phi holds vacuously, EX phi cannot
    last_event.n = 1;

    non_law("ax-implies-ex", LawKind::Implication, Formula::ax(phi), Formula::ex(phi), {"phi"},
            make_fixture(last_event, {{Formula::ax(phi), "e1", true},
                                      {Formula::ex(phi), "e1", false}}));

    // Two concurrent strands with a cross synchronization in each direction;
    // phi U psi holds at e1 but at neither immediate successor.
    FixtureGraph cross;
    cross.n = 7;
    cross.edges = {{1, 2}, {2, 3}, {3, 4}, {1, 5}, {5, 6}, {6, 7}, {5, 4}, {2, 7}};
    cross.labels = {{"phi", {1, 2, 5}}, {"psi", {3, 6}}};

    const Formula u = Formula::until(phi, psi);
    non_law("u-induction-ex", LawKind::Equivalence, u,
            Formula::disjunction(psi, Formula::conjunction(phi, Formula::ex(u))), {"phi", "psi"},
            make_fixture(cross,
                         {{u, "e1", true},
                          {Formula::ex(u), "e1", false},
                          {Formula::disjunction(psi, Formula::conjunction(phi, Formula::ex(u))),
                           "e1", false}}));
    non_law("u-induction-ax", LawKind::Equivalence, u,
            Formula::disjunction(psi, Formula::conjunction(phi, Formula::ax(u))), {"phi", "psi"},
            make_fixture(cross,
                         {{u, "e1", true},
                          {Formula::ax(u), "e1", false},
                          {Formula::disjunction(psi, Formula::conjunction(phi, Formula::ax(u))),
                           "e1", false}}));

    return laws;
}

// ---------------------------------------------------------------------------
// Law checking

namespace {

std::vector<std::map<std::string, Formula>> schema_assignments(const std::vector<std::string>& vars,
                                                               int props, bool include_constants) {
    std::vector<Formula> atoms;
    for (int i = 0; i < props; ++i) atoms.push_back(atom_formula(kLetters[i], props));
    if (include_constants) {
        atoms.push_back(Formula::tt());
        atoms.push_back(Formula::ff());
    }
    std::vector<std::map<std::string, Formula>> out;
    if (vars.empty()) {
        out.emplace_back();
        return out;
    }
    if (atoms.empty()) return out;
    std::vector<std::size_t> idx(vars.size(), 0);
    for (;;) {
        std::map<std::string, Formula> m;
        for (std::size_t i = 0; i < vars.size(); ++i) m.emplace(vars[i], atoms[idx[i]]);
        out.push_back(std::move(m));
        std::size_t i = idx.size();
        for (; i-- > 0;) {
            if (++idx[i] < atoms.size()) break;
            idx[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

std::vector<std::pair<Formula, Formula>> instantiate_pairs(const Law& law, int props,
                                                           bool include_constants) {
    std::vector<std::pair<Formula, Formula>> out;
    for (const auto& asg : schema_assignments(law.vars, props, include_constants))
        out.emplace_back(instantiate(law.lhs, asg), instantiate(law.rhs, asg));
    return out;
}

} // namespace

LawReport check_law(const Law& law, const ModelStream& models) {
    LawReport rep;
    rep.law = law.name;
    rep.kind = law.kind;

    if (law.kind == LawKind::NonLaw) {
        if (!law.fixture) throw Error("non-law " + law.name + " has no fixture");
        rep.expectation_met = true;
        for (const auto& exp : law.fixture->expectations) {
            const bool got = sat(law.fixture->execution, exp.event, exp.formula);
            if (got != exp.expected) {
                rep.expectation_met = false;
                rep.detail += "fixture expectation failed: " + exp.formula.render() + " at " +
                              exp.event + " should be " + (exp.expected ? "true" : "false") + "; ";
            }
        }
        if (rep.expectation_met) rep.detail = "fixture refutes the candidate as recorded";

        const auto instances = instantiate_pairs(law, models.props(), false);
        bool found = false;
        models.for_each([&](const AbstractExecution& a, const Labeling& lab) {
            if (found) return;
            rep.models_checked++;
            EvalCache cache;
            for (const auto& [lhs, rhs] : instances) {
                for (const auto& ev : a.events()) {
                    rep.events_checked++;
                    const bool lv = sat(a, ev.id, lhs, {}, cache);
                    const bool rv = sat(a, ev.id, rhs, {}, cache);
                    const bool broken =
                        law.candidate_kind == LawKind::Equivalence ? lv != rv : (lv && !rv);
                    if (broken) {
                        found = true;
                        rep.counterexample_model = a;
                        rep.counterexample_labeling = lab;
                        rep.counterexample_event = ev.id;
                        rep.detail += "; also refuted on an enumerated model at " + ev.id;
                        return;
                    }
                }
            }
        });
        return rep;
    }

    const bool constants = law.condition != SideCondition::None;
    const auto instances = instantiate_pairs(law, models.props(), constants);
    bool failed = false;
    models.for_each([&](const AbstractExecution& a, const Labeling& lab) {
        if (failed) return;
        rep.models_checked++;
        std::vector<int> targets;
        switch (law.condition) {
        case SideCondition::None:
            for (int i = 0; i < static_cast<int>(a.size()); ++i) targets.push_back(i);
            break;
        case SideCondition::LastEventsOnly:
            targets = a.last_indices();
            break;
        case SideCondition::NonLastEventsOnly: {
            const auto& last = a.last_indices();
            for (int i = 0; i < static_cast<int>(a.size()); ++i)
                if (std::find(last.begin(), last.end(), i) == last.end()) targets.push_back(i);
            break;
        }
        }
        EvalCache cache;
        for (const auto& [lhs, rhs] : instances) {
            for (int e : targets) {
                rep.events_checked++;
                const std::string& id = a.event_at(e).id;
                const bool lv = sat(a, id, lhs, {}, cache);
                const bool rv = sat(a, id, rhs, {}, cache);
                const bool ok = law.kind == LawKind::Equivalence ? lv == rv : (!lv || rv);
                if (!ok) {
                    failed = true;
                    rep.counterexample_model = a;
                    rep.counterexample_labeling = lab;
                    rep.counterexample_event = id;
                    std::ostringstream os;
                    os << "counterexample: " << lhs.render() << " is " << (lv ? "true" : "false")
                       << " but " << rhs.render() << " is " << (rv ? "true" : "false") << " at "
                       << id;
                    rep.detail = os.str();
                    return;
                }
            }
        }
    });
    rep.expectation_met = !failed;
    if (!failed) rep.detail = "no counterexample";
    return rep;
}

ChainEquivalenceReport chain_equivalence_check(int max_events, int props) {
    check_model_bounds(max_events, props);
    if (props < 1) throw BoundError("chain equivalence needs at least one atomic proposition");

    const Formula p = atom("p");
    const Formula q = props >= 2 ? atom("q") : atom("p");
    const std::vector<Formula> battery = {
        p,
        Formula::negation(p),
        Formula::disjunction(p, q),
        Formula::conjunction(p, q),
        Formula::implication(p, q),
        Formula::ex(p),
        Formula::ax(p),
        Formula::eventually(p),
        Formula::always(p),
        Formula::until(p, q),
        Formula::weak_until(p, q),
        Formula::negation(Formula::until(p, q)),
        Formula::ex(Formula::until(p, q)),
        Formula::ax(Formula::always(p)),
        Formula::always(Formula::implication(p, Formula::eventually(q))),
        Formula::eventually(Formula::always(p)),
        Formula::always(Formula::eventually(p)),
    };

    std::map<std::string, Formula> encoding;
    for (int i = 0; i < props; ++i) encoding.emplace(kLetters[i], atom_formula(kLetters[i], props));
    std::vector<std::pair<Formula, Formula>> pairs;  // (EPTL over encoded ops, LTL over bare props)
    for (const auto& schema : battery) pairs.emplace_back(instantiate(schema, encoding), schema);

    ChainEquivalenceReport rep;
    for (int m = 1; m <= max_events; ++m) {
        std::vector<std::pair<std::string, std::string>> vis;
        for (int i = 1; i < m; ++i)
            vis.emplace_back("e" + std::to_string(i), "e" + std::to_string(i + 1));
        const unsigned labelings = 1u << (m * props);
        for (unsigned lmask = 0; lmask < labelings; ++lmask) {
            std::vector<Event> evs;
            LtlTrace trace;
            for (int i = 0; i < m; ++i) {
                const unsigned bits = (lmask >> (i * props)) & ((1u << props) - 1u);
                Event ev;
                ev.id = "e" + std::to_string(i + 1);
                ev.op.name = subset_op_name(bits, props);
                evs.push_back(std::move(ev));
                std::set<std::string> state;
                for (int j = 0; j < props; ++j)
                    if (bits & (1u << j)) state.insert(kLetters[j]);
                trace.states.push_back(std::move(state));
            }
            const AbstractExecution a = AbstractExecution::validate(std::move(evs), vis);
            EvalCache cache;
            for (std::size_t fi = 0; fi < pairs.size(); ++fi) {
                for (int i = 0; i < m; ++i) {
                    ++rep.checks;
                    const std::string id = "e" + std::to_string(i + 1);
                    const bool ev = sat(a, id, pairs[fi].first, {}, cache);
                    const bool lv = ltl_sat(trace, static_cast<std::size_t>(i), pairs[fi].second);
                    if (ev != lv) {
                        ++rep.disagreements;
                        if (rep.first_disagreement.empty()) {
                            std::ostringstream os;
                            os << battery[fi].render() << " at position " << i << " of a chain of "
                               << m << " (labeling " << lmask << "): EPTL " << ev << ", LTL " << lv;
                            rep.first_disagreement = os.str();
                        }
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace eptl
