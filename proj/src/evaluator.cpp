#include "eptl/evaluator.hpp"

#include <algorithm>

namespace eptl {

std::optional<bool> EvalCache::find(const void* node, int event,
                                    const std::vector<std::pair<std::string, Value>>& restricted) const {
    auto it = table_.find(node);
    if (it == table_.end()) return std::nullopt;
    const PerNode& pn = it->second;
    if (restricted.empty()) {
        if (static_cast<std::size_t>(event) < pn.closed.size() && pn.closed[static_cast<std::size_t>(event)] != -1)
            return pn.closed[static_cast<std::size_t>(event)] != 0;
        return std::nullopt;
    }
    auto hit = pn.open.find(OpenKey{event, restricted});
    if (hit == pn.open.end()) return std::nullopt;
    return hit->second;
}

void EvalCache::store(const void* node, int event,
                      const std::vector<std::pair<std::string, Value>>& restricted, bool outcome) {
    PerNode& pn = table_[node];
    if (restricted.empty()) {
        if (pn.closed.size() <= static_cast<std::size_t>(event))
            pn.closed.resize(static_cast<std::size_t>(event) + 1, -1);
        pn.closed[static_cast<std::size_t>(event)] = outcome ? 1 : 0;
        return;
    }
    pn.open.emplace(OpenKey{event, restricted}, outcome);
}

namespace {

std::vector<std::pair<std::string, Value>> restrict_interp(const Interpretation& interp,
                                                           const std::vector<std::string>& fv) {
    std::vector<std::pair<std::string, Value>> out;
    out.reserve(fv.size());
    for (const auto& v : fv) {
        auto it = interp.find(v);
        if (it == interp.end()) throw UnboundVariableError("unbound variable: " + v);
        out.emplace_back(v, it->second);
    }
    return out;
}

class Evaluator {
public:
    Evaluator(const AbstractExecution& a, const Interpretation& interp, EvalCache& cache)
        : a_(a), interp_(interp), cache_(cache) {}

    bool eval(const Formula& f, int e) {
        const auto& fv = f.free_vars();
        std::vector<std::pair<std::string, Value>> restricted;
        if (!fv.empty()) restricted = restrict_interp(interp_, fv);
        if (auto hit = cache_.find(f.identity(), e, restricted)) return *hit;
        const bool out = compute(f, e);
        cache_.store(f.identity(), e, restricted, out);
        return out;
    }

    const AbstractExecution& execution() const { return a_; }

    /// Second until conjunct: every failing-lhs event above `e` must have a
    /// rhs event between `e` and it. Returns the smallest unexcused event.
    std::optional<int> until_violation(const Formula& f, int e) {
        const auto& ups = a_.successor_indices_including(e);
        for (int e3 : ups) {
            if (eval(f.lhs(), e3)) continue;
            bool excused = false;
            for (int e2 : ups) {
                if (a_.leq_idx(e2, e3) && eval(f.rhs(), e2)) {
                    excused = true;
                    break;
                }
            }
            if (!excused) return e3;
        }
        return std::nullopt;
    }

private:
    bool compute(const Formula& f, int e) {
        switch (f.op()) {
        case FormulaOp::True: return true;
        case FormulaOp::False: return false;
        case FormulaOp::Prop: return match_prop(f.proposition(), a_.event_at(e), interp_);
        case FormulaOp::Not: return !eval(f.lhs(), e);
        case FormulaOp::Or: return eval(f.lhs(), e) || eval(f.rhs(), e);
        case FormulaOp::And: return eval(f.lhs(), e) && eval(f.rhs(), e);
        case FormulaOp::Implies: return !eval(f.lhs(), e) || eval(f.rhs(), e);
        case FormulaOp::Ex: {
            for (int s : a_.immediate_successor_indices(e))
                if (eval(f.lhs(), s)) return true;
            return false;
        }
        case FormulaOp::Ax: {
            for (int s : a_.immediate_successor_indices(e))
                if (!eval(f.lhs(), s)) return false;
            return true;
        }
        case FormulaOp::Eventually: {
            for (int s : a_.successor_indices_including(e))
                if (eval(f.lhs(), s)) return true;
            return false;
        }
        case FormulaOp::Always: {
            for (int s : a_.successor_indices_including(e))
                if (!eval(f.lhs(), s)) return false;
            return true;
        }
        case FormulaOp::Until:
            return eval_until(f, e);
        case FormulaOp::WeakUntil: {
            bool lhs_everywhere = true;
            for (int s : a_.successor_indices_including(e))
                if (!eval(f.lhs(), s)) {
                    lhs_everywhere = false;
                    break;
                }
            return lhs_everywhere || eval_until(f, e);
        }
        }
        return false;
    }

    bool eval_until(const Formula& f, int e) {
        const auto& ups = a_.successor_indices_including(e);
        bool any_rhs = false;
        for (int s : ups)
            if (eval(f.rhs(), s)) {
                any_rhs = true;
                break;
            }
        if (!any_rhs) return false;
        return !until_violation(f, e).has_value();
    }

    const AbstractExecution& a_;
    const Interpretation& interp_;
    EvalCache& cache_;
};

struct Diagnosis {
    int event = -1;
    std::vector<std::string> path;
};

// Walks down the failing obligation chain: pick the event witnessing the
// outermost temporal failure, then explain the subformula's failure there.
// Witness choice is deterministic (smallest id first).
class Diagnoser {
public:
    explicit Diagnoser(Evaluator& ev) : ev_(ev), a_(ev.execution()) {}

    Diagnosis run(const Formula& f, int e) {
        Diagnosis d;
        refine(f, e, d);
        return d;
    }

private:
    void refine(const Formula& f, int e, Diagnosis& d) {
        switch (f.op()) {
        case FormulaOp::True:
            d.path.push_back("true");
            d.event = e;
            return;
        case FormulaOp::False:
            d.path.push_back("false");
            d.event = e;
            return;
        case FormulaOp::Prop:
            d.path.push_back(f.proposition().to_string());
            d.event = e;
            return;
        case FormulaOp::Not:
            d.path.push_back("!");
            d.event = e;
            return;
        case FormulaOp::Or:
            d.path.push_back("|");
            refine(f.lhs(), e, d);
            return;
        case FormulaOp::And:
            d.path.push_back("&");
            if (!ev_.eval(f.lhs(), e)) refine(f.lhs(), e, d);
            else refine(f.rhs(), e, d);
            return;
        case FormulaOp::Implies:
            d.path.push_back("=>");
            refine(f.rhs(), e, d);
            return;
        case FormulaOp::Ex: {
            d.path.push_back("EX");
            const auto& succ = a_.immediate_successor_indices(e);
            if (succ.empty()) {
                d.event = e;
                return;
            }
            refine(f.lhs(), succ.front(), d);
            return;
        }
        case FormulaOp::Ax: {
            d.path.push_back("AX");
            for (int s : a_.immediate_successor_indices(e))
                if (!ev_.eval(f.lhs(), s)) {
                    refine(f.lhs(), s, d);
                    return;
                }
            d.event = e;
            return;
        }
        case FormulaOp::Eventually:
            // No single witness: nothing above e satisfies the operand.
            d.path.push_back("F");
            d.event = e;
            return;
        case FormulaOp::Always: {
            d.path.push_back("G");
            for (int s : a_.successor_indices_including(e))
                if (!ev_.eval(f.lhs(), s)) {
                    refine(f.lhs(), s, d);
                    return;
                }
            d.event = e;
            return;
        }
        case FormulaOp::Until:
        case FormulaOp::WeakUntil: {
            d.path.push_back(f.op() == FormulaOp::Until ? "U" : "W");
            if (auto e3 = ev_.until_violation(f, e)) {
                refine(f.lhs(), *e3, d);
                return;
            }
            // Until failing only the existential conjunct: no rhs anywhere.
            d.event = e;
            return;
        }
        }
    }

    Evaluator& ev_;
    const AbstractExecution& a_;
};

void scan_integers(const Value& v, bool& any, std::int64_t& max_seen) {
    if (v.kind() == Value::Kind::Integer) {
        if (!any || v.as_integer() > max_seen) max_seen = v.as_integer();
        any = true;
        return;
    }
    if (v.is_set())
        for (const auto& m : v.members()) scan_integers(m, any, max_seen);
}

} // namespace

std::vector<Value> default_domain(const AbstractExecution& a) {
    std::vector<Value> dom;
    bool any_int = false;
    std::int64_t max_int = 0;
    for (const auto& ev : a.events()) {
        for (const auto& arg : ev.op.args) {
            dom.push_back(arg);
            scan_integers(arg, any_int, max_int);
        }
        if (ev.op.ret) {
            scan_integers(*ev.op.ret, any_int, max_int);
            if (ev.op.ret->is_set())
                for (const auto& m : ev.op.ret->members()) dom.push_back(m);
        }
    }
    // The fresh value stands in for "anything never observed": binding a
    // variable to it falsifies every variable pattern, covering the rest of
    // the unbounded value universe.
    dom.push_back(Value::integer(any_int ? max_int + 1 : 0));
    std::sort(dom.begin(), dom.end());
    dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
    return dom;
}

bool sat(const AbstractExecution& a, const std::string& event, const Formula& f,
         const Interpretation& interp) {
    EvalCache cache;
    return sat(a, event, f, interp, cache);
}

bool sat(const AbstractExecution& a, const std::string& event, const Formula& f,
         const Interpretation& interp, EvalCache& cache) {
    Evaluator ev(a, interp, cache);
    return ev.eval(f, a.index_of(event));
}

std::optional<std::string> diagnose(const AbstractExecution& a, const std::string& event,
                                    const Formula& f, const Interpretation& interp) {
    EvalCache cache;
    Evaluator ev(a, interp, cache);
    const int e = a.index_of(event);
    if (ev.eval(f, e)) return std::nullopt;
    Diagnosis d = Diagnoser(ev).run(f, e);
    return a.event_at(d.event).id;
}

Verdict check_execution(const AbstractExecution& a, const Formula& f,
                        const std::optional<std::vector<Value>>& domain) {
    const auto& fv = f.free_vars();
    std::vector<Value> dom;
    if (domain) {
        dom = *domain;
        std::sort(dom.begin(), dom.end());
        dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
    } else {
        dom = default_domain(a);
    }
    if (!fv.empty() && dom.empty())
        throw EmptyDomainError("formula has free variables but the interpretation domain is empty");

    Verdict verdict;
    EvalCache cache;
    std::vector<std::size_t> idx(fv.size(), 0);
    auto advance = [&]() {
        for (std::size_t i = idx.size(); i-- > 0;) {
            if (++idx[i] < dom.size()) return true;
            idx[i] = 0;
        }
        return false;
    };

    do {
        Interpretation interp;
        for (std::size_t i = 0; i < fv.size(); ++i) interp[fv[i]] = dom[idx[i]];
        Evaluator ev(a, interp, cache);
        for (int s : a.starting_indices()) {
            if (ev.eval(f, s)) continue;
            Diagnosis d = Diagnoser(ev).run(f, s);
            verdict.failures.push_back(Failure{a.event_at(s).id, interp, d.path,
                                               a.event_at(d.event).id});
        }
    } while (advance());

    verdict.satisfied = verdict.failures.empty();
    return verdict;
}

} // namespace eptl
