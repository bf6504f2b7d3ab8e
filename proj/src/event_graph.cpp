#include "eptl/event_graph.hpp"

#include <algorithm>
#include <sstream>

namespace eptl {

std::string OperationRecord::label() const {
    std::ostringstream os;
    os << name << '(';
    bool first = true;
    for (const auto& a : args) {
        if (!first) os << ',';
        first = false;
        os << a.to_string();
    }
    os << ')';
    if (ret) os << " => " << ret->to_string();
    return os.str();
}

AbstractExecution AbstractExecution::validate(std::vector<Event> raw_events,
                                              const std::vector<std::pair<std::string, std::string>>& raw_vis) {
    AbstractExecution out;
    std::sort(raw_events.begin(), raw_events.end(),
              [](const Event& a, const Event& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < raw_events.size(); ++i) {
        if (raw_events[i].id == raw_events[i - 1].id)
            throw DuplicateIdError("duplicate event id: " + raw_events[i].id);
    }
    out.events_ = std::move(raw_events);
    const std::size_t n = out.events_.size();
    for (std::size_t i = 0; i < n; ++i)
        out.index_[out.events_[i].id] = static_cast<int>(i);

    out.closure_.assign(n, std::vector<unsigned char>(n, 0));
    for (const auto& [from, to] : raw_vis) {
        auto f = out.index_.find(from);
        auto t = out.index_.find(to);
        if (f == out.index_.end())
            throw UnknownIdError("visibility edge references unknown event: " + from);
        if (t == out.index_.end())
            throw UnknownIdError("visibility edge references unknown event: " + to);
        out.closure_[static_cast<std::size_t>(f->second)][static_cast<std::size_t>(t->second)] = 1;
    }

    // Warshall closure, then irreflexivity. A cycle of any length puts an
    // event above itself, so one diagonal scan covers reflexive input edges,
    // 2-cycles and longer cycles alike.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!out.closure_[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (out.closure_[k][j]) out.closure_[i][j] = 1;
        }
    for (std::size_t i = 0; i < n; ++i)
        if (out.closure_[i][i])
            throw CycleError("visibility closure is not a strict partial order (cycle through " +
                             out.events_[i].id + ")");

    // Reduction: closure edges with no witness in between. Unique for a DAG.
    out.reduction_succ_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!out.closure_[i][j]) continue;
            bool composite = false;
            for (std::size_t k = 0; k < n && !composite; ++k)
                composite = out.closure_[i][k] && out.closure_[k][j];
            if (!composite) out.reduction_succ_[i].push_back(static_cast<int>(j));
        }

    out.succ_including_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        out.succ_including_[i].push_back(static_cast<int>(i));
        for (std::size_t j = 0; j < n; ++j)
            if (out.closure_[i][j]) out.succ_including_[i].push_back(static_cast<int>(j));
        std::sort(out.succ_including_[i].begin(), out.succ_including_[i].end());
    }

    for (std::size_t j = 0; j < n; ++j) {
        bool has_pred = false;
        bool has_succ = false;
        for (std::size_t i = 0; i < n; ++i) {
            has_pred = has_pred || out.closure_[i][j];
            has_succ = has_succ || out.closure_[j][i];
        }
        if (!has_pred) out.starting_.push_back(static_cast<int>(j));
        if (!has_succ) out.last_.push_back(static_cast<int>(j));
    }
    return out;
}

int AbstractExecution::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownIdError("unknown event id: " + id);
    return it->second;
}

bool AbstractExecution::leq(const std::string& e1, const std::string& e2) const {
    return leq_idx(index_of(e1), index_of(e2));
}

bool AbstractExecution::lt(const std::string& e1, const std::string& e2) const {
    return lt_idx(index_of(e1), index_of(e2));
}

bool AbstractExecution::concurrent(const std::string& e1, const std::string& e2) const {
    int a = index_of(e1);
    int b = index_of(e2);
    return a != b && !lt_idx(a, b) && !lt_idx(b, a);
}

std::set<std::string> AbstractExecution::starting_events() const {
    std::set<std::string> out;
    for (int i : starting_) out.insert(events_[static_cast<std::size_t>(i)].id);
    return out;
}

std::set<std::string> AbstractExecution::last_events() const {
    std::set<std::string> out;
    for (int i : last_) out.insert(events_[static_cast<std::size_t>(i)].id);
    return out;
}

std::set<std::string> AbstractExecution::immediate_successors(const std::string& e) const {
    std::set<std::string> out;
    for (int i : reduction_succ_[static_cast<std::size_t>(index_of(e))])
        out.insert(events_[static_cast<std::size_t>(i)].id);
    return out;
}

std::set<std::string> AbstractExecution::successors_including(const std::string& e) const {
    std::set<std::string> out;
    for (int i : succ_including_[static_cast<std::size_t>(index_of(e))])
        out.insert(events_[static_cast<std::size_t>(i)].id);
    return out;
}

std::vector<std::pair<std::string, std::string>> AbstractExecution::reduction_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < events_.size(); ++i)
        for (int j : reduction_succ_[i])
            out.emplace_back(events_[i].id, events_[static_cast<std::size_t>(j)].id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::string, std::string>> AbstractExecution::closure_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < events_.size(); ++i)
        for (std::size_t j = 0; j < events_.size(); ++j)
            if (closure_[i][j]) out.emplace_back(events_[i].id, events_[j].id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::string>> AbstractExecution::linear_extensions(std::size_t max_events) const {
    const std::size_t n = events_.size();
    if (n > max_events)
        throw TooLargeError("refusing to enumerate linear extensions of " + std::to_string(n) +
                            " events (bound " + std::to_string(max_events) + ")");
    std::vector<int> indegree(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (int j : reduction_succ_[i]) indegree[static_cast<std::size_t>(j)]++;

    std::vector<std::vector<std::string>> result;
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    order.reserve(n);

    // Backtracking over zero-indegree events in ascending index order; event
    // indices follow sorted ids, so the output is lexicographic.
    auto rec = [&](auto&& self) -> void {
        if (order.size() == n) {
            std::vector<std::string> seq;
            seq.reserve(n);
            for (int i : order) seq.push_back(events_[static_cast<std::size_t>(i)].id);
            result.push_back(std::move(seq));
            return;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (placed[i] || indegree[i] != 0) continue;
            placed[i] = 1;
            order.push_back(static_cast<int>(i));
            for (int j : reduction_succ_[i]) indegree[static_cast<std::size_t>(j)]--;
            self(self);
            for (int j : reduction_succ_[i]) indegree[static_cast<std::size_t>(j)]++;
            order.pop_back();
            placed[i] = 0;
        }
    };
    rec(rec);
    return result;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string AbstractExecution::to_dot() const {
    std::ostringstream os;
    os << "digraph abstract_execution {\n";
    os << "  rankdir=LR;\n";
    for (const auto& e : events_)
        os << "  \"" << dot_escape(e.id) << "\" [label=\"" << dot_escape(e.op.label()) << "\"];\n";
    for (const auto& [from, to] : reduction_edges())
        os << "  \"" << dot_escape(from) << "\" -> \"" << dot_escape(to) << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace eptl
