#include "eptl/datatypes.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace eptl {

DatatypeSpec DatatypeSpec::from_name(const std::string& name) {
    if (name == "mvr") return mvr();
    if (name == "counter") return counter();
    throw ConfigError("unknown datatype '" + name + "' (expected mvr or counter)");
}

std::vector<Value> mvr_get_oracle(const AbstractExecution& a, const std::string& event) {
    const int e = a.index_of(event);
    std::vector<int> puts;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        if (a.lt_idx(i, e) && a.event_at(i).op.name == "put") puts.push_back(i);

    std::vector<Value> values;
    for (int p : puts) {
        bool dominated = false;
        for (int q : puts)
            if (a.lt_idx(p, q)) {
                dominated = true;
                break;
            }
        if (!dominated && !a.event_at(p).op.args.empty())
            values.push_back(a.event_at(p).op.args.front());
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::int64_t counter_get_oracle(const AbstractExecution& a, const std::string& event) {
    const int e = a.index_of(event);
    std::int64_t count = 0;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        if (a.lt_idx(i, e) && a.event_at(i).op.name == "inc") ++count;
    return count;
}

namespace {

void check_schema(const Event& ev, const DatatypeSpec& spec) {
    const auto& op = ev.op;
    const bool is_get = op.name == "get" && op.args.empty();
    const bool is_update = spec.kind == DatatypeKind::Mvr
                               ? (op.name == "put" && op.args.size() == 1)
                               : (op.name == "inc" && op.args.empty());
    if (!is_get && !is_update) {
        std::ostringstream os;
        os << "event " << ev.id << ": operation " << op.name << "/" << op.args.size()
           << " is not part of the " << spec.name() << " datatype";
        throw SchemaError(os.str());
    }
}

} // namespace

std::vector<ReturnMismatch> validate_returns(const AbstractExecution& a, const DatatypeSpec& spec) {
    std::vector<ReturnMismatch> mismatches;
    for (const auto& ev : a.events()) {
        check_schema(ev, spec);
        if (ev.op.name != "get") continue;
        Value expected = spec.kind == DatatypeKind::Mvr
                             ? Value::set(mvr_get_oracle(a, ev.id))
                             : Value::integer(counter_get_oracle(a, ev.id));
        if (!ev.op.ret || *ev.op.ret != expected)
            mismatches.push_back(ReturnMismatch{ev.id, std::move(expected), ev.op.ret});
    }
    return mismatches;
}

namespace {

std::string event_id(int n, int width) {
    std::string digits = std::to_string(n);
    while (static_cast<int>(digits.size()) < width) digits.insert(digits.begin(), '0');
    return "e" + digits;
}

// mt19937_64 output is pinned by the standard; drawing via modulo keeps the
// generator reproducible across platforms (std distributions are not).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

AbstractExecution generate(const GeneratorConfig& config) {
    if (config.replicas < 1) throw ConfigError("replicas must be positive");
    if (config.ops < 1) throw ConfigError("ops must be positive");
    if (config.merge_probability < 0.0 || config.merge_probability > 1.0)
        throw ConfigError("merge_probability must be in [0,1]");
    if (config.merge_probability >= 1.0 && config.replicas > 1)
        throw ConfigError("merge_probability 1 with multiple replicas never executes an operation");

    std::mt19937_64 rng(config.seed);
    const int width = static_cast<int>(std::max<std::size_t>(3, std::to_string(config.ops).size()));

    std::vector<std::set<int>> known(static_cast<std::size_t>(config.replicas));
    std::vector<std::set<int>> past;  // strict past of each created event
    std::vector<Event> events;
    std::vector<std::pair<std::string, std::string>> vis;

    int created = 0;
    while (created < config.ops) {
        const auto r = static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(config.replicas)));
        if (config.replicas > 1 && draw_unit(rng) < config.merge_probability) {
            auto other = static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(config.replicas - 1)));
            if (other >= r) ++other;
            known[r].insert(known[other].begin(), known[other].end());
            continue;
        }

        Event ev;
        ev.id = event_id(created + 1, width);
        ev.replica = "r" + std::to_string(r + 1);
        const bool is_get = draw(rng, 2) == 1;
        if (is_get) {
            ev.op.name = "get";
            if (config.datatype == DatatypeKind::Mvr) {
                // Visibility-maximal puts among the replica's known events.
                std::vector<int> puts;
                for (int pred : known[r])
                    if (events[static_cast<std::size_t>(pred)].op.name == "put") puts.push_back(pred);
                std::vector<Value> values;
                for (int p : puts) {
                    bool dominated = false;
                    for (int q : puts)
                        if (past[static_cast<std::size_t>(q)].count(p)) {
                            dominated = true;
                            break;
                        }
                    if (!dominated) values.push_back(events[static_cast<std::size_t>(p)].op.args.front());
                }
                ev.op.ret = Value::set(std::move(values));
            } else {
                std::int64_t incs = 0;
                for (int pred : known[r])
                    if (events[static_cast<std::size_t>(pred)].op.name == "inc") ++incs;
                ev.op.ret = Value::integer(incs);
            }
        } else if (config.datatype == DatatypeKind::Mvr) {
            ev.op.name = "put";
            ev.op.args.push_back(Value::integer(static_cast<std::int64_t>(draw(rng, 10))));
        } else {
            ev.op.name = "inc";
        }

        for (int pred : known[r])
            vis.emplace_back(events[static_cast<std::size_t>(pred)].id, ev.id);

        past.push_back(known[r]);
        events.push_back(std::move(ev));
        known[r].insert(created);
        ++created;
    }

    return AbstractExecution::validate(std::move(events), vis);
}

Formula canonical_mvr_formula() {
    return parse("G(put(a) => AX((get() contains a) W put(_)))");
}

} // namespace eptl
