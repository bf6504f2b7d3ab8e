#pragma once

#include "eptl/event_graph.hpp"
#include "eptl/formula.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eptl {

enum class DatatypeKind { Mvr, Counter };

/// Operation signatures of the supported replicated datatypes:
///   mvr:     put(v), get() => set
///   counter: inc(),  get() => integer
struct DatatypeSpec {
    DatatypeKind kind = DatatypeKind::Mvr;

    static DatatypeSpec mvr() { return DatatypeSpec{DatatypeKind::Mvr}; }
    static DatatypeSpec counter() { return DatatypeSpec{DatatypeKind::Counter}; }
    /// "mvr" or "counter"; anything else is a ConfigError.
    static DatatypeSpec from_name(const std::string& name);

    std::string name() const { return kind == DatatypeKind::Mvr ? "mvr" : "counter"; }
};

struct GeneratorConfig {
    int replicas = 2;
    int ops = 8;
    std::uint64_t seed = 0;
    DatatypeKind datatype = DatatypeKind::Mvr;
    double merge_probability = 0.3;
};

/// Multi-value register read semantics: the values written by the
/// visibility-maximal put events strictly before `event`. Canonical
/// (sorted, deduplicated) order.
std::vector<Value> mvr_get_oracle(const AbstractExecution& a, const std::string& event);

/// Counter read semantics: the number of inc events strictly before `event`.
std::int64_t counter_get_oracle(const AbstractExecution& a, const std::string& event);

struct ReturnMismatch {
    std::string event;
    Value expected;
    std::optional<Value> recorded;
};

/// Checks every get event's recorded return against the datatype oracle.
/// Empty result means the trace is consistent with the datatype semantics.
/// Throws SchemaError when an operation name or arity is outside the spec.
std::vector<ReturnMismatch> validate_returns(const AbstractExecution& a, const DatatypeSpec& spec);

/// Simulates replicas with causal delivery: each step either merges another
/// replica's known-event set or executes an operation whose visibility
/// predecessors are exactly the executing replica's known set. Deterministic
/// in the seed; the result always passes validate and validate_returns.
AbstractExecution generate(const GeneratorConfig& config);

/// The register requirement checked throughout:
///   G(put(a) => AX((get() contains a) W put(_)))
Formula canonical_mvr_formula();

} // namespace eptl
