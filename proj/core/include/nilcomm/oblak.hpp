#ifndef NILCOMM_OBLAK_HPP
#define NILCOMM_OBLAK_HPP

#include <set>
#include <utility>
#include <vector>

#include "nilcomm/partition.hpp"

namespace nilcomm {

struct OblakStep {
    int chosen_p;       // part size whose U-chain was removed
    long chain_size;    // its cardinality
    Partition residual; // what remains
};

struct OblakTrace {
    Partition input;
    std::vector<OblakStep> steps;
    Partition result; // the chain sizes, weakly decreasing
};

// One removal step: delete all parts of size p and p-1, shorten every
// part > p by 2 (dropping parts that reach 0), keep parts < p-1.
// Returns (chain cardinality, residual). Throws std::domain_error when
// p is not a part.
std::pair<long, Partition> oblak_step(const Partition& P, int p);

// The full process with the deterministic tie-break (smallest maximizing
// part size): remove a maximum U-chain, recurse on the residual; the
// removed cardinalities form the generic commuting type.
OblakTrace oblak_process(const Partition& P);

// The generic commuting type itself.
Partition q_map(const Partition& P);

// Runs the process along every sequence of maximizing choices and
// collects the distinct outcomes (a singleton, by the uniqueness
// theorem). Throws std::length_error when more than trace_cap traces
// would be explored.
std::set<Partition> explore_all_tie_choices(const Partition& P,
                                            std::size_t trace_cap = 10000);

} // namespace nilcomm

#endif
