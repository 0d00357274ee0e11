#ifndef NILCOMM_FIBERS_HPP
#define NILCOMM_FIBERS_HPP

#include <map>
#include <vector>

#include "nilcomm/partition.hpp"

namespace nilcomm {

// All partitions of n in reverse-lexicographic order, from (n) down to
// (1^n). Throws std::length_error beyond the bound.
std::vector<Partition> enumerate_partitions(int n, int bound = 40);

// Groups the partitions of n by their image under the generic commuting
// map. Keys are exactly the stable partitions of n.
std::map<Partition, std::vector<Partition>> q_fibers(int n);

// The box dimensions (s_1, ..., s_k) of a stable partition:
// s_i = q_i - q_{i+1} - 1 for i < k, s_k = q_k. Throws std::domain_error
// on non-stable input.
std::vector<int> box_dims(const Partition& q);

/* Per stable partition: the predicted box, the observed fiber, and the
 * two checkable consequences of the box structure (cardinality and the
 * multiset of part counts).
 */
struct BoxReport {
    Partition q;
    std::vector<int> dims;
    long predicted = 0;
    std::vector<Partition> fiber;
    bool cardinality_ok = false;
    bool part_count_ok = false;
    bool ok() const { return cardinality_ok && part_count_ok; }
};

std::vector<BoxReport> check_box(int n);

} // namespace nilcomm

#endif
