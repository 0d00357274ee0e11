#ifndef NILCOMM_POSET_HPP
#define NILCOMM_POSET_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "nilcomm/partition.hpp"

namespace nilcomm {

/* Vertex (u, p, k): u-th position in the k-th row of the group of rows
 * with part size p. 1-based throughout; the triple is unique within one
 * poset since part sizes index the groups.
 */
struct PosetVertex {
    int u;
    int p;
    int k;
    friend bool operator==(const PosetVertex&, const PosetVertex&) = default;
    friend std::strong_ordering operator<=>(const PosetVertex&, const PosetVertex&) = default;
};

std::string to_string(const PosetVertex& v); // "(u,p,k)"

enum class EdgeFamily { Down, UpShift, WithinGroup, Isolated };

struct PosetEdge {
    int from; // vertex indices
    int to;
    EdgeFamily family;
};

/* The covering-edge digraph of the poset attached to a partition: one
 * vertex per cell, rows weakly decreasing top to bottom, with four edge
 * families between adjacent part-size groups, within equal-part groups,
 * and along rows of isolated parts. v > w iff a directed path v -> w
 * exists. Immutable after build; reachability is precomputed.
 */
class PosetDP {
public:
    static PosetDP build(const Partition& p);

    const Partition& partition() const { return partition_; }
    const std::vector<PosetVertex>& vertices() const { return vertices_; }
    const std::vector<PosetEdge>& edges() const { return edges_; }

    // Index of a vertex; throws std::domain_error when absent.
    int index_of(const PosetVertex& v) const;

    // Directed path from vertex index a to b (true when a == b).
    bool reachable(int a, int b) const;

    // Comparable in the poset order: a path in either direction.
    bool comparable(const PosetVertex& a, const PosetVertex& b) const;

    bool is_acyclic() const { return acyclic_; }

private:
    Partition partition_;
    std::vector<PosetVertex> vertices_;
    std::vector<PosetEdge> edges_;
    std::vector<std::vector<std::uint64_t>> closure_; // row-per-vertex bitsets
    bool acyclic_ = true;

    void compute_closure();
};

/* The chain U_P(p): all vertices of the rows of R_P(p) plus the first and
 * last vertex of every strictly longer row.
 */
struct UChain {
    int p = 0;
    std::vector<PosetVertex> vertices;
    long cardinality = 0;
};

// Closed form p*N(p) + (p-1)*N(p-1) + 2*#{parts > p}.
// Throws std::domain_error when p is not a part of P.
long u_value(const Partition& P, int p);

UChain u_chain(const Partition& P, int p);

// All part sizes whose U-chain cardinality is maximal, ascending.
std::vector<int> max_u_chains(const Partition& P);

// Gansner's partition of the poset: difference sequence of c_k, the
// maximum number of vertices coverable by a union of k chains. Exact,
// via min-cost flow on the transitive closure. Throws std::domain_error
// when the vertex count exceeds vertex_bound.
Partition greene_kleitman_lambda(const PosetDP& D, int vertex_bound = 64);

// DOT rendering; families styled to match the usual figures, highlighted
// chain vertices drawn boxed.
std::string to_dot(const PosetDP& D, const UChain* highlight = nullptr);

} // namespace nilcomm

#endif
