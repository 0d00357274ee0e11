#ifndef NILCOMM_ORACLE_HPP
#define NILCOMM_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nilcomm/matrix.hpp"
#include "nilcomm/partition.hpp"

namespace nilcomm {

/* Ground truth for the generic commuting type, independent of the
 * recursive process: build the centralizer of the Jordan matrix, draw
 * random nilpotent elements of it, and take the dominance-maximum of
 * their Jordan types.
 */

struct BasisElement {
    int block_row; // 0-based indices into the part list
    int block_col;
    int shift;     // 0 .. min(p_i, p_j) - 1
};

template <class Field>
struct CentralizerBasis {
    Partition partition;
    std::vector<BasisElement> elements;
    std::vector<DenseMatrix<Field>> matrices; // parallel to elements
};

// Basis of { X : J_P X = X J_P }: one shifted-diagonal matrix per block
// pair (i, j) and shift, min(p_i, p_j) elements per pair.
template <class Field>
CentralizerBasis<Field> centralizer_basis(const Partition& P, Field field);

// Nullspace dimension of the commutation system J_P X - X J_P = 0 in
// n^2 unknowns; the independent check on the basis cardinality.
// Throws std::length_error when n > 16.
template <class Field>
int centralizer_dim_bruteforce(const Partition& P, Field field);

struct NilpotentSample {
    DenseMatrix<PrimeField> matrix;
    std::uint64_t seed;
    Partition jordan_type;
};

struct OracleConfig {
    std::uint64_t prime = 1000003;
    int samples = 8;
    std::uint64_t master_seed = 0x4a433031; // arbitrary fixed default
};

// One random element of the nilpotent commutator of J_P: uniform
// coefficients on the centralizer basis, except that within each group
// of equal parts the shift-0 coefficient matrix is strictly upper
// triangular, which forces nilpotency. Both postconditions (commutation
// and B^n = 0) are verified before returning; a violation throws
// std::logic_error. Requires field modulus > n.
NilpotentSample sample_nilpotent_commuting(const Partition& P, const PrimeField& field,
                                           std::uint64_t seed);

// Dominance-maximum of the Jordan types of `samples` draws with seeds
// derived from master_seed. Throws std::logic_error if a sampled type is
// dominance-incomparable with the running maximum (which would
// contradict maximality of the generic type).
Partition generic_commuting_type(const Partition& P, const PrimeField& field,
                                 int samples, std::uint64_t master_seed);

struct VerifyReport {
    Partition input;
    Partition oblak;  // from the recursive process
    Partition oracle; // from sampling
    bool agree = false;
    bool all_dominated = false; // every sample type <= the process result
    std::vector<std::pair<std::uint64_t, Partition>> sample_types;
};

VerifyReport verify_q(const Partition& P, const OracleConfig& config = {});

// -------- template definitions --------

namespace detail {

// Valid diagonal offsets of a p_i x p_j block commuting with the shift
// blocks on both sides: d = max(0, p_j - p_i) + s for shift s.
inline int diagonal_offset(int rows, int cols, int shift) {
    return (cols > rows ? cols - rows : 0) + shift;
}

} // namespace detail

template <class Field>
CentralizerBasis<Field> centralizer_basis(const Partition& P, Field field) {
    CentralizerBasis<Field> basis;
    basis.partition = P;
    const int n = P.total();
    const auto& parts = P.parts();
    std::vector<int> offsets(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) offsets[i + 1] = offsets[i] + parts[i];

    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            const int m = parts[i], c = parts[j];
            for (int s = 0; s < std::min(m, c); ++s) {
                DenseMatrix<Field> X(n, n, field);
                const int d = detail::diagonal_offset(m, c, s);
                for (int a = 0; a < m && a + d < c; ++a)
                    X.at(offsets[i] + a, offsets[j] + a + d) = field.one();
                basis.elements.push_back(
                    {static_cast<int>(i), static_cast<int>(j), s});
                basis.matrices.push_back(std::move(X));
            }
        }
    return basis;
}

template <class Field>
int centralizer_dim_bruteforce(const Partition& P, Field field) {
    const int n = P.total();
    if (n > 16)
        throw std::length_error("brute-force centralizer dimension is limited to n <= 16");
    auto J = jordan_matrix(P, field);
    // constraint row per entry of J X - X J, column per entry of X
    DenseMatrix<Field> system(n * n, n * n, field);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const int row = r * n + c;
            for (int k = 0; k < n; ++k) {
                system.at(row, k * n + c) =
                    field.add(system.at(row, k * n + c), J.at(r, k));
                system.at(row, r * n + k) =
                    field.sub(system.at(row, r * n + k), J.at(k, c));
            }
        }
    return n * n - system.rank();
}

} // namespace nilcomm

#endif
