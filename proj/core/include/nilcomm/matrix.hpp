#ifndef NILCOMM_MATRIX_HPP
#define NILCOMM_MATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nilcomm/partition.hpp"

namespace nilcomm {

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

/* Arithmetic mod a prime q. Elements are canonical residues in [0, q).
 * q must stay below 2^31 so products fit in unsigned 64-bit.
 */
class PrimeField {
public:
    using value_type = std::uint64_t;

    explicit PrimeField(std::uint64_t q) : q_(q) {
        if (q >= (1ull << 31))
            throw std::domain_error("prime modulus must be below 2^31");
        if (!is_prime_u64(q))
            throw std::domain_error(std::to_string(q) + " is not prime");
    }

    std::uint64_t modulus() const { return q_; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long x) const {
        long long r = x % static_cast<long long>(q_);
        return static_cast<value_type>(r < 0 ? r + static_cast<long long>(q_) : r);
    }
    value_type add(value_type a, value_type b) const {
        value_type s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + q_ - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : q_ - a; }
    value_type mul(value_type a, value_type b) const { return a * b % q_; }
    value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        // Fermat: a^(q-2)
        value_type result = 1, base = a;
        for (std::uint64_t e = q_ - 2; e; e >>= 1) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    }

private:
    std::uint64_t q_;
};

/* Exact rational arithmetic; the cross-check field for small sizes. */
class Rationals {
public:
    using value_type = boost::multiprecision::cpp_rational;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long x) const { return x; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
};

/* Dense matrix over one of the fields above. Immutable in spirit: all
 * operations return fresh values.
 */
template <class Field>
class DenseMatrix {
public:
    using value_type = typename Field::value_type;

    DenseMatrix(int rows, int cols, Field field)
        : rows_(rows), cols_(cols), field_(std::move(field)),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
             value_type{}) {}

    static DenseMatrix identity(int n, Field field) {
        DenseMatrix m(n, n, field);
        for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    value_type& at(int r, int c) {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }
    const value_type& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != value_type{}) return false;
        return true;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    DenseMatrix operator*(const DenseMatrix& other) const {
        if (cols_ != other.rows_)
            throw std::domain_error("matrix product dimension mismatch");
        DenseMatrix out(rows_, other.cols_, field_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const value_type& x = at(i, k);
                if (x == value_type{}) continue;
                for (int j = 0; j < other.cols_; ++j)
                    out.at(i, j) =
                        field_.add(out.at(i, j), field_.mul(x, other.at(k, j)));
            }
        return out;
    }

    DenseMatrix operator-(const DenseMatrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::domain_error("matrix difference dimension mismatch");
        DenseMatrix out(rows_, cols_, field_);
        for (std::size_t i = 0; i < a_.size(); ++i)
            out.a_[i] = field_.sub(a_[i], other.a_[i]);
        return out;
    }

    DenseMatrix pow(int e) const {
        if (rows_ != cols_) throw std::domain_error("matrix power requires square");
        DenseMatrix result = identity(rows_, field_);
        DenseMatrix base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) result = result * base;
            if (e > 1) base = base * base;
        }
        return result;
    }

    // Exact rank by Gaussian elimination on a scratch copy.
    int rank() const {
        std::vector<value_type> a = a_;
        auto entry = [&](int r, int c) -> value_type& {
            return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                     static_cast<std::size_t>(c)];
        };
        int rank = 0;
        for (int col = 0; col < cols_ && rank < rows_; ++col) {
            int pivot = -1;
            for (int r = rank; r < rows_; ++r)
                if (entry(r, col) != value_type{}) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            for (int c = col; c < cols_; ++c) std::swap(entry(rank, c), entry(pivot, c));
            value_type inv = field_.inv(entry(rank, col));
            for (int r = rank + 1; r < rows_; ++r) {
                if (entry(r, col) == value_type{}) continue;
                value_type factor = field_.mul(entry(r, col), inv);
                for (int c = col; c < cols_; ++c)
                    entry(r, c) = field_.sub(entry(r, c),
                                             field_.mul(factor, entry(rank, c)));
            }
            ++rank;
        }
        return rank;
    }

private:
    int rows_, cols_;
    Field field_;
    std::vector<value_type> a_;
};

// Block-diagonal nilpotent Jordan matrix, upper triangular blocks,
// ordered by weakly decreasing part size.
template <class Field>
DenseMatrix<Field> jordan_matrix(const Partition& P, Field field) {
    const int n = P.total();
    DenseMatrix<Field> J(n, n, field);
    int offset = 0;
    for (int part : P.parts()) {
        for (int i = 0; i + 1 < part; ++i)
            J.at(offset + i, offset + i + 1) = field.one();
        offset += part;
    }
    return J;
}

// Jordan type from the rank sequence of powers: the difference sequence
// of ranks is conjugate to the type. Throws std::domain_error (naming
// the offending power) when the input is not nilpotent.
template <class Field>
Partition jordan_type(const DenseMatrix<Field>& M) {
    if (M.rows() != M.cols())
        throw std::domain_error("jordan_type requires a square matrix");
    const int n = M.rows();
    if (n == 0) return Partition{};
    std::vector<int> diffs;
    DenseMatrix<Field> power = M;
    int prev_rank = n;
    for (int k = 1; prev_rank > 0; ++k) {
        int r = power.rank();
        if (r >= prev_rank)
            throw std::domain_error("matrix is not nilpotent: rank of power " +
                                    std::to_string(k) + " did not decrease");
        diffs.push_back(prev_rank - r);
        prev_rank = r;
        if (r > 0) power = power * M;
    }
    return conjugate(Partition(std::move(diffs)));
}

// rank of the k-th power of a single n x n Jordan block: max(n - k, 0).
inline int jordan_power_rank(int n, int k) {
    if (k == 0) return n;
    return n - k > 0 ? n - k : 0;
}

} // namespace nilcomm

#endif
