#ifndef NILCOMM_PARTITION_HPP
#define NILCOMM_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace nilcomm {

/* A partition of n: weakly decreasing sequence of positive integers.
 * The empty sequence is the unique partition of 0. Values are immutable
 * after construction; unsorted input is normalized by sorting.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Text form "p1^k1,p2^k2,...": comma-separated parts, each optionally
    // with an exponent, e.g. "6,4^2,3^2,2^2,1". Throws std::invalid_argument
    // naming the offending token.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int total() const { return n_; }
    std::size_t num_parts() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int part(std::size_t i) const { return parts_[i]; }

    // Exponent form, exponent 1 omitted; "" for the empty partition.
    std::string str() const;
    // Plain comma-separated form, e.g. "16,7,2".
    std::string str_flat() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

enum class Dominance { Less, Greater, Equal, Incomparable };

// Transpose of the Young diagram; an involution.
Partition conjugate(const Partition& p);

// Dominance (prefix-sum) order on partitions of the same total.
// Greater means the first argument dominates. Throws std::domain_error
// when totals differ.
Dominance dominance_cmp(const Partition& a, const Partition& b);

// The almost rectangular partition of n with exactly k parts:
// n mod k parts of size floor(n/k)+1 followed by k - n mod k parts of
// size floor(n/k). Throws std::domain_error unless 1 <= k <= n.
Partition almost_rectangular(int n, int k);

// True iff max part - min part <= 1 (single part counts).
bool is_almost_rectangular(const Partition& p);

struct ARSegment {
    int max_part;             // largest part in the segment
    std::vector<int> parts;   // the segment itself, weakly decreasing
};

// Decomposition of a partition into consecutive almost rectangular
// segments; count() is the statistic r_P.
struct ARDecomposition {
    std::vector<ARSegment> segments;
    std::size_t count() const { return segments.size(); }
};

// Greedy left-to-right maximal almost rectangular segmentation. The
// segment count is minimal over all consecutive segmentations.
ARDecomposition ar_decompose(const Partition& p);

// Number of parts of p equal to size (possibly 0).
int count_parts_of_size(const Partition& p, int size);

// The almost rectangular subpartition with greatest part p:
// all parts of size p followed by all parts of size p-1.
// Throws std::domain_error when p is absent.
Partition subpartition_R(const Partition& P, int p);

// True iff consecutive parts differ by at least 2 (fixed points of the
// generic commuting map). Empty and single-part partitions are stable.
bool is_stable(const Partition& p);

} // namespace nilcomm

#endif
