#include "nilcomm/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace nilcomm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0)
            throw std::invalid_argument("partition parts must be positive, got " +
                                        std::to_string(p));
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

int parse_int(std::string_view tok, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("malformed partition token '" + std::string(whole) + "'");
    return value;
}

} // namespace

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string_view rest = text;
    // strip surrounding whitespace
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
        rest.remove_prefix(1);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back())))
        rest.remove_suffix(1);
    if (rest.empty()) return Partition{};

    while (true) {
        auto comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        int part, mult = 1;
        if (auto caret = tok.find('^'); caret != std::string_view::npos) {
            part = parse_int(tok.substr(0, caret), tok);
            mult = parse_int(tok.substr(caret + 1), tok);
        } else {
            part = parse_int(tok, tok);
        }
        if (part <= 0 || mult <= 0)
            throw std::invalid_argument("non-positive part in token '" + std::string(tok) + "'");
        parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
        if (rest.empty())
            throw std::invalid_argument("trailing comma in partition text");
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(parts_[i]);
        if (j - i > 1) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

std::string Partition::str_flat() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<int> out;
    if (p.empty()) return Partition{};
    out.resize(static_cast<std::size_t>(p.part(0)), 0);
    for (int part : p.parts())
        for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
}

Dominance dominance_cmp(const Partition& a, const Partition& b) {
    if (a.total() != b.total())
        throw std::domain_error("dominance_cmp requires partitions of the same total");
    if (a == b) return Dominance::Equal;
    long sa = 0, sb = 0;
    bool a_ge = true, b_ge = true;
    std::size_t len = std::max(a.num_parts(), b.num_parts());
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < a.num_parts() ? a.part(i) : 0;
        sb += i < b.num_parts() ? b.part(i) : 0;
        if (sa < sb) a_ge = false;
        if (sb < sa) b_ge = false;
    }
    if (a_ge) return Dominance::Greater;
    if (b_ge) return Dominance::Less;
    return Dominance::Incomparable;
}

Partition almost_rectangular(int n, int k) {
    if (k < 1 || k > n)
        throw std::domain_error("almost_rectangular requires 1 <= k <= n");
    int x = n / k, r = n % k;
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(k));
    parts.insert(parts.end(), static_cast<std::size_t>(r), x + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(k - r), x);
    return Partition(std::move(parts));
}

bool is_almost_rectangular(const Partition& p) {
    if (p.empty()) return true;
    return p.parts().front() - p.parts().back() <= 1;
}

ARDecomposition ar_decompose(const Partition& p) {
    ARDecomposition out;
    const auto& parts = p.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[i] - parts[j] <= 1) ++j;
        out.segments.push_back(
            {parts[i], std::vector<int>(parts.begin() + static_cast<long>(i),
                                        parts.begin() + static_cast<long>(j))});
        i = j;
    }
    return out;
}

int count_parts_of_size(const Partition& p, int size) {
    int count = 0;
    for (int part : p.parts())
        if (part == size) ++count;
    return count;
}

Partition subpartition_R(const Partition& P, int p) {
    int np = count_parts_of_size(P, p);
    if (np == 0)
        throw std::domain_error("subpartition_R: partition has no part of size " +
                                std::to_string(p));
    std::vector<int> parts(static_cast<std::size_t>(np), p);
    if (p > 1)
        parts.insert(parts.end(),
                     static_cast<std::size_t>(count_parts_of_size(P, p - 1)), p - 1);
    return Partition(std::move(parts));
}

bool is_stable(const Partition& p) {
    const auto& parts = p.parts();
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] - parts[i] < 2) return false;
    return true;
}

} // namespace nilcomm
