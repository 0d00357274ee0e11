#include "nilcomm/fibers.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilcomm/oblak.hpp"

namespace nilcomm {

std::vector<Partition> enumerate_partitions(int n, int bound) {
    if (n < 0) throw std::domain_error("cannot enumerate partitions of a negative total");
    if (n > bound)
        throw std::length_error("partition enumeration limited to n <= " +
                                std::to_string(bound));
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> a{n};
    while (true) {
        out.emplace_back(a);
        // rightmost part that can still shrink
        int i = static_cast<int>(a.size()) - 1;
        while (i >= 0 && a[static_cast<std::size_t>(i)] == 1) --i;
        if (i < 0) break;
        int remaining = a[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < a.size(); ++j)
            remaining += a[j];
        int x = a[static_cast<std::size_t>(i)] - 1;
        a.resize(static_cast<std::size_t>(i));
        while (remaining > 0) {
            a.push_back(std::min(x, remaining));
            remaining -= x;
        }
    }
    return out;
}

std::map<Partition, std::vector<Partition>> q_fibers(int n) {
    std::map<Partition, std::vector<Partition>> fibers;
    for (const auto& p : enumerate_partitions(n)) fibers[q_map(p)].push_back(p);
    return fibers;
}

std::vector<int> box_dims(const Partition& q) {
    if (!is_stable(q))
        throw std::domain_error("box dimensions are defined for stable partitions only");
    std::vector<int> dims;
    const auto& parts = q.parts();
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        dims.push_back(parts[i] - parts[i + 1] - 1);
    if (!parts.empty()) dims.push_back(parts.back());
    return dims;
}

std::vector<BoxReport> check_box(int n) {
    std::vector<BoxReport> reports;
    for (auto& [q, fiber] : q_fibers(n)) {
        BoxReport report;
        report.q = q;
        report.dims = box_dims(q);
        report.predicted = 1;
        for (int s : report.dims) report.predicted *= s;
        report.fiber = fiber;
        report.cardinality_ok = static_cast<long>(fiber.size()) == report.predicted;

        // multiset of predicted part counts: sums i_1 + ... + i_k over
        // the box, by convolution
        std::vector<long> counts{1}; // counts[s] = #cells with sum s (offset 0)
        for (int s : report.dims) {
            std::vector<long> next(counts.size() + static_cast<std::size_t>(s), 0);
            for (std::size_t i = 0; i < counts.size(); ++i)
                for (int j = 1; j <= s; ++j)
                    next[i + static_cast<std::size_t>(j)] += counts[i];
            counts = std::move(next);
        }
        std::vector<long> observed(counts.size(), 0);
        bool in_range = true;
        for (const auto& p : fiber) {
            if (p.num_parts() >= observed.size()) {
                in_range = false;
                break;
            }
            ++observed[p.num_parts()];
        }
        report.part_count_ok = in_range && observed == counts;
        reports.push_back(std::move(report));
    }
    return reports;
}

} // namespace nilcomm
