#include "nilcomm/oblak.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilcomm/poset.hpp"

namespace nilcomm {

std::pair<long, Partition> oblak_step(const Partition& P, int p) {
    long size = u_value(P, p); // throws when p is absent
    std::vector<int> residual;
    for (int part : P.parts()) {
        if (part == p || part == p - 1) continue;
        if (part > p) {
            if (part - 2 > 0) residual.push_back(part - 2);
        } else {
            residual.push_back(part);
        }
    }
    return {size, Partition(std::move(residual))};
}

OblakTrace oblak_process(const Partition& P) {
    OblakTrace trace;
    trace.input = P;
    std::vector<int> sizes;
    Partition current = P;
    while (!current.empty()) {
        int p = max_u_chains(current).front(); // smallest maximizer
        auto [size, residual] = oblak_step(current, p);
        trace.steps.push_back({p, size, residual});
        sizes.push_back(static_cast<int>(size));
        current = std::move(residual);
    }
    trace.result = Partition(std::move(sizes));
    return trace;
}

Partition q_map(const Partition& P) { return oblak_process(P).result; }

namespace {

void explore(const Partition& current, std::vector<int>& sizes,
             std::set<Partition>& results, std::size_t cap, std::size_t& traces) {
    if (current.empty()) {
        if (++traces > cap)
            throw std::length_error("tie exploration exceeded the trace cap");
        results.insert(Partition(sizes));
        return;
    }
    for (int p : max_u_chains(current)) {
        auto [size, residual] = oblak_step(current, p);
        sizes.push_back(static_cast<int>(size));
        explore(residual, sizes, results, cap, traces);
        sizes.pop_back();
    }
}

} // namespace

std::set<Partition> explore_all_tie_choices(const Partition& P, std::size_t trace_cap) {
    std::set<Partition> results;
    std::vector<int> sizes;
    std::size_t traces = 0;
    explore(P, sizes, results, trace_cap, traces);
    return results;
}

} // namespace nilcomm
