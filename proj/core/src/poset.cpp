#include "nilcomm/poset.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>

namespace nilcomm {

std::string to_string(const PosetVertex& v) {
    return "(" + std::to_string(v.u) + "," + std::to_string(v.p) + "," +
           std::to_string(v.k) + ")";
}

namespace {

struct Group {
    int p;      // part size
    int mult;   // number of rows
    int offset; // index of vertex (1, p, 1)
};

std::vector<Group> part_groups(const Partition& P) {
    std::vector<Group> groups;
    int offset = 0;
    const auto& parts = P.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        groups.push_back({parts[i], static_cast<int>(j - i), offset});
        offset += parts[i] * static_cast<int>(j - i);
        i = j;
    }
    return groups;
}

} // namespace

PosetDP PosetDP::build(const Partition& P) {
    PosetDP D;
    D.partition_ = P;
    auto groups = part_groups(P);

    for (const auto& g : groups)
        for (int k = 1; k <= g.mult; ++k)
            for (int u = 1; u <= g.p; ++u) D.vertices_.push_back({u, g.p, k});

    auto index = [&groups](int p, int k, int u) {
        for (const auto& g : groups)
            if (g.p == p) return g.offset + (k - 1) * g.p + (u - 1);
        throw std::domain_error("no group with part size " + std::to_string(p));
    };

    const int t = static_cast<int>(groups.size());
    for (int i = 0; i < t; ++i) {
        const auto& g = groups[i];
        // edges between adjacent distinct part sizes
        if (i + 1 < t) {
            const auto& h = groups[i + 1];
            for (int u = 1; u <= h.p; ++u) {
                D.edges_.push_back({index(g.p, 1, u), index(h.p, h.mult, u),
                                    EdgeFamily::Down});
                D.edges_.push_back({index(h.p, 1, u),
                                    index(g.p, g.mult, u + g.p - h.p),
                                    EdgeFamily::UpShift});
            }
        }
        // each row points to the row above it within its group
        for (int k = 2; k <= g.mult; ++k)
            for (int u = 1; u <= g.p; ++u)
                D.edges_.push_back({index(g.p, k, u), index(g.p, k - 1, u),
                                    EdgeFamily::WithinGroup});
        // isolated part: neighbors differ by more than 1 (boundary
        // convention p_0 = +inf, p_{t+1} = 0)
        bool gap_above = i == 0 || groups[i - 1].p - g.p > 1;
        int below = i + 1 < t ? groups[i + 1].p : 0;
        if (gap_above && g.p - below > 1)
            for (int u = 1; u < g.p; ++u)
                D.edges_.push_back({index(g.p, 1, u), index(g.p, g.mult, u + 1),
                                    EdgeFamily::Isolated});
    }

    D.compute_closure();
    return D;
}

void PosetDP::compute_closure() {
    const std::size_t n = vertices_.size();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<int>> adj(n);
    std::vector<int> indeg(n, 0);
    for (const auto& e : edges_) {
        adj[static_cast<std::size_t>(e.from)].push_back(e.to);
        ++indeg[static_cast<std::size_t>(e.to)];
    }

    // Kahn order; a leftover vertex means a cycle.
    std::vector<int> order;
    order.reserve(n);
    std::deque<int> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(static_cast<int>(v));
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int w : adj[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
    acyclic_ = order.size() == n;

    closure_.assign(n, std::vector<std::uint64_t>(words, 0));
    for (std::size_t v = 0; v < n; ++v) closure_[v][v / 64] |= 1ull << (v % 64);
    if (acyclic_) {
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto& row = closure_[static_cast<std::size_t>(*it)];
            for (int w : adj[static_cast<std::size_t>(*it)])
                for (std::size_t b = 0; b < words; ++b)
                    row[b] |= closure_[static_cast<std::size_t>(w)][b];
        }
    } else {
        // BFS fallback; only reachable from tests probing non-DAG inputs
        for (std::size_t s = 0; s < n; ++s) {
            std::deque<int> bfs{static_cast<int>(s)};
            while (!bfs.empty()) {
                int v = bfs.front();
                bfs.pop_front();
                for (int w : adj[static_cast<std::size_t>(v)]) {
                    auto& word = closure_[s][static_cast<std::size_t>(w) / 64];
                    std::uint64_t bit = 1ull << (w % 64);
                    if (!(word & bit)) {
                        word |= bit;
                        bfs.push_back(w);
                    }
                }
            }
        }
    }
}

int PosetDP::index_of(const PosetVertex& v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end())
        throw std::domain_error("vertex " + to_string(v) + " is not in this poset");
    return static_cast<int>(it - vertices_.begin());
}

bool PosetDP::reachable(int a, int b) const {
    return (closure_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) / 64] >>
            (b % 64)) & 1;
}

bool PosetDP::comparable(const PosetVertex& a, const PosetVertex& b) const {
    int ia = index_of(a), ib = index_of(b);
    return reachable(ia, ib) || reachable(ib, ia);
}

long u_value(const Partition& P, int p) {
    int np = count_parts_of_size(P, p);
    if (np == 0)
        throw std::domain_error("partition has no part of size " + std::to_string(p));
    long longer = 0;
    for (int part : P.parts())
        if (part > p) ++longer;
    return static_cast<long>(p) * np +
           static_cast<long>(p - 1) * count_parts_of_size(P, p - 1) + 2 * longer;
}

UChain u_chain(const Partition& P, int p) {
    UChain chain;
    chain.p = p;
    chain.cardinality = u_value(P, p); // throws when p is absent
    for (const auto& g : part_groups(P)) {
        if (g.p == p || g.p == p - 1) {
            for (int k = 1; k <= g.mult; ++k)
                for (int u = 1; u <= g.p; ++u) chain.vertices.push_back({u, g.p, k});
        } else if (g.p > p) {
            for (int k = 1; k <= g.mult; ++k) {
                chain.vertices.push_back({1, g.p, k});
                chain.vertices.push_back({g.p, g.p, k});
            }
        }
    }
    assert(static_cast<long>(chain.vertices.size()) == chain.cardinality);
    return chain;
}

std::vector<int> max_u_chains(const Partition& P) {
    std::vector<int> best;
    long best_value = -1;
    for (const auto& g : part_groups(P)) {
        long value = u_value(P, g.p);
        if (value > best_value) {
            best_value = value;
            best.clear();
        }
        if (value == best_value) best.push_back(g.p);
    }
    std::sort(best.begin(), best.end());
    return best;
}

namespace {

/* Minimal successive-shortest-path min-cost flow; costs may be negative
 * (acyclic cost structure, so Bellman-Ford suffices).
 */
struct MinCostFlow {
    struct Arc {
        int to, rev, cap, cost;
    };
    std::vector<std::vector<Arc>> graph;

    explicit MinCostFlow(int nodes) : graph(static_cast<std::size_t>(nodes)) {}

    void add(int from, int to, int cap, int cost) {
        graph[static_cast<std::size_t>(from)].push_back(
            {to, static_cast<int>(graph[static_cast<std::size_t>(to)].size()), cap, cost});
        graph[static_cast<std::size_t>(to)].push_back(
            {from, static_cast<int>(graph[static_cast<std::size_t>(from)].size()) - 1, 0,
             -cost});
    }

    // Pushes one unit along a shortest path; returns its cost, or nullopt
    // when the sink is unreachable.
    std::optional<int> push_unit(int s, int t) {
        const int inf = std::numeric_limits<int>::max() / 2;
        std::vector<int> dist(graph.size(), inf);
        std::vector<std::pair<int, int>> prev(graph.size(), {-1, -1});
        dist[static_cast<std::size_t>(s)] = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t v = 0; v < graph.size(); ++v) {
                if (dist[v] == inf) continue;
                for (std::size_t i = 0; i < graph[v].size(); ++i) {
                    const Arc& a = graph[v][i];
                    if (a.cap > 0 && dist[v] + a.cost < dist[static_cast<std::size_t>(a.to)]) {
                        dist[static_cast<std::size_t>(a.to)] = dist[v] + a.cost;
                        prev[static_cast<std::size_t>(a.to)] = {static_cast<int>(v),
                                                               static_cast<int>(i)};
                        changed = true;
                    }
                }
            }
        }
        if (dist[static_cast<std::size_t>(t)] == inf) return std::nullopt;
        for (int v = t; v != s;) {
            auto [pv, pi] = prev[static_cast<std::size_t>(v)];
            Arc& a = graph[static_cast<std::size_t>(pv)][static_cast<std::size_t>(pi)];
            --a.cap;
            ++graph[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap;
            v = pv;
        }
        return dist[static_cast<std::size_t>(t)];
    }
};

} // namespace

Partition greene_kleitman_lambda(const PosetDP& D, int vertex_bound) {
    const int n = static_cast<int>(D.vertices().size());
    if (n > vertex_bound)
        throw std::domain_error("poset has " + std::to_string(n) +
                                " vertices, exceeding the bound of " +
                                std::to_string(vertex_bound));
    if (n == 0) return Partition{};

    // One unit of flow = one chain. Covering a vertex costs -1, so the
    // min cost of a k-unit flow is -c_k.
    const int S = 0, A = 1, B = 2, T = 3;
    auto v_in = [](int v) { return 4 + 2 * v; };
    auto v_out = [](int v) { return 5 + 2 * v; };
    MinCostFlow flow(4 + 2 * n);
    flow.add(S, A, n, 0);
    flow.add(A, B, n, 0); // chains may be empty
    flow.add(B, T, n, 0);
    for (int v = 0; v < n; ++v) {
        flow.add(A, v_in(v), 1, 0);
        flow.add(v_in(v), v_out(v), 1, -1);
        flow.add(v_out(v), B, 1, 0);
        for (int w = 0; w < n; ++w)
            if (v != w && D.reachable(v, w)) flow.add(v_out(v), v_in(w), 1, 0);
    }

    std::vector<long> coverage{0}; // c_0, c_1, ...
    long cost = 0;
    while (coverage.back() < n) {
        auto unit = flow.push_unit(S, T);
        if (!unit) break; // cannot happen: empty chains always augment
        cost += *unit;
        coverage.push_back(-cost);
    }

    std::vector<int> parts;
    for (std::size_t k = 1; k < coverage.size(); ++k)
        if (long d = coverage[k] - coverage[k - 1]; d > 0)
            parts.push_back(static_cast<int>(d));
    return Partition(std::move(parts));
}

std::string to_dot(const PosetDP& D, const UChain* highlight) {
    std::string out = "digraph poset {\n  rankdir=TB;\n  node [shape=circle];\n";
    std::vector<bool> boxed(D.vertices().size(), false);
    if (highlight)
        for (const auto& v : highlight->vertices)
            boxed[static_cast<std::size_t>(D.index_of(v))] = true;
    for (std::size_t i = 0; i < D.vertices().size(); ++i) {
        out += "  \"" + to_string(D.vertices()[i]) + "\"";
        if (boxed[i]) out += " [shape=box]";
        out += ";\n";
    }
    for (const auto& e : D.edges()) {
        const char* style = nullptr;
        switch (e.family) {
            case EdgeFamily::Down: style = "dashed"; break;
            case EdgeFamily::UpShift: style = "dotted"; break;
            case EdgeFamily::WithinGroup: style = "solid"; break;
            case EdgeFamily::Isolated: style = "bold"; break;
        }
        out += "  \"" + to_string(D.vertices()[static_cast<std::size_t>(e.from)]) +
               "\" -> \"" + to_string(D.vertices()[static_cast<std::size_t>(e.to)]) +
               "\" [style=" + style + "];\n";
    }
    out += "}\n";
    return out;
}

} // namespace nilcomm
