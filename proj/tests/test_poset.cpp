#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "nilcomm/fibers.hpp"
#include "nilcomm/oblak.hpp"
#include "nilcomm/poset.hpp"

using namespace nilcomm;

namespace {

std::map<EdgeFamily, int> family_counts(const PosetDP& D) {
    std::map<EdgeFamily, int> counts;
    for (const auto& e : D.edges()) ++counts[e.family];
    return counts;
}

// all maximal chains as vertex sets, by DFS over the cover edges; any
// union of k chains is contained in a union of k maximal chains, so the
// brute-force coverage below may range over these only
std::vector<std::set<int>> maximal_chains(const PosetDP& D) {
    const int n = static_cast<int>(D.vertices().size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<bool> has_pred(static_cast<std::size_t>(n), false);
    for (const auto& e : D.edges()) {
        adj[static_cast<std::size_t>(e.from)].push_back(e.to);
        has_pred[static_cast<std::size_t>(e.to)] = true;
    }
    std::vector<std::set<int>> chains;
    std::vector<int> path;
    auto dfs = [&](auto&& self, int v) -> void {
        path.push_back(v);
        if (adj[static_cast<std::size_t>(v)].empty())
            chains.emplace_back(path.begin(), path.end());
        else
            for (int w : adj[static_cast<std::size_t>(v)]) self(self, w);
        path.pop_back();
    };
    for (int v = 0; v < n; ++v)
        if (!has_pred[static_cast<std::size_t>(v)]) dfs(dfs, v);
    return chains;
}

// maximum vertices coverable by k maximal chains, exhaustively
int coverage_bruteforce(const std::vector<std::set<int>>& chains, int k,
                        std::set<int> covered = {}, std::size_t from = 0) {
    if (k == 0) return static_cast<int>(covered.size());
    int best = static_cast<int>(covered.size());
    for (std::size_t i = from; i < chains.size(); ++i) {
        std::set<int> next = covered;
        next.insert(chains[i].begin(), chains[i].end());
        best = std::max(best, coverage_bruteforce(chains, k - 1, std::move(next), i));
    }
    return best;
}

Partition lambda_bruteforce(const PosetDP& D) {
    const int n = static_cast<int>(D.vertices().size());
    auto chains = maximal_chains(D);
    std::vector<int> parts;
    int prev = 0;
    for (int k = 1; prev < n; ++k) {
        int ck = coverage_bruteforce(chains, k);
        if (ck == prev) break;
        parts.push_back(ck - prev);
        prev = ck;
    }
    return Partition(std::move(parts));
}

} // namespace

TEST_CASE("build: edge families of the (3,1) poset") {
    auto D = PosetDP::build(Partition::parse("3,1"));
    REQUIRE(D.vertices().size() == 4);
    auto counts = family_counts(D);
    CHECK(counts[EdgeFamily::Isolated] == 2); // (1,3,1)->(2,3,1)->(3,3,1)
    CHECK(counts[EdgeFamily::Down] == 1);     // (1,3,1)->(1,1,1)
    CHECK(counts[EdgeFamily::UpShift] == 1);  // (1,1,1)->(3,3,1)
    CHECK(counts[EdgeFamily::WithinGroup] == 0);
    CHECK(D.comparable({1, 1, 1}, {3, 3, 1}));
    CHECK(D.comparable({2, 3, 1}, {2, 3, 1}));
    CHECK_THROWS_AS(D.comparable({1, 1, 1}, {9, 9, 9}), std::domain_error);
}

TEST_CASE("build: edge family counts for 6,4^2,3^2,2^2,1") {
    auto D = PosetDP::build(Partition::parse("6,4^2,3^2,2^2,1"));
    CHECK(D.vertices().size() == 25);
    CHECK(D.edges().size() == 34);
    auto counts = family_counts(D);
    CHECK(counts[EdgeFamily::Down] == 10);
    CHECK(counts[EdgeFamily::UpShift] == 10);
    CHECK(counts[EdgeFamily::WithinGroup] == 9);
    CHECK(counts[EdgeFamily::Isolated] == 5);
    // a non-comparable pair across distant rows
    CHECK_FALSE(D.comparable({2, 6, 1}, {1, 2, 1}));
}

TEST_CASE("build: single row is one chain of isolated edges") {
    for (int n : {1, 2, 7}) {
        auto D = PosetDP::build(Partition({n}));
        CHECK(D.vertices().size() == static_cast<std::size_t>(n));
        CHECK(D.edges().size() == static_cast<std::size_t>(n - 1));
        for (const auto& e : D.edges()) CHECK(e.family == EdgeFamily::Isolated);
    }
}

TEST_CASE("acyclic for all partitions of n <= 14") {
    for (int n = 1; n <= 14; ++n)
        for (const auto& p : enumerate_partitions(n))
            CHECK(PosetDP::build(p).is_acyclic());
}

TEST_CASE("u_value: the 6,4^2,3^2,2^2,1 table") {
    auto p = Partition::parse("6,4^2,3^2,2^2,1");
    CHECK(u_value(p, 6) == 6);
    CHECK(u_value(p, 4) == 16);
    CHECK(u_value(p, 3) == 16);
    CHECK(u_value(p, 2) == 15);
    CHECK(u_value(p, 1) == 15);
    CHECK_THROWS_AS(u_value(p, 5), std::domain_error);
}

TEST_CASE("u_chain: construction matches the closed form and is a chain") {
    auto p = Partition::parse("6,4^2,3^2,2^2,1");
    CHECK(u_chain(p, 3).cardinality == 16);
    CHECK(u_chain(p, 6).cardinality == 6);

    for (int n = 1; n <= 10; ++n)
        for (const auto& part : enumerate_partitions(n)) {
            auto D = PosetDP::build(part);
            std::set<int> sizes(part.parts().begin(), part.parts().end());
            for (int s : sizes) {
                auto chain = u_chain(part, s);
                CHECK(chain.cardinality == u_value(part, s));
                CHECK(chain.vertices.size() == static_cast<std::size_t>(chain.cardinality));
                for (const auto& a : chain.vertices)
                    for (const auto& b : chain.vertices)
                        CHECK(D.comparable(a, b));
            }
        }
}

TEST_CASE("u_value construction vs formula, exhaustive to n = 14") {
    for (int n = 1; n <= 14; ++n)
        for (const auto& part : enumerate_partitions(n)) {
            std::set<int> sizes(part.parts().begin(), part.parts().end());
            for (int s : sizes)
                CHECK(u_chain(part, s).cardinality == u_value(part, s));
        }
}

TEST_CASE("max_u_chains") {
    CHECK(max_u_chains(Partition::parse("6,4^2,3^2,2^2,1")) == std::vector<int>{3, 4});
    CHECK(max_u_chains(Partition({9})) == std::vector<int>{9});
    // u(2) = 2*2 + 1 + 2 = 7 and u(1) = 1 + 2*3 = 7 tie at the maximum
    CHECK(max_u_chains(Partition::parse("4,2^2,1")) == std::vector<int>{1, 2});
    CHECK(u_value(Partition::parse("4,2^2,1"), 2) == 7);
}

TEST_CASE("greene_kleitman_lambda: examples") {
    CHECK(greene_kleitman_lambda(PosetDP::build(Partition::parse("3,1"))) ==
          Partition({3, 1}));
    CHECK(greene_kleitman_lambda(PosetDP::build(Partition({6}))) == Partition({6}));
    CHECK(greene_kleitman_lambda(PosetDP::build(Partition({2, 2}))) == Partition({4}));
    CHECK_THROWS_AS(greene_kleitman_lambda(PosetDP::build(Partition({5})), 4),
                    std::domain_error);
}

TEST_CASE("greene_kleitman_lambda agrees with brute force on small posets") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            auto D = PosetDP::build(p);
            CHECK(greene_kleitman_lambda(D) == lambda_bruteforce(D));
        }
}

TEST_CASE("lambda dominates the process result and its first part bounds u") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            auto D = PosetDP::build(p);
            auto lambda = greene_kleitman_lambda(D);
            auto dom = dominance_cmp(lambda, q_map(p));
            CHECK((dom == Dominance::Greater || dom == Dominance::Equal));
            long max_u = 0;
            for (int s : max_u_chains(p)) max_u = std::max(max_u, u_value(p, s));
            CHECK(lambda.part(0) >= max_u);
        }
}

TEST_CASE("to_dot") {
    auto p31 = Partition::parse("3,1");
    auto D = PosetDP::build(p31);
    auto dot = to_dot(D);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') >= 4);
    CHECK(dot.find("shape=box") == std::string::npos);

    auto big = Partition::parse("6,4^2,3^2,2^2,1");
    auto chain = u_chain(big, 3);
    auto highlighted = to_dot(PosetDP::build(big), &chain);
    std::size_t boxes = 0, pos = 0;
    while ((pos = highlighted.find("shape=box", pos)) != std::string::npos) {
        ++boxes;
        pos += 1;
    }
    CHECK(boxes == 16);
}
