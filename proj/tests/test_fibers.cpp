#include <doctest.h>

#include <algorithm>

#include "nilcomm/fibers.hpp"
#include "nilcomm/oblak.hpp"

using namespace nilcomm;

TEST_CASE("enumerate_partitions: order and counts") {
    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));

    CHECK(enumerate_partitions(5).size() == 7);
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK_THROWS_AS(enumerate_partitions(50), std::length_error);

    // reverse-lexicographic: strictly decreasing as sequences
    auto p9 = enumerate_partitions(9);
    CHECK(p9.size() == 30);
    for (std::size_t i = 1; i < p9.size(); ++i) CHECK(p9[i] < p9[i - 1]);
    CHECK(p9.front() == Partition({9}));
    CHECK(p9.back() == Partition::parse("1^9"));
}

TEST_CASE("q_fibers: small cases") {
    auto fibers4 = q_fibers(4);
    REQUIRE(fibers4.size() == 2);
    CHECK(fibers4.at(Partition({4})).size() == 4);
    CHECK(fibers4.at(Partition({3, 1})) == std::vector<Partition>{Partition({3, 1})});

    auto fibers1 = q_fibers(1);
    REQUIRE(fibers1.size() == 1);
    CHECK(fibers1.at(Partition({1})) == std::vector<Partition>{Partition({1})});

    // the fiber of (n) is exactly the almost rectangular partitions
    for (int n : {6, 9, 16}) {
        auto fibers = q_fibers(n);
        const auto& top = fibers.at(Partition({n}));
        CHECK(top.size() == static_cast<std::size_t>(n));
        for (const auto& p : top) CHECK(is_almost_rectangular(p));
        std::vector<std::size_t> part_counts;
        for (const auto& p : top) part_counts.push_back(p.num_parts());
        std::sort(part_counts.begin(), part_counts.end());
        for (int k = 1; k <= n; ++k)
            CHECK(part_counts[static_cast<std::size_t>(k - 1)] ==
                  static_cast<std::size_t>(k));
    }
}

TEST_CASE("fibers partition the set of partitions, keyed by stable ones") {
    for (int n = 1; n <= 16; ++n) {
        auto fibers = q_fibers(n);
        std::size_t covered = 0;
        for (const auto& [q, fiber] : fibers) {
            CHECK(is_stable(q));
            CHECK(std::find(fiber.begin(), fiber.end(), q) != fiber.end());
            for (const auto& p : fiber) {
                auto dom = dominance_cmp(q, p);
                CHECK((dom == Dominance::Greater || dom == Dominance::Equal));
            }
            covered += fiber.size();
        }
        CHECK(covered == enumerate_partitions(n).size());
        // keys are exactly the stable partitions
        for (const auto& p : enumerate_partitions(n))
            CHECK(fibers.count(p) == static_cast<std::size_t>(is_stable(p) ? 1 : 0));
    }
}

TEST_CASE("box_dims") {
    CHECK(box_dims(Partition({5, 2})) == std::vector<int>{2, 2});
    CHECK(box_dims(Partition({4})) == std::vector<int>{4});
    CHECK(box_dims(Partition({3, 1})) == std::vector<int>{1, 1});
    CHECK(box_dims(Partition({16, 7, 2})) == std::vector<int>{8, 4, 2});
    CHECK_THROWS_AS(box_dims(Partition({2, 2})), std::domain_error);
}

TEST_CASE("box checks pass exhaustively to n = 16") {
    for (int n = 1; n <= 16; ++n)
        for (const auto& report : check_box(n)) {
            CHECK(report.cardinality_ok);
            CHECK(report.part_count_ok);
        }
}

TEST_CASE("two-part stable images have (u-r) x (r-1) fibers") {
    for (int n = 3; n <= 16; ++n)
        for (const auto& report : check_box(n)) {
            if (report.q.num_parts() != 2) continue;
            int u = report.q.part(0);
            int r = u - report.q.part(1);
            CHECK(static_cast<long>(report.fiber.size()) ==
                  static_cast<long>(u - r) * (r - 1));
        }
}
