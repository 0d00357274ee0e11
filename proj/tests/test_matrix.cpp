#include <doctest.h>

#include <cstdint>

#include "nilcomm/fibers.hpp"
#include "nilcomm/matrix.hpp"

using namespace nilcomm;

TEST_CASE("primality check") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(1000003));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(1000001)); // 101 * 9901
    CHECK_THROWS_AS(PrimeField(1000001), std::domain_error);
}

TEST_CASE("prime field arithmetic") {
    PrimeField f(101);
    CHECK(f.add(100, 5) == 4);
    CHECK(f.sub(3, 7) == 97);
    CHECK(f.mul(50, 50) == 2500 % 101);
    CHECK(f.mul(f.inv(37), 37) == 1);
    CHECK(f.from_int(-1) == 100);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("jordan matrix and rank") {
    PrimeField f(1000003);
    auto J4 = jordan_matrix(Partition({4}), f);
    CHECK(J4.rank() == 3);
    auto B = J4 * J4;
    CHECK(B.rank() == 2);
    CHECK((B * B).is_zero());
    CHECK(jordan_type(B) == Partition({2, 2}));

    CHECK(DenseMatrix<PrimeField>::identity(5, f).rank() == 5);
    CHECK(DenseMatrix<PrimeField>(5, 5, f).rank() == 0);

    auto J22 = jordan_matrix(Partition({2, 2}), f);
    CHECK(J22.rank() == 2);
    CHECK((J22 * J22).is_zero());
}

TEST_CASE("jordan_type rejects non-nilpotent input") {
    PrimeField f(1000003);
    auto I = DenseMatrix<PrimeField>::identity(3, f);
    CHECK_THROWS_AS(jordan_type(I), std::domain_error);
}

TEST_CASE("jordan_type(jordan_matrix(P)) roundtrip, both fields") {
    PrimeField fq(1000003);
    Rationals fr;
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            CHECK(jordan_type(jordan_matrix(p, fq)) == p);
            CHECK(jordan_type(jordan_matrix(p, fr)) == p);
        }
}

TEST_CASE("powers of a single block have almost rectangular type") {
    PrimeField f(1000003);
    for (int n = 1; n <= 30; ++n) {
        auto J = jordan_matrix(Partition({n}), f);
        for (int k = 1; k <= n; ++k)
            CHECK(jordan_type(J.pow(k)) == almost_rectangular(n, k));
    }
}

TEST_CASE("jordan_power_rank formula matches computed ranks") {
    CHECK(jordan_power_rank(4, 2) == 2);
    CHECK(jordan_power_rank(9, 0) == 9);
    CHECK(jordan_power_rank(5, 7) == 0);
    PrimeField fq(1000003);
    Rationals fr;
    for (int n = 1; n <= 30; ++n) {
        auto Jq = jordan_matrix(Partition({n}), fq);
        for (int k = 0; k <= n + 1; ++k) CHECK(Jq.pow(k).rank() == jordan_power_rank(n, k));
    }
    for (int n = 1; n <= 12; ++n) {
        auto Jr = jordan_matrix(Partition({n}), fr);
        for (int k = 0; k <= n + 1; ++k) CHECK(Jr.pow(k).rank() == jordan_power_rank(n, k));
    }
}

TEST_CASE("rank of 0/1 matrices agrees between the fields") {
    // fixed-seed xorshift so the sweep is reproducible
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next_bit = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<int>(state & 1);
    };
    PrimeField fq(1048583); // > 2^20
    Rationals fr;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 11; // sizes 2..12
        DenseMatrix<PrimeField> mq(n, n, fq);
        DenseMatrix<Rationals> mr(n, n, fr);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                int bit = next_bit();
                mq.at(r, c) = static_cast<std::uint64_t>(bit);
                mr.at(r, c) = bit;
            }
        CHECK(mq.rank() == mr.rank());
    }
}

TEST_CASE("nilpotent rank sequences decrease strictly and give partitions") {
    PrimeField f(1000003);
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            auto J = jordan_matrix(p, f);
            int prev = n;
            auto power = J;
            while (prev > 0) {
                int r = power.rank();
                CHECK(r < prev);
                prev = r;
                power = power * J;
            }
            // the difference sequence is itself a valid partition
            CHECK(conjugate(jordan_type(J)).total() == n);
        }
}
