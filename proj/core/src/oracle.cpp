#include "nilcomm/oracle.hpp"

#include <algorithm>

#include "nilcomm/oblak.hpp"

namespace nilcomm {

namespace {

// splitmix64; deterministic across platforms, unlike the standard
// library distributions
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // modulus ~1e6 against a 64-bit draw: bias is negligible for
    // genericity sampling
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

} // namespace

NilpotentSample sample_nilpotent_commuting(const Partition& P, const PrimeField& field,
                                           std::uint64_t seed) {
    const int n = P.total();
    if (field.modulus() <= static_cast<std::uint64_t>(n))
        throw std::domain_error("field modulus must exceed the matrix size");

    auto basis = centralizer_basis(P, field);
    const auto& parts = P.parts();
    SplitMix64 rng{seed};

    DenseMatrix<PrimeField> B(n, n, field);
    for (std::size_t e = 0; e < basis.elements.size(); ++e) {
        const auto& el = basis.elements[e];
        std::uint64_t coeff;
        if (el.shift == 0 && parts[static_cast<std::size_t>(el.block_row)] ==
                                 parts[static_cast<std::size_t>(el.block_col)]) {
            // intra-group leading coefficients: strictly upper triangular
            // in the block order, killing the semisimple content
            if (el.block_row >= el.block_col) continue;
            coeff = rng.below(field.modulus());
        } else {
            coeff = rng.below(field.modulus());
        }
        if (coeff == 0) continue;
        const auto& X = basis.matrices[e];
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (X.at(r, c) != 0)
                    B.at(r, c) = field.add(B.at(r, c), field.mul(coeff, X.at(r, c)));
    }

    auto J = jordan_matrix(P, field);
    if (!(J * B - B * J).is_zero())
        throw std::logic_error("sampled matrix does not commute with the Jordan matrix");
    if (n > 0 && !B.pow(n).is_zero())
        throw std::logic_error("sampled centralizer element is not nilpotent");

    return {B, seed, jordan_type(B)};
}

Partition generic_commuting_type(const Partition& P, const PrimeField& field,
                                 int samples, std::uint64_t master_seed) {
    if (samples < 1) throw std::domain_error("at least one sample is required");
    SplitMix64 seeder{master_seed};
    Partition best;
    for (int i = 0; i < samples; ++i) {
        auto sample = sample_nilpotent_commuting(P, field, seeder.next());
        if (i == 0) {
            best = sample.jordan_type;
            continue;
        }
        switch (dominance_cmp(sample.jordan_type, best)) {
            case Dominance::Greater: best = sample.jordan_type; break;
            case Dominance::Less:
            case Dominance::Equal: break;
            case Dominance::Incomparable:
                throw std::logic_error(
                    "sampled Jordan types are dominance-incomparable; "
                    "the sampler is broken");
        }
    }
    return best;
}

VerifyReport verify_q(const Partition& P, const OracleConfig& config) {
    VerifyReport report;
    report.input = P;
    report.oblak = q_map(P);

    PrimeField field(config.prime);
    SplitMix64 seeder{config.master_seed};
    Partition best;
    report.all_dominated = true;
    for (int i = 0; i < config.samples; ++i) {
        auto sample = sample_nilpotent_commuting(P, field, seeder.next());
        report.sample_types.emplace_back(sample.seed, sample.jordan_type);
        auto vs_oblak = dominance_cmp(report.oblak, sample.jordan_type);
        if (vs_oblak != Dominance::Greater && vs_oblak != Dominance::Equal)
            report.all_dominated = false;
        if (i == 0 || dominance_cmp(sample.jordan_type, best) == Dominance::Greater)
            best = sample.jordan_type;
    }
    report.oracle = best;
    report.agree = report.oracle == report.oblak;
    return report;
}

} // namespace nilcomm
