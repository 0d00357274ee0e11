// Command-line front end: generic commuting types, Oblak traces, poset
// exports, exhaustive property sweeps, the sampling oracle, and the box
// fiber checks.
//
// Exit codes: 0 success, 1 usage or parse error, 2 property-suite
// failure, 3 negative conjecture finding, 4 internal guard tripped.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nilcomm/fibers.hpp"
#include "nilcomm/matrix.hpp"
#include "nilcomm/oblak.hpp"
#include "nilcomm/oracle.hpp"
#include "nilcomm/poset.hpp"
#include "nilcomm/serialize.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitPropertyFailure = 2;
constexpr int kExitNegativeFinding = 3;
constexpr int kExitInternal = 4;

constexpr const char* kSchema = "nilcomm/1";

struct Options {
    std::string partition_text;
    bool json = false;
    bool dot = false;
    int highlight = 0;
    std::uint64_t prime = 1000003;
    int samples = 8;
    std::uint64_t seed = 0x4a433031;
    int n = 0;
    int max_n = 40;
};

nilcomm::Partition parse_or_exit(const std::string& text) {
    try {
        return nilcomm::Partition::parse(text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::exit(kExitUsage);
    }
}

nilcomm::PrimeField field_for(const Options& opt, int n) {
    if (opt.prime <= static_cast<std::uint64_t>(n)) {
        std::cerr << "error: prime " << opt.prime << " must exceed n = " << n << "\n";
        std::exit(kExitUsage);
    }
    try {
        return nilcomm::PrimeField(opt.prime);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::exit(kExitUsage);
    }
}

int run_q(const Options& opt) {
    auto p = parse_or_exit(opt.partition_text);
    auto q = nilcomm::q_map(p);
    if (opt.json) {
        nlohmann::json out{{"schema", kSchema}, {"input", p}, {"result", q}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << q.str_flat() << "\n";
    }
    return 0;
}

int run_trace(const Options& opt) {
    auto p = parse_or_exit(opt.partition_text);
    auto trace = nilcomm::oblak_process(p);
    if (opt.json) {
        nlohmann::json out = trace;
        out["schema"] = kSchema;
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "P = (" << p.str() << ")\n";
    for (const auto& step : trace.steps) {
        std::cout << "  remove U-chain for p = " << step.chosen_p
                  << ", |U| = " << step.chain_size << ", residual = ("
                  << step.residual.str() << ")\n";
    }
    std::cout << "Q(P) = (" << trace.result.str() << ")\n";
    return 0;
}

int run_poset(const Options& opt) {
    auto p = parse_or_exit(opt.partition_text);
    auto D = nilcomm::PosetDP::build(p);
    if (opt.dot) {
        if (opt.highlight > 0) {
            auto chain = nilcomm::u_chain(p, opt.highlight);
            std::cout << nilcomm::to_dot(D, &chain);
        } else {
            std::cout << nilcomm::to_dot(D);
        }
        return 0;
    }
    nlohmann::json out = nilcomm::poset_json(D);
    out["schema"] = kSchema;
    std::cout << out.dump() << "\n";
    return 0;
}

int run_verify(const Options& opt) {
    using namespace nilcomm;
    long checked = 0, failures = 0;
    auto fail = [&failures](const Partition& p, const std::string& what) {
        std::cerr << "FAIL (" << p.str() << "): " << what << "\n";
        ++failures;
    };
    for (int n = 1; n <= opt.n; ++n) {
        for (const auto& p : enumerate_partitions(n, opt.max_n)) {
            ++checked;
            auto q = q_map(p);
            if ((q == p) != is_stable(p)) fail(p, "fixed point vs stability mismatch");
            if (q_map(q) != q) fail(p, "image is not idempotent");
            if (q.num_parts() != ar_decompose(p).count())
                fail(p, "part count differs from the segment count");
            auto dom = dominance_cmp(q, p);
            if (dom != Dominance::Greater && dom != Dominance::Equal)
                fail(p, "image does not dominate the input");
            if ((q == Partition({n})) != is_almost_rectangular(p))
                fail(p, "commuting-with-(n) criterion mismatch");
            if (n <= 12 && explore_all_tie_choices(p).size() != 1)
                fail(p, "tie choices do not agree");
        }
    }
    std::cout << "checked " << checked << " partitions up to n = " << opt.n << ": "
              << (failures == 0 ? "all properties hold" :
                                  std::to_string(failures) + " failures")
              << "\n";
    return failures == 0 ? 0 : kExitPropertyFailure;
}

int run_oracle(const Options& opt) {
    auto p = parse_or_exit(opt.partition_text);
    (void)field_for(opt, p.total()); // validate before the run
    nilcomm::OracleConfig config{opt.prime, opt.samples, opt.seed};
    nilcomm::VerifyReport report;
    try {
        report = nilcomm::verify_q(p, config);
    } catch (const std::logic_error& e) {
        std::cerr << "internal guard: " << e.what() << "\n";
        return kExitInternal;
    }
    if (opt.json) {
        nlohmann::json out = report;
        out["schema"] = kSchema;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "process: (" << report.oblak.str() << ")\n"
                  << "oracle:  (" << report.oracle.str() << ")\n"
                  << (report.agree ? "agree" : "DISAGREE") << "\n";
    }
    if (!report.all_dominated) {
        std::cerr << "a sampled type is not dominated by the process result\n";
        return kExitInternal;
    }
    return report.agree ? 0 : kExitPropertyFailure;
}

int run_box(const Options& opt) {
    std::vector<nilcomm::BoxReport> reports;
    try {
        reports = nilcomm::check_box(opt.n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    bool all_ok = true;
    if (opt.json) {
        nlohmann::json out{{"schema", kSchema}, {"n", opt.n}, {"reports", reports}};
        std::cout << out.dump() << "\n";
        for (const auto& r : reports) all_ok = all_ok && r.ok();
    } else {
        for (const auto& r : reports) {
            all_ok = all_ok && r.ok();
            std::cout << "Q=(" << r.q.str() << ") box=";
            for (std::size_t i = 0; i < r.dims.size(); ++i)
                std::cout << (i ? "x" : "") << r.dims[i];
            std::cout << " predicted=" << r.predicted << " observed=" << r.fiber.size()
                      << (r.ok() ? " ok" : " MISMATCH") << "\n";
            if (!r.ok())
                for (const auto& p : r.fiber) std::cout << "    (" << p.str() << ")\n";
        }
    }
    return all_ok ? 0 : kExitNegativeFinding;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generic commuting Jordan types of nilpotent matrices"};
    app.require_subcommand(1);
    Options opt;

    app.add_flag("--json", opt.json, "machine-readable output")
        ->envname("NILCOMM_JSON");
    app.add_option("--prime", opt.prime, "field modulus for the oracle")
        ->envname("NILCOMM_PRIME");
    app.add_option("--samples", opt.samples, "oracle sample count")
        ->check(CLI::PositiveNumber)
        ->envname("NILCOMM_SAMPLES");
    app.add_option("--seed", opt.seed, "master RNG seed")->envname("NILCOMM_SEED");
    app.add_option("--max-n", opt.max_n, "enumeration bound")
        ->envname("NILCOMM_MAX_N");

    auto* cmd_q = app.add_subcommand("q", "generic commuting type of a partition");
    cmd_q->add_option("partition", opt.partition_text)->required();

    auto* cmd_trace = app.add_subcommand("trace", "step-by-step removal narrative");
    cmd_trace->add_option("partition", opt.partition_text)->required();

    auto* cmd_poset = app.add_subcommand("poset", "the partition's poset as JSON or DOT");
    cmd_poset->add_option("partition", opt.partition_text)->required();
    cmd_poset->add_flag("--dot", opt.dot, "emit DOT instead of JSON");
    cmd_poset->add_option("--highlight", opt.highlight,
                          "box the U-chain of this part size");

    auto* cmd_verify =
        app.add_subcommand("verify", "exhaustive property sweep over partitions of 1..n");
    cmd_verify->add_option("n", opt.n)->required()->check(CLI::PositiveNumber);

    auto* cmd_oracle =
        app.add_subcommand("oracle", "cross-check the process against random sampling");
    cmd_oracle->add_option("partition", opt.partition_text)->required();

    auto* cmd_box = app.add_subcommand("box", "fiber cardinality and part-count checks");
    cmd_box->add_option("n", opt.n)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_q->parsed()) return run_q(opt);
        if (cmd_trace->parsed()) return run_trace(opt);
        if (cmd_poset->parsed()) return run_poset(opt);
        if (cmd_verify->parsed()) return run_verify(opt);
        if (cmd_oracle->parsed()) return run_oracle(opt);
        if (cmd_box->parsed()) return run_box(opt);
    } catch (const std::logic_error& e) {
        std::cerr << "internal guard: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
