#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polyjac/engine.hpp"
#include "polyjac/io.hpp"
#include "polyjac/oracle.hpp"

namespace {

constexpr std::size_t kConstantMemoryBytes = 65536;
constexpr double kGateTol = 1e-10;
constexpr std::uint64_t kPointSeedSalt = 0x9e3779b97f4a7c15ULL;

struct GenParams {
    int n = 0, m = 0, k = 0, d = 0;
};

std::size_t footprint_bytes(int n, int m, int k) {
    return 2 * static_cast<std::size_t>(n) * m * k;
}

void print_footprint(int n, int m, int k) {
    const std::size_t bytes = footprint_bytes(n, m, k);
    std::cout << "constant-memory footprint (positions+exponents): " << bytes << " bytes\n";
    if (bytes >= kConstantMemoryBytes) {
        std::cerr << "warning: footprint " << bytes << " bytes reaches the " << kConstantMemoryBytes
                  << "-byte constant-memory capacity; positions/exponents would not fit\n";
    }
}

int cmd_generate(const GenParams& gp, std::uint64_t seed, const std::string& out_path) {
    const polyjac::PolynomialSystem sys = polyjac::random_system(gp.n, gp.m, gp.k, gp.d, seed);
    polyjac::write_system(sys, out_path);
    std::cout << "generated " << out_path << ": n=" << sys.n << " m=" << sys.m << " k=" << sys.k
              << " d=" << sys.d << " monomials=" << sys.monomial_count() << " seed=" << seed << "\n";
    print_footprint(sys.n, sys.m, sys.k);
    return 0;
}

struct BenchmarkReport {
    int n = 0, m = 0, k = 0, d = 0;
    std::size_t monomials = 0;
    int block_size = 0;
    int workers = 0;
    int evals = 0;
    double baseline_ms = 0.0;
    double pipeline_ms = 0.0;
    double speedup = 0.0;
    std::uint64_t mults = 0;
    std::size_t footprint = 0;
};

void print_report(const BenchmarkReport& r) {
    std::printf("system: n=%d m=%d k=%d d=%d (%zu monomials), footprint %zu bytes\n", r.n, r.m,
                r.k, r.d, r.monomials, r.footprint);
    std::printf("grid: block size %d, %d workers, %d evaluations\n", r.block_size, r.workers,
                r.evals);
    std::printf("baseline: term-by-term oracle, single thread (correctness baseline, "
                "not a tuned reference): %.3f ms\n",
                r.baseline_ms);
    std::printf("pipeline: %.3f ms (%.3f us/eval), %llu complex multiplications\n", r.pipeline_ms,
                1000.0 * r.pipeline_ms / r.evals, static_cast<unsigned long long>(r.mults));
    std::printf("speedup: %.2fx\n", r.speedup);
    std::printf("RESULT n=%d m=%d k=%d d=%d monomials=%zu B=%d workers=%d evals=%d "
                "baseline_ms=%.3f pipeline_ms=%.3f speedup=%.3f mults=%llu footprint_bytes=%zu\n",
                r.n, r.m, r.k, r.d, r.monomials, r.block_size, r.workers, r.evals, r.baseline_ms,
                r.pipeline_ms, r.speedup, static_cast<unsigned long long>(r.mults), r.footprint);
}

int cmd_bench(const polyjac::PolynomialSystem& sys, std::uint64_t seed, int evals, int workers,
              int block_size) {
    const polyjac::EvaluationPoint point = polyjac::random_point(sys.n, seed ^ kPointSeedSalt);
    polyjac::EvaluationContext ctx(sys, {block_size, workers});

    // correctness gate before any timing is reported
    const polyjac::EvaluationResult gate = ctx.evaluate(point);
    const polyjac::ComparisonReport check = polyjac::compare(gate, sys, point, kGateTol);
    if (!check.pass) {
        std::cerr << "correctness gate failed: " << check.describe() << "\n";
        return 1;
    }

    using clock = std::chrono::steady_clock;
    volatile double sink = 0.0;  // keep the baseline loop observable
    const auto b0 = clock::now();
    for (int e = 0; e < evals; ++e) {
        const auto values = polyjac::naive_evaluate(sys, point);
        const auto jac = polyjac::naive_jacobian(sys, point);
        sink = sink + values[0].re + jac[0].re;
    }
    const auto b1 = clock::now();

    const polyjac::BatchResult batch = ctx.evaluate_batch({point}, evals);

    BenchmarkReport report;
    report.n = sys.n;
    report.m = sys.m;
    report.k = sys.k;
    report.d = sys.d;
    report.monomials = sys.monomial_count();
    report.block_size = ctx.grid().block_size;
    report.workers = ctx.grid().workers;
    report.evals = evals;
    report.baseline_ms = std::chrono::duration<double, std::milli>(b1 - b0).count();
    report.pipeline_ms = batch.report.wall_seconds * 1000.0;
    report.speedup = report.pipeline_ms > 0.0 ? report.baseline_ms / report.pipeline_ms : 0.0;
    report.mults = batch.report.mults.total();
    report.footprint = ctx.layout().footprint_bytes();
    print_report(report);
    return 0;
}

int cmd_check(const polyjac::PolynomialSystem& sys, int points, std::uint64_t seed, double tol,
              int workers, int block_size) {
    polyjac::EvaluationContext ctx(sys, {block_size, workers});
    const auto pts = polyjac::random_points(sys.n, points, seed ^ kPointSeedSalt);

    polyjac::ComparisonReport worst;
    worst.tol = tol;
    worst.pass = true;
    int failures = 0;
    for (int i = 0; i < points; ++i) {
        const polyjac::EvaluationResult result = ctx.evaluate(pts[i]);
        const polyjac::ComparisonReport rep = polyjac::compare(result, sys, pts[i], tol);
        if (!rep.pass) ++failures;
        if (rep.max_value_error > worst.max_value_error) {
            worst.max_value_error = rep.max_value_error;
            worst.worst_value_index = rep.worst_value_index;
        }
        if (rep.max_jacobian_error > worst.max_jacobian_error) {
            worst.max_jacobian_error = rep.max_jacobian_error;
            worst.worst_jac_poly = rep.worst_jac_poly;
            worst.worst_jac_var = rep.worst_jac_var;
        }
    }
    worst.pass = failures == 0;
    std::cout << "checked " << points << " random points: " << worst.describe() << "\n";
    return worst.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse polynomial system and Jacobian evaluator "
                 "(three-stage data-parallel pipeline on a virtual thread grid)"};
    app.require_subcommand(1);

    GenParams gp;
    std::string system_path;
    std::string out_path;
    std::uint64_t seed = 1;
    int evals = 1000;
    int workers = 0;
    int block_size = 32;
    int points = 100;
    double tol = 1e-10;

    CLI::App* gen = app.add_subcommand("generate", "write a random benchmark system file");
    gen->add_option("--n", gp.n, "variables / polynomials")->required();
    gen->add_option("--m", gp.m, "monomials per polynomial")->required();
    gen->add_option("--k", gp.k, "variables per monomial")->required();
    gen->add_option("--d", gp.d, "max per-variable degree")->required();
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--out", out_path, "output path")->required();

    CLI::App* bench = app.add_subcommand("bench", "timed evaluation batch with correctness gate");
    auto* bsys = bench->add_option("--system", system_path, "system file to load");
    auto* bn = bench->add_option("--n", gp.n, "variables (generator)");
    auto* bm = bench->add_option("--m", gp.m, "monomials per polynomial (generator)");
    auto* bk = bench->add_option("--k", gp.k, "variables per monomial (generator)");
    auto* bd = bench->add_option("--d", gp.d, "max per-variable degree (generator)");
    bsys->excludes(bn)->excludes(bm)->excludes(bk)->excludes(bd);
    bench->add_option("--seed", seed, "seed for generator and evaluation point");
    bench->add_option("--evals", evals, "evaluation count")->check(CLI::PositiveNumber);
    bench->add_option("--workers", workers, "worker threads (0 = hardware)")
        ->check(CLI::NonNegativeNumber);
    bench->add_option("--block-size", block_size, "virtual block size")->check(CLI::PositiveNumber);

    CLI::App* chk = app.add_subcommand("check", "pipeline vs oracle on random points");
    chk->add_option("--system", system_path, "system file to load")->required();
    chk->add_option("--points", points, "number of random points")->check(CLI::PositiveNumber);
    chk->add_option("--seed", seed, "seed for the points");
    chk->add_option("--tol", tol, "relative-error tolerance")->check(CLI::PositiveNumber);
    chk->add_option("--workers", workers, "worker threads (0 = hardware)")
        ->check(CLI::NonNegativeNumber);
    chk->add_option("--block-size", block_size, "virtual block size")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
    }

    try {
        if (gen->parsed()) {
            return cmd_generate(gp, seed, out_path);
        }
        if (bench->parsed()) {
            polyjac::PolynomialSystem sys;
            if (!system_path.empty()) {
                sys = polyjac::read_system(system_path);
            } else if (bn->count() && bm->count() && bk->count() && bd->count()) {
                sys = polyjac::random_system(gp.n, gp.m, gp.k, gp.d, seed);
            } else {
                std::cerr << "bench: pass --system or all of --n --m --k --d\n";
                return 2;
            }
            return cmd_bench(sys, seed, evals, workers, block_size);
        }
        if (chk->parsed()) {
            const polyjac::PolynomialSystem sys = polyjac::read_system(system_path);
            return cmd_check(sys, points, seed, tol, workers, block_size);
        }
    } catch (const polyjac::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
