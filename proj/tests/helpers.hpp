#pragma once

// Test-side helpers. The numeric ones are deliberately brute force and
// independent of the pipeline code paths they are used to check.

#include <sys/wait.h>

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "polyjac/engine.hpp"
#include "polyjac/kernels.hpp"
#include "polyjac/system.hpp"

namespace testutil {

inline std::complex<double> to_std(polyjac::Complex v) { return {v.re, v.im}; }

inline std::complex<double> pow_repeated(std::complex<double> x, int e) {
    std::complex<double> p{1.0, 0.0};
    for (int i = 0; i < e; ++i) p *= x;
    return p;
}

// product of all vals except index skip
inline std::complex<double> product_excluding(const std::vector<std::complex<double>>& vals,
                                              int skip) {
    std::complex<double> p{1.0, 0.0};
    for (int j = 0; j < static_cast<int>(vals.size()); ++j) {
        if (j != skip) p *= vals[j];
    }
    return p;
}

// the three kernel stages run directly, single threaded, without the engine
inline polyjac::EvaluationResult run_kernels_pipeline(const polyjac::PolynomialSystem& sys,
                                                      const polyjac::EvaluationPoint& point,
                                                      polyjac::MultCounter& mults) {
    using namespace polyjac;
    const PackedLayout layout = build_layout(sys);
    MonsBuffer mons = make_mons_buffer(sys);
    const PowersTable powers = stage1_powers(point, sys.d, mults);

    FactorBuffer factors(layout.monomial_count());
    for (std::size_t s = 0; s < factors.size(); ++s) {
        factors[s] = stage1_common_factor(layout, s, powers, mults);
    }

    ThreadWorkspace ws;
    ws.resize(sys.k);
    for (std::size_t s = 0; s < factors.size(); ++s) {
        stage2_term(s, layout, point, factors[s], ws, mons, mults);
    }

    EvaluationResult result;
    result.n = sys.n;
    result.values.resize(sys.n);
    result.jacobian.resize(static_cast<std::size_t>(sys.n) * sys.n);
    for (int t = 0; t < sys.n; ++t) {
        result.values[t] = stage3_sum(t, mons, sys.n, sys.m);
    }
    for (int i = 0; i < sys.n; ++i) {
        for (int p = 0; p < sys.n; ++p) {
            result.jacobian[static_cast<std::size_t>(p) * sys.n + i] =
                stage3_sum(static_cast<std::size_t>(i + 1) * sys.n + p, mons, sys.n, sys.m);
        }
    }
    return result;
}

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

inline RunResult run_command(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

inline std::string cli_path() {
    const char* p = std::getenv("POLYJAC_CLI");
    return p ? p : "";
}

}  // namespace testutil
