#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyjac/complex.hpp"

namespace polyjac {

// One monomial: k distinct variables and their powers. positions are
// 0-based variable indices, strictly increasing; exponents[j] is the power
// of variable positions[j] and lies in [1, d].
struct MonomialSupport {
    std::vector<int> positions;
    std::vector<int> exponents;

    int size() const { return static_cast<int>(positions.size()); }

    friend bool operator==(const MonomialSupport&, const MonomialSupport&) = default;
};

struct Term {
    Complex coeff;  // never zero
    MonomialSupport support;
};

// Sparse system under the regularity assumptions: n polynomials in n
// variables, m monomials per polynomial, k variables per monomial, every
// per-variable degree in [1, d]. Terms are stored flat in S_m order:
// monomial g of polynomial p lives at index p*m + g.
struct PolynomialSystem {
    int n = 0;
    int m = 0;
    int k = 0;
    int d = 0;
    std::vector<Term> terms;  // size n*m

    const Term& term(int p, int g) const { return terms[static_cast<std::size_t>(p) * m + g]; }
    Term& term(int p, int g) { return terms[static_cast<std::size_t>(p) * m + g]; }
    std::size_t monomial_count() const { return static_cast<std::size_t>(n) * m; }
};

using EvaluationPoint = std::vector<Complex>;

// System values plus the full Jacobian; entry (p, i) is df_p/dx_i and is an
// exact zero whenever variable i appears in no monomial of polynomial p.
struct EvaluationResult {
    int n = 0;
    std::vector<Complex> values;    // size n
    std::vector<Complex> jacobian;  // size n*n, row-major by polynomial

    Complex jac(int p, int i) const { return jacobian[static_cast<std::size_t>(p) * n + i]; }
};

// A broken invariant, located by term when one is responsible
// (poly/mono are -1 for system-level rules).
struct Violation {
    int poly = -1;
    int mono = -1;
    std::string rule;

    std::string describe() const;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

// Checks every type invariant; violations are data, not errors.
ValidationReport validate_system(const PolynomialSystem& sys);

// Deterministic random benchmark instance: each monomial gets a uniform
// random k-subset of the variables (sorted), exponents uniform in [1, d],
// coefficient components uniform in [-1, 1] with the exact zero excluded.
// Throws std::invalid_argument unless 1 <= k <= n, 1 <= d <= 255, m >= 1.
PolynomialSystem random_system(int n, int m, int k, int d, std::uint64_t seed);

// count points with coordinates uniform in the complex unit box
// (re, im in [-1, 1]), drawn from one seeded stream.
std::vector<EvaluationPoint> random_points(int n, int count, std::uint64_t seed);
EvaluationPoint random_point(int n, std::uint64_t seed);

}  // namespace polyjac
