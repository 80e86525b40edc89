#pragma once

#include <string>
#include <vector>

#include "polyjac/system.hpp"

namespace polyjac {

// Brute-force reference evaluator. Shares nothing with the packed layouts
// or the kernel pipeline: powers by repeated multiplication, every term
// recomputed from scratch, so a pipeline bug cannot cancel against an
// oracle bug.

// Term-by-term evaluation of every polynomial, summed in term order.
std::vector<Complex> naive_evaluate(const PolynomialSystem& sys, const EvaluationPoint& point);

// Symbolic power rule per term: entry (p, i) = sum over terms of
// polynomial p containing x_i of c * a_i * x^(a - e_i); row-major n*n,
// exact zero where variable i never appears.
std::vector<Complex> naive_jacobian(const PolynomialSystem& sys, const EvaluationPoint& point);

// Central differences with real step h on coordinate i; for polynomials
// this recovers the full complex derivative.
std::vector<Complex> finite_diff_jacobian(const PolynomialSystem& sys, const EvaluationPoint& point,
                                          double h);

// |got - want| / max(|got|, |want|), with plain |got - want| once both
// magnitudes drop below 1e-300 (so zero-vs-zero is 0 and no division blows
// up near zero).
double relative_error(Complex got, Complex want);

struct ComparisonReport {
    double max_value_error = 0.0;
    int worst_value_index = -1;
    double max_jacobian_error = 0.0;
    int worst_jac_poly = -1;
    int worst_jac_var = -1;
    double tol = 0.0;
    bool pass = false;

    std::string describe() const;
};

// Pipeline result against both oracles; pass iff both maxima are <= tol.
ComparisonReport compare(const EvaluationResult& result, const PolynomialSystem& sys,
                         const EvaluationPoint& point, double tol);

}  // namespace polyjac
