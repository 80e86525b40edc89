#include "polyjac/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace polyjac {

namespace {

using StdComplex = std::complex<double>;

StdComplex to_std(Complex v) { return {v.re, v.im}; }
Complex from_std(StdComplex v) { return {v.real(), v.imag()}; }

// x^e by e-1 multiplications (e >= 1); e == 0 yields exactly 1
StdComplex repeated_power(StdComplex x, int e) {
    if (e == 0) return {1.0, 0.0};
    StdComplex p = x;
    for (int i = 1; i < e; ++i) p *= x;
    return p;
}

void check_point(const PolynomialSystem& sys, const EvaluationPoint& point) {
    if (static_cast<int>(point.size()) != sys.n) {
        throw std::invalid_argument("oracle: point dimension mismatch");
    }
}

}  // namespace

std::vector<Complex> naive_evaluate(const PolynomialSystem& sys, const EvaluationPoint& point) {
    check_point(sys, point);
    std::vector<Complex> values(sys.n);
    for (int p = 0; p < sys.n; ++p) {
        StdComplex acc{0.0, 0.0};
        for (int g = 0; g < sys.m; ++g) {
            const Term& t = sys.term(p, g);
            StdComplex term = to_std(t.coeff);
            for (int j = 0; j < sys.k; ++j) {
                term *= repeated_power(to_std(point[t.support.positions[j]]),
                                       t.support.exponents[j]);
            }
            acc += term;
        }
        values[p] = from_std(acc);
    }
    return values;
}

std::vector<Complex> naive_jacobian(const PolynomialSystem& sys, const EvaluationPoint& point) {
    check_point(sys, point);
    std::vector<StdComplex> jac(static_cast<std::size_t>(sys.n) * sys.n, StdComplex{0.0, 0.0});
    for (int p = 0; p < sys.n; ++p) {
        for (int g = 0; g < sys.m; ++g) {
            const Term& t = sys.term(p, g);
            for (int j = 0; j < sys.k; ++j) {
                const int var = t.support.positions[j];
                // d(c x^a)/dx_var = c * a_var * x^(a - e_var)
                StdComplex d = to_std(t.coeff) * static_cast<double>(t.support.exponents[j]);
                for (int r = 0; r < sys.k; ++r) {
                    const int e = t.support.exponents[r] - (r == j ? 1 : 0);
                    d *= repeated_power(to_std(point[t.support.positions[r]]), e);
                }
                jac[static_cast<std::size_t>(p) * sys.n + var] += d;
            }
        }
    }
    std::vector<Complex> out(jac.size());
    std::transform(jac.begin(), jac.end(), out.begin(), from_std);
    return out;
}

std::vector<Complex> finite_diff_jacobian(const PolynomialSystem& sys, const EvaluationPoint& point,
                                          double h) {
    check_point(sys, point);
    if (!(h > 0.0)) throw std::invalid_argument("finite_diff_jacobian: h must be positive");

    std::vector<Complex> jac(static_cast<std::size_t>(sys.n) * sys.n);
    EvaluationPoint shifted = point;
    for (int i = 0; i < sys.n; ++i) {
        shifted[i].re = point[i].re + h;
        const std::vector<Complex> fp = naive_evaluate(sys, shifted);
        shifted[i].re = point[i].re - h;
        const std::vector<Complex> fm = naive_evaluate(sys, shifted);
        shifted[i] = point[i];
        for (int p = 0; p < sys.n; ++p) {
            jac[static_cast<std::size_t>(p) * sys.n + i] =
                Complex{(fp[p].re - fm[p].re) / (2.0 * h), (fp[p].im - fm[p].im) / (2.0 * h)};
        }
    }
    return jac;
}

double relative_error(Complex got, Complex want) {
    const double ag = abs(got);
    const double aw = abs(want);
    const double diff = abs(got - want);
    if (ag < 1e-300 && aw < 1e-300) return diff;
    return diff / std::max(ag, aw);
}

std::string ComparisonReport::describe() const {
    std::ostringstream os;
    os.precision(3);
    os << (pass ? "PASS" : "FAIL") << " (tol " << tol << "): max value error " << max_value_error;
    if (worst_value_index >= 0) os << " at f[" << worst_value_index << "]";
    os << ", max Jacobian error " << max_jacobian_error;
    if (worst_jac_poly >= 0) os << " at J[" << worst_jac_poly << "][" << worst_jac_var << "]";
    return os.str();
}

ComparisonReport compare(const EvaluationResult& result, const PolynomialSystem& sys,
                         const EvaluationPoint& point, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("compare: tol must be positive");
    if (result.n != sys.n || static_cast<int>(result.values.size()) != sys.n ||
        result.jacobian.size() != static_cast<std::size_t>(sys.n) * sys.n) {
        throw std::invalid_argument("compare: result dimension mismatch");
    }

    const std::vector<Complex> values = naive_evaluate(sys, point);
    const std::vector<Complex> jac = naive_jacobian(sys, point);

    ComparisonReport report;
    report.tol = tol;
    for (int p = 0; p < sys.n; ++p) {
        const double err = relative_error(result.values[p], values[p]);
        if (err > report.max_value_error) {
            report.max_value_error = err;
            report.worst_value_index = p;
        }
    }
    for (int p = 0; p < sys.n; ++p) {
        for (int i = 0; i < sys.n; ++i) {
            const std::size_t at = static_cast<std::size_t>(p) * sys.n + i;
            const double err = relative_error(result.jacobian[at], jac[at]);
            if (err > report.max_jacobian_error) {
                report.max_jacobian_error = err;
                report.worst_jac_poly = p;
                report.worst_jac_var = i;
            }
        }
    }
    report.pass = report.max_value_error <= tol && report.max_jacobian_error <= tol;
    return report;
}

}  // namespace polyjac
