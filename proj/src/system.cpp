#include "polyjac/system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rng.hpp"

namespace polyjac {

std::string Violation::describe() const {
    std::string where;
    if (poly >= 0 && mono >= 0) {
        where = "polynomial " + std::to_string(poly) + ", monomial " + std::to_string(mono) + ": ";
    } else if (poly >= 0) {
        where = "polynomial " + std::to_string(poly) + ": ";
    }
    return where + rule;
}

ValidationReport validate_system(const PolynomialSystem& sys) {
    ValidationReport report;
    auto flag = [&](int p, int g, std::string rule) {
        report.violations.push_back({p, g, std::move(rule)});
    };

    if (sys.n < 1) flag(-1, -1, "n must be at least 1");
    if (sys.m < 1) flag(-1, -1, "m must be at least 1");
    if (sys.k < 1) flag(-1, -1, "k must be at least 1");
    if (sys.k > sys.n) flag(-1, -1, "k exceeds n");
    if (sys.d < 1) flag(-1, -1, "d must be at least 1");
    if (sys.d > 255) flag(-1, -1, "d exceeds 255");
    if (sys.terms.size() != sys.monomial_count()) {
        flag(-1, -1, "term count is not n*m");
        return report;  // per-term checks would index garbage
    }

    for (int p = 0; p < sys.n; ++p) {
        for (int g = 0; g < sys.m; ++g) {
            const Term& t = sys.term(p, g);
            if (!finite(t.coeff)) flag(p, g, "non-finite coefficient");
            if (t.coeff.is_zero()) flag(p, g, "zero coefficient");

            const MonomialSupport& sup = t.support;
            if (sup.positions.size() != static_cast<std::size_t>(sys.k) ||
                sup.exponents.size() != static_cast<std::size_t>(sys.k)) {
                flag(p, g, "support size is not k");
                continue;
            }
            for (int j = 0; j < sys.k; ++j) {
                if (sup.positions[j] < 0 || sup.positions[j] >= sys.n) {
                    flag(p, g, "variable index out of range [0,n-1]");
                }
                if (j > 0 && sup.positions[j] <= sup.positions[j - 1]) {
                    flag(p, g, "positions not strictly increasing");
                }
                if (sup.exponents[j] < 1 || sup.exponents[j] > sys.d) {
                    flag(p, g, "exponent out of range [1,d]");
                }
            }
        }
    }
    return report;
}

PolynomialSystem random_system(int n, int m, int k, int d, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_system: n must be at least 1");
    if (m < 1) throw std::invalid_argument("random_system: m must be at least 1");
    if (k < 1 || k > n) throw std::invalid_argument("random_system: need 1 <= k <= n");
    if (d < 1 || d > 255) throw std::invalid_argument("random_system: need 1 <= d <= 255");

    detail::Rng rng(seed);
    PolynomialSystem sys;
    sys.n = n;
    sys.m = m;
    sys.k = k;
    sys.d = d;
    sys.terms.resize(sys.monomial_count());

    std::vector<int> idx(n);
    for (Term& t : sys.terms) {
        // uniform k-subset: partial Fisher-Yates, then sort
        std::iota(idx.begin(), idx.end(), 0);
        for (int j = 0; j < k; ++j) {
            std::swap(idx[j], idx[j + static_cast<int>(rng.below(n - j))]);
        }
        t.support.positions.assign(idx.begin(), idx.begin() + k);
        std::sort(t.support.positions.begin(), t.support.positions.end());

        t.support.exponents.resize(k);
        for (int j = 0; j < k; ++j) {
            t.support.exponents[j] = 1 + static_cast<int>(rng.below(d));
        }

        do {
            t.coeff.re = rng.unit_symmetric();
            t.coeff.im = rng.unit_symmetric();
        } while (t.coeff.is_zero());
    }
    return sys;
}

std::vector<EvaluationPoint> random_points(int n, int count, std::uint64_t seed) {
    detail::Rng rng(seed);
    std::vector<EvaluationPoint> points(count);
    for (EvaluationPoint& pt : points) {
        pt.resize(n);
        for (Complex& c : pt) {
            c.re = rng.unit_symmetric();
            c.im = rng.unit_symmetric();
        }
    }
    return points;
}

EvaluationPoint random_point(int n, std::uint64_t seed) {
    return random_points(n, 1, seed)[0];
}

}  // namespace polyjac
