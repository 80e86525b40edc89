#include "polyjac/kernels.hpp"

namespace polyjac {

// Tallies are accumulated in locals and added to the counter once per call:
// worker counters live one per thread and a per-multiplication increment
// would bounce their cache lines between cores.

void stage1_powers(PowersTable& out, const EvaluationPoint& point, int d, MultCounter& mults) {
    const int n = static_cast<int>(point.size());
    out.n = n;
    out.d = d;
    out.data.resize(static_cast<std::size_t>(n) * d);

    std::uint64_t done = 0;
    for (int i = 0; i < n; ++i) {
        Complex* row = out.data.data() + static_cast<std::size_t>(i) * d;
        row[0] = Complex{1.0, 0.0};
        if (d >= 2) row[1] = point[i];
        for (int e = 2; e < d; ++e) {
            row[e] = row[e - 1] * point[i];
            ++done;
        }
    }
    mults.stage1_powers += done;
}

PowersTable stage1_powers(const EvaluationPoint& point, int d, MultCounter& mults) {
    PowersTable table;
    stage1_powers(table, point, d, mults);
    return table;
}

Complex stage1_common_factor(const MonomialSupport& support, const PowersTable& powers,
                             MultCounter& mults) {
    const int k = support.size();
    Complex factor = powers.at(support.positions[0], support.exponents[0] - 1);
    for (int j = 1; j < k; ++j) {
        factor *= powers.at(support.positions[j], support.exponents[j] - 1);
    }
    mults.stage1_factors += k - 1;
    return factor;
}

Complex stage1_common_factor(const PackedLayout& layout, std::size_t s, const PowersTable& powers,
                             MultCounter& mults) {
    Complex factor = powers.at(layout.position(s, 0), layout.exponent_minus_1(s, 0));
    for (int j = 1; j < layout.k; ++j) {
        factor *= powers.at(layout.position(s, j), layout.exponent_minus_1(s, j));
    }
    mults.stage1_factors += layout.k - 1;
    return factor;
}

void speelpenning_gradient(const Complex* vals, int k, Complex* L, MultCounter& mults) {
    if (k == 1) {
        L[0] = Complex{1.0, 0.0};
        return;
    }
    if (k == 2) {
        L[0] = vals[1];
        L[1] = vals[0];
        return;
    }

    std::uint64_t done = 0;

    // forward products: L[j] = vals[0]*...*vals[j-1] for j = 1..k-1
    L[1] = vals[0];
    for (int r = 0; r < k - 2; ++r) {
        L[r + 2] = L[r + 1] * vals[r + 1];
        ++done;
    }
    // L[k-1] now already holds the derivative with respect to vals[k-1]

    Complex q = vals[k - 1];  // running backward product
    L[k - 2] = L[k - 2] * q;
    ++done;

    // each step extends q by one variable and finishes one derivative
    for (int r = 1; r <= k - 3; ++r) {
        q *= vals[k - 1 - r];
        L[k - 2 - r] = L[k - 2 - r] * q;
        done += 2;
    }

    q *= vals[1];
    L[0] = q;
    ++done;

    mults.stage2 += done;
    mults.speelpenning += done;
}

void stage2_term(std::size_t s, const PackedLayout& layout, const EvaluationPoint& point,
                 Complex factor, ThreadWorkspace& ws, MonsBuffer& mons, MultCounter& mults) {
    const int k = layout.k;
    Complex* L = ws.L.data();
    Complex* vals = ws.vals.data();

    for (int j = 0; j < k; ++j) {
        vals[j] = point[layout.position(s, j)];
    }

    speelpenning_gradient(vals, k, L, mults);

    // factor turns each Speelpenning derivative into x^{a - e_{i_j}}
    for (int j = 0; j < k; ++j) {
        L[j] *= factor;
    }
    // monomial value from its own derivative with respect to the last variable
    L[k] = L[k - 1] * vals[k - 1];

    // coefficients carry the power-rule scaling for the derivative slots
    for (int j = 0; j < k; ++j) {
        L[j] *= layout.deriv_coeff(s, j);
    }
    L[k] *= layout.value_coeff(s);

    mults.stage2 += 2 * static_cast<std::uint64_t>(k) + 2;

    Complex* slots = mons.slots.data();
    for (int j = 0; j < k; ++j) {
        slots[mons_deriv_slot(s, layout.position(s, j), layout.n, layout.m)] = L[j];
    }
    slots[mons_value_slot(s, layout.n, layout.m)] = L[k];
}

std::vector<std::size_t> stage2_slot_targets(const PackedLayout& layout, std::size_t s) {
    std::vector<std::size_t> targets;
    targets.reserve(layout.k + 1);
    for (int j = 0; j < layout.k; ++j) {
        targets.push_back(mons_deriv_slot(s, layout.position(s, j), layout.n, layout.m));
    }
    targets.push_back(mons_value_slot(s, layout.n, layout.m));
    return targets;
}

Complex stage3_sum(std::size_t t, const MonsBuffer& mons, int n, int m) {
    const std::size_t stride = static_cast<std::size_t>(n) * n + n;
    Complex acc{};
    for (int j = 0; j < m; ++j) {
        acc += mons.slots[t + static_cast<std::size_t>(j) * stride];
    }
    return acc;
}

}  // namespace polyjac
