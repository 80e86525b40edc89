#include "polyjac/packing.hpp"

#include <stdexcept>
#include <string>

namespace polyjac {

std::size_t mons_slot(std::size_t s, SlotKind kind, int var, int n, int m) {
    const std::size_t nm = static_cast<std::size_t>(n) * m;
    if (s >= nm) throw std::out_of_range("mons_slot: monomial index " + std::to_string(s));
    const std::size_t p = s / m;
    const std::size_t g = s % m;
    const std::size_t stride = static_cast<std::size_t>(n) * n + n;
    if (kind == SlotKind::value) return g * stride + p;
    if (var < 0 || var >= n) throw std::out_of_range("mons_slot: variable " + std::to_string(var));
    return g * stride + static_cast<std::size_t>(var + 1) * n + p;
}

PackedLayout build_layout(const PolynomialSystem& sys) {
    ValidationReport report = validate_system(sys);
    if (!report.ok()) {
        throw std::invalid_argument("build_layout: invalid system: " +
                                    report.violations.front().describe());
    }
    if (sys.n > 256) {
        throw std::invalid_argument("build_layout: n > 256 does not fit the byte encoding");
    }

    PackedLayout layout;
    layout.n = sys.n;
    layout.m = sys.m;
    layout.k = sys.k;
    layout.d = sys.d;

    const std::size_t nm = sys.monomial_count();
    layout.positions.resize(nm * sys.k);
    layout.exponents.resize(nm * sys.k);
    layout.coeffs.resize(nm * (sys.k + 1));

    for (std::size_t s = 0; s < nm; ++s) {
        const Term& t = sys.terms[s];
        for (int j = 0; j < sys.k; ++j) {
            layout.positions[s * sys.k + j] = static_cast<std::uint8_t>(t.support.positions[j]);
            layout.exponents[s * sys.k + j] = static_cast<std::uint8_t>(t.support.exponents[j] - 1);
            // power rule folded in: d(c*x^a)/dx_i carries the factor a_i
            layout.coeffs[static_cast<std::size_t>(j) * nm + s] =
                static_cast<double>(t.support.exponents[j]) * t.coeff;
        }
        layout.coeffs[static_cast<std::size_t>(sys.k) * nm + s] = t.coeff;
    }
    return layout;
}

std::vector<std::size_t> zero_mask(const PolynomialSystem& sys) {
    const std::size_t nm = sys.monomial_count();
    const std::size_t stride = static_cast<std::size_t>(sys.n) * sys.n + sys.n;
    std::vector<std::uint8_t> claimed(stride * sys.m, 0);

    for (std::size_t s = 0; s < nm; ++s) {
        claimed[mons_value_slot(s, sys.n, sys.m)] = 1;
        for (int v : sys.terms[s].support.positions) {
            claimed[mons_deriv_slot(s, v, sys.n, sys.m)] = 1;
        }
    }

    std::vector<std::size_t> mask;
    mask.reserve(claimed.size() - nm * (sys.k + 1));
    for (std::size_t i = 0; i < claimed.size(); ++i) {
        if (!claimed[i]) mask.push_back(i);
    }
    return mask;
}

MonsBuffer make_mons_buffer(const PolynomialSystem& sys) {
    MonsBuffer buf;
    buf.n = sys.n;
    buf.m = sys.m;
    buf.slots.assign(buf.sum_stride() * sys.m, Complex{});
    buf.zero_mask.assign(buf.slots.size(), 0);
    for (std::size_t i : zero_mask(sys)) buf.zero_mask[i] = 1;
    return buf;
}

}  // namespace polyjac
