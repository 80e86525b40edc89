#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyjac/system.hpp"

namespace polyjac {

// Flattened read-only inputs for the pipeline, byte-encoded so every kernel
// thread indexes without branching.
//
//   positions  n*m*k bytes, slot s*k + j = variable index of the (j+1)-th
//              variable of S_m monomial s
//   exponents  n*m*k bytes, same slot = that variable's degree minus one
//   coeffs     n*m*(k+1) entries, derivative-major: block j < k holds, for
//              every monomial s, the coefficient of its derivative with
//              respect to its (j+1)-th variable, pre-scaled by the power
//              rule (c * a); block k holds the plain coefficients c
//
// The byte encoding caps n at 256 and d at 255; larger systems are rejected
// when packed.
struct PackedLayout {
    int n = 0;
    int m = 0;
    int k = 0;
    int d = 0;
    std::vector<std::uint8_t> positions;
    std::vector<std::uint8_t> exponents;
    std::vector<Complex> coeffs;

    std::size_t monomial_count() const { return static_cast<std::size_t>(n) * m; }

    int position(std::size_t s, int j) const { return positions[s * k + j]; }
    int exponent_minus_1(std::size_t s, int j) const { return exponents[s * k + j]; }
    Complex deriv_coeff(std::size_t s, int j) const {
        return coeffs[static_cast<std::size_t>(j) * monomial_count() + s];
    }
    Complex value_coeff(std::size_t s) const {
        return coeffs[static_cast<std::size_t>(k) * monomial_count() + s];
    }

    // constant-memory-equivalent size of positions + exponents
    std::size_t footprint_bytes() const { return positions.size() + exponents.size(); }
};

// Stage-3 input: (n^2+n)*m term slots. Block j (stride n^2+n) holds the
// j-th additive term of each of the n^2+n output sums: first the n monomial
// values (one per polynomial), then n groups of n derivative terms with
// respect to x_1, ..., x_n. Slots owned by no monomial value or derivative
// are flagged in zero_mask and hold an exact complex zero for the buffer's
// whole lifetime.
struct MonsBuffer {
    int n = 0;
    int m = 0;
    std::vector<Complex> slots;            // size (n^2+n)*m
    std::vector<std::uint8_t> zero_mask;   // 1 = permanently zero

    std::size_t sum_stride() const { return static_cast<std::size_t>(n) * n + n; }
};

enum class SlotKind { value, derivative };

// Maps S_m monomial s to its slot in MonsBuffer: with p = s / m and
// g = s % m, value terms land at g*(n^2+n) + p and the derivative with
// respect to global variable var at g*(n^2+n) + (var+1)*n + p.
// Throws std::out_of_range for bad s or var.
std::size_t mons_slot(std::size_t s, SlotKind kind, int var, int n, int m);

inline std::size_t mons_value_slot(std::size_t s, int n, int m) {
    return mons_slot(s, SlotKind::value, -1, n, m);
}
inline std::size_t mons_deriv_slot(std::size_t s, int var, int n, int m) {
    return mons_slot(s, SlotKind::derivative, var, n, m);
}

// Throws std::invalid_argument when the system fails validation or does not
// fit the byte encoding (n > 256).
PackedLayout build_layout(const PolynomialSystem& sys);

// All MonsBuffer slots claimed by no monomial value and no derivative with
// respect to a variable present in the monomial; sorted ascending. Its size
// is always (n^2+n)*m - n*m*(k+1).
std::vector<std::size_t> zero_mask(const PolynomialSystem& sys);

// Buffer with the mask applied; masked slots already hold exact zero.
MonsBuffer make_mons_buffer(const PolynomialSystem& sys);

}  // namespace polyjac
