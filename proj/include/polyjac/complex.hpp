#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>

namespace polyjac {

// Complex double with the plain 4-multiply / 2-add product and a fixed
// operand order, so every multiplication rounds the same way everywhere
// it is executed.
struct Complex {
    double re = 0.0;
    double im = 0.0;

    friend constexpr Complex operator+(Complex a, Complex b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend constexpr Complex operator-(Complex a, Complex b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend constexpr Complex operator*(Complex a, Complex b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr Complex operator*(double s, Complex a) {
        return {s * a.re, s * a.im};
    }
    friend constexpr Complex operator-(Complex a) { return {-a.re, -a.im}; }

    constexpr Complex& operator+=(Complex o) { *this = *this + o; return *this; }
    constexpr Complex& operator-=(Complex o) { *this = *this - o; return *this; }
    constexpr Complex& operator*=(Complex o) { *this = *this * o; return *this; }

    friend constexpr bool operator==(Complex a, Complex b) {
        return a.re == b.re && a.im == b.im;
    }

    constexpr bool is_zero() const { return re == 0.0 && im == 0.0; }
};

inline double abs(Complex v) { return std::hypot(v.re, v.im); }

inline bool finite(Complex v) { return std::isfinite(v.re) && std::isfinite(v.im); }

// Bitwise identity, distinguishing -0.0 and NaN payloads; used wherever a
// contract promises bit-exact reproduction.
inline bool bit_equal(double a, double b) {
    std::uint64_t ua, ub;
    std::memcpy(&ua, &a, sizeof ua);
    std::memcpy(&ub, &b, sizeof ub);
    return ua == ub;
}

inline bool bit_equal(Complex a, Complex b) {
    return bit_equal(a.re, b.re) && bit_equal(a.im, b.im);
}

}  // namespace polyjac
