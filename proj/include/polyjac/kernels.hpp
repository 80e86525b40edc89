#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyjac/packing.hpp"

namespace polyjac {

// Complex-multiplication tallies, split by stage so the per-thread budgets
// can be asserted exactly: max(d-2,0) per power chain, k-1 per common
// factor, 5k-4 per stage-2 thread of which 3k-6 inside the Speelpenning
// gradient (k >= 3). Stage 3 only adds, its tally stays zero.
struct MultCounter {
    std::uint64_t stage1_powers = 0;
    std::uint64_t stage1_factors = 0;
    std::uint64_t stage2 = 0;        // includes the speelpenning share
    std::uint64_t speelpenning = 0;
    std::uint64_t stage3 = 0;

    std::uint64_t total() const { return stage1_powers + stage1_factors + stage2 + stage3; }

    MultCounter& operator+=(const MultCounter& o) {
        stage1_powers += o.stage1_powers;
        stage1_factors += o.stage1_factors;
        stage2 += o.stage2;
        speelpenning += o.speelpenning;
        stage3 += o.stage3;
        return *this;
    }

    friend bool operator==(const MultCounter&, const MultCounter&) = default;
};

// Per-evaluation table of x_i^e for e in 0..d-1, one contiguous row per
// variable. Rows 0 and 1 hold 1 and x_i so that degree-minus-one bytes
// index directly, without branches.
struct PowersTable {
    int n = 0;
    int d = 0;
    std::vector<Complex> data;  // size n*d, row-major per variable

    Complex at(int var, int exp) const { return data[static_cast<std::size_t>(var) * d + exp]; }
};

// One common factor per S_m monomial, written by stage 1, read by stage 2.
using FactorBuffer = std::vector<Complex>;

// Per-thread scratch, never shared: vals holds the k variable values of the
// current monomial, L[0..k-1] its derivatives and L[k] its value.
struct ThreadWorkspace {
    std::vector<Complex> L;     // k+1 slots
    std::vector<Complex> vals;  // k slots

    void resize(int k) {
        // a cache line of slack so two workers' buffers never share a line
        L.reserve(k + 5);
        L.resize(k + 1);
        vals.reserve(k + 4);
        vals.resize(k);
    }
};

// Sequential power chains x_i^e = x_i^{e-1} * x_i; max(d-2, 0)
// multiplications per variable.
PowersTable stage1_powers(const EvaluationPoint& point, int d, MultCounter& mults);
void stage1_powers(PowersTable& out, const EvaluationPoint& point, int d, MultCounter& mults);

// Product of the k table entries x_{i_j}^{a_j - 1}; exactly k-1
// multiplications.
Complex stage1_common_factor(const MonomialSupport& support, const PowersTable& powers,
                             MultCounter& mults);
Complex stage1_common_factor(const PackedLayout& layout, std::size_t s, const PowersTable& powers,
                             MultCounter& mults);

// All k derivatives of vals[0]*...*vals[k-1] into L[0..k-1] (L[j] is the
// product with vals[j] left out) via the forward/backward-product schedule;
// 3k-6 multiplications for k >= 3, none for k <= 2.
void speelpenning_gradient(const Complex* vals, int k, Complex* L, MultCounter& mults);

// Full stage-2 thread for monomial s: gradient, factor and coefficient
// multiplications, monomial value; writes its k+1 owned slots of mons.
// 5k-4 multiplications for k >= 3.
void stage2_term(std::size_t s, const PackedLayout& layout, const EvaluationPoint& point,
                 Complex factor, ThreadWorkspace& ws, MonsBuffer& mons, MultCounter& mults);

// The k+1 slots stage2_term(s) writes; value slot last.
std::vector<std::size_t> stage2_slot_targets(const PackedLayout& layout, std::size_t s);

// One output sum: m terms at fixed stride, added in ascending j order.
Complex stage3_sum(std::size_t t, const MonsBuffer& mons, int n, int m);

}  // namespace polyjac
