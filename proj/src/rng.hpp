#pragma once

#include <cstdint>
#include <random>

namespace polyjac::detail {

// mt19937_64 plus hand-rolled draws. The standard pins the engine's output
// bit-for-bit but not the distributions', so sampling is done here to keep
// generated systems identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // uniform in [0, bound), bound >= 1; Lemire's multiply-shift with the
    // usual rejection of the biased low range
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t x = gen_();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            std::uint64_t t = (0 - bound) % bound;
            while (lo < t) {
                x = gen_();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // uniform in [-1, 1), 53-bit mantissa grid
    double unit_symmetric() {
        double u = static_cast<double>(gen_() >> 11) * 0x1p-53;  // [0, 1)
        return 2.0 * u - 1.0;
    }

private:
    std::mt19937_64 gen_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace polyjac::detail
