#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace sextic::test {

using C = std::complex<double>;

// Small deterministic generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    C complex(double radius) {
        for (;;) {
            const C z{real(-radius, radius), real(-radius, radius)};
            if (std::abs(z) <= radius) return z;
        }
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

inline double dist(C a, C b) { return std::abs(a - b); }

// Taylor coefficients of (s, c) at 0 by Picard iteration
//   S <- int C^5,  C <- 1 - int S^5
// on plain coefficient vectors. Each sweep fixes at least one more
// coefficient, so order + 2 sweeps reach the fixed point. Shares no code with
// the library's recurrence.
struct PicardJets {
    std::vector<C> s;
    std::vector<C> c;
};

inline std::vector<C> truncated_product(const std::vector<C>& a, const std::vector<C>& b) {
    std::vector<C> out(a.size(), C{});
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == C{}) continue;
        for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline std::vector<C> fifth_power(const std::vector<C>& a) {
    const auto a2 = truncated_product(a, a);
    const auto a4 = truncated_product(a2, a2);
    return truncated_product(a4, a);
}

inline PicardJets picard_jets(std::size_t order) {
    PicardJets j{std::vector<C>(order + 1, C{}), std::vector<C>(order + 1, C{})};
    j.c[0] = 1.0;
    for (std::size_t sweep = 0; sweep < order + 2; ++sweep) {
        const auto c5 = fifth_power(j.c);
        const auto s5 = fifth_power(j.s);
        PicardJets next{std::vector<C>(order + 1, C{}), std::vector<C>(order + 1, C{})};
        next.c[0] = 1.0;
        for (std::size_t n = 0; n < order; ++n) {
            const double inv = 1.0 / static_cast<double>(n + 1);
            next.s[n + 1] = c5[n] * inv;
            next.c[n + 1] = -s5[n] * inv;
        }
        j = std::move(next);
    }
    return j;
}

inline C horner(const std::vector<C>& a, C z) {
    C acc{};
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace sextic::test
