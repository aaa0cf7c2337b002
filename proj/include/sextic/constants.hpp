#pragma once

#include <cstdint>

#include "sextic/common.hpp"

namespace sextic {

/// Exact nonnegative rational number.
struct Rational {
    std::int64_t num;
    std::int64_t den;

    constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend constexpr bool operator==(const Rational&, const Rational&) = default;
};

namespace detail {
constexpr std::int64_t ipow(std::int64_t base, unsigned exp) {
    std::int64_t r = 1;
    while (exp-- != 0) r *= base;
    return r;
}
}  // namespace detail

/// Radius 4^4 / 5^5 of the disc on which the local existence theorem
/// guarantees the holomorphic solution pair.
inline constexpr Rational kPicardRadius{detail::ipow(4, 4), detail::ipow(5, 5)};

/// How a tabulated constant was obtained.
enum class Provenance { exact, quadrature, gamma_formula };

struct Constant {
    double value;
    Provenance source;
};

/// Every special constant of the sextic system.
struct ConstantsTable {
    Rational r;
    Constant K;        // quarter period of t (Gamma route)
    Constant K_quad;   // same quantity by quadrature
    Constant L;        // hexagon circumradius and side
    Constant omega;    // least positive zero of wp'
    Complex gamma_rot; // e^{i pi/3}
    Complex delta_rot; // e^{i pi/6}
};

/// Gamma function for real x > 0 (Lanczos, g = 7, nine terms).
/// Throws domain_error for x <= 0.
double gamma_fn(double x);

/// K = Gamma(1/6)^2 / (12 Gamma(1/3)).
double K_gamma();
/// K = int_0^1 (1 + x^6)^{-1/3} dx by adaptive Gauss-Legendre.
double K_quad();
/// L = int_0^1 (1 - x^6)^{-1/3} dx by tanh-sinh.
double L_quad();
/// omega = Gamma(1/6) Gamma(1/2) / (6 * 2^{1/3} * Gamma(2/3)).
double omega_gamma();

/// Relative mismatch of 2 Gamma(1/2) Gamma(2z) = 2^{2z} Gamma(z) Gamma(z + 1/2).
/// z must lie in (0, 1/2].
double duplication_residual(double z);

/// Lazily computed, process-wide table. Safe to call from any thread.
const ConstantsTable& constants();

}  // namespace sextic
