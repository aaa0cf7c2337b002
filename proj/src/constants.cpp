#include "sextic/constants.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "sextic/quadrature.hpp"

namespace sextic {

namespace {

// Standard Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos(double x) {
    // Gamma(x) for x >= 1/2.
    x -= 1.0;
    double a = kLanczos[0];
    const double t = x + kLanczosG + 0.5;
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw domain_error("gamma_fn: argument must be positive, got " + std::to_string(x));
    if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos(1.0 - x));
    return lanczos(x);
}

double K_gamma() {
    const double g6 = gamma_fn(1.0 / 6.0);
    return g6 * g6 / (12.0 * gamma_fn(1.0 / 3.0));
}

double K_quad() {
    const auto& rule = quadrature::gauss_legendre<32>();
    auto integrand = [](double x) {
        const double x3 = x * x * x;
        return 1.0 / std::cbrt(1.0 + x3 * x3);
    };
    return quadrature::adaptive_gauss_legendre<double>(integrand, 0.0, 1.0, rule, 1e-13);
}

double L_quad() {
    // 1 - x^6 = (1 - x)(1 + x + x^2 + x^3 + x^4 + x^5), with 1 - x supplied exactly.
    auto integrand = [](double x, double xc) {
        const double tail = 1.0 + x * (1.0 + x * (1.0 + x * (1.0 + x * (1.0 + x))));
        return 1.0 / std::cbrt(xc * tail);
    };
    return quadrature::tanh_sinh_unit(integrand);
}

double omega_gamma() {
    return gamma_fn(1.0 / 6.0) * gamma_fn(0.5) / (6.0 * std::cbrt(2.0) * gamma_fn(2.0 / 3.0));
}

double duplication_residual(double z) {
    if (!(z > 0.0 && z <= 0.5))
        throw domain_error("duplication_residual: z must lie in (0, 1/2], got " + std::to_string(z));
    const double left = 2.0 * gamma_fn(0.5) * gamma_fn(2.0 * z);
    const double right = std::pow(2.0, 2.0 * z) * gamma_fn(z) * gamma_fn(z + 0.5);
    return std::abs(left - right) / std::abs(right);
}

const ConstantsTable& constants() {
    static const ConstantsTable table = [] {
        ConstantsTable t{};
        t.r = kPicardRadius;
        t.K = {K_gamma(), Provenance::gamma_formula};
        t.K_quad = {K_quad(), Provenance::quadrature};
        t.L = {L_quad(), Provenance::quadrature};
        t.omega = {omega_gamma(), Provenance::gamma_formula};
        t.gamma_rot = kGamma;
        t.delta_rot = kDelta;
        return t;
    }();
    return table;
}

}  // namespace sextic
