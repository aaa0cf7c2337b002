#include "sextic/band.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "sextic/constants.hpp"
#include "sextic/quadrature.hpp"
#include "sextic/sextic.hpp"
#include "sextic/weierstrass.hpp"

namespace sextic {

namespace {

constexpr double kScPanelTolerance = 1e-15;
constexpr double kRootSnap = 1e-12;
constexpr double kRootExclusion = 1e-6;
constexpr double kCoarseOffset = 1e-2;
constexpr double kFineOffset = 1e-3;

std::string describe(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << '(' << z.real() << ", " << z.imag() << ')';
    return os.str();
}

Complex nearest_sixth_root(Complex w) {
    const double k = std::round(std::arg(w) / (std::numbers::pi / 3.0));
    return std::polar(1.0, k * std::numbers::pi / 3.0);
}

Complex sc_integrand_scale(Complex w) {
    // F(w) = w * int_0^1 (1 - (w u)^6)^{-1/3} du
    const Complex w6 = std::pow(w, 6);
    auto integrand = [w6](double u) {
        const double u3 = u * u * u;
        return std::pow(1.0 - w6 * (u3 * u3), -1.0 / 3.0);
    };
    return quadrature::adaptive_gauss_legendre<Complex>(integrand, 0.0, 1.0,
                                                        quadrature::gauss_legendre<64>(),
                                                        kScPanelTolerance, 40);
}

struct WpData {
    Complex p;
    Complex dp;
};

WpData wp_at_generic(Complex z) {
    const Extended p = wp(z);
    const Extended dp = wp_prime(z);
    if (p.is_infinite() || dp.is_infinite())
        throw domain_error("identity residual: " + describe(z) + " is a pole of wp");
    if (std::abs(p.value()) < 1e-12 || std::abs(dp.value()) < 1e-12)
        throw domain_error("identity residual: wp or wp' vanishes at " + describe(z));
    return {p.value(), dp.value()};
}

}  // namespace

bool in_band(Complex z) { return HexGeometry::standard().in_band(z); }

PeriodReduction reduce_mod_period(Complex z) {
    if (!in_band(z)) throw domain_error("reduce_mod_period: " + describe(z) + " lies outside the band");
    const double K = constants().K.value;
    const double period = 4.0 * K;
    long k = static_cast<long>(std::floor((z.real() + 2.0 * K) / period));
    Complex z0 = z - period * static_cast<double>(k);
    // Floor of a rounded quotient can land one period off at the seam.
    if (z0.real() >= 2.0 * K) {
        ++k;
        z0 = z - period * static_cast<double>(k);
    } else if (z0.real() < -2.0 * K) {
        --k;
        z0 = z - period * static_cast<double>(k);
    }
    return {z0, k};
}

Extended t_band(Complex z) { return eval_t(reduce_mod_period(z).z0); }

Complex schwarz_christoffel(Complex w) {
    const double r = std::abs(w);
    if (r > 1.0 + kRootSnap) throw domain_error("schwarz_christoffel: " + describe(w) + " lies outside the closed unit disc");
    if (r == 0.0) return {};
    const Complex root = nearest_sixth_root(w);
    const double to_root = std::abs(w - root);
    if (to_root < kRootSnap) return constants().L.value * root;
    if (r > 1.0 - kRootSnap && to_root < kRootExclusion)
        throw domain_error("schwarz_christoffel: boundary point " + describe(w) + " is too close to a vertex preimage");
    return w * sc_integrand_scale(w);
}

Complex schwarz_christoffel_inverse(Complex z) {
    const auto& geo = HexGeometry::standard();
    // The target hexagon is H_0 rotated by conj(delta).
    if (!geo.in_hexagon(kDelta * z, 0))
        throw domain_error("schwarz_christoffel_inverse: " + describe(z) + " lies outside the hexagon");
    constexpr int kHomotopySteps = 8;
    Complex w{};
    for (int j = 1; j <= kHomotopySteps; ++j) {
        const Complex target = z * (static_cast<double>(j) / kHomotopySteps);
        for (int iter = 0; iter < 50; ++iter) {
            const Complex slope = std::pow(1.0 - std::pow(w, 6), -1.0 / 3.0);
            Complex step = (schwarz_christoffel(w) - target) / slope;
            Complex next = w - step;
            // Stay inside the disc.
            while (std::abs(next) >= 1.0) {
                step *= 0.5;
                next = w - step;
            }
            w = next;
            if (std::abs(step) < 1e-15) break;
        }
    }
    return w;
}

double sc_inverse_residual(Complex z) {
    const auto& geo = HexGeometry::standard();
    if (!geo.in_hexagon(z, 0)) throw domain_error("sc_inverse_residual: " + describe(z) + " lies outside H_0");
    const Extended t = eval_t(z);
    if (t.is_infinite()) throw domain_error("sc_inverse_residual: t has a pole at " + describe(z));
    const Complex tv = t.value();
    const double forward = std::abs(kDelta * schwarz_christoffel(std::conj(kDelta) * tv) - z);
    const double backward = std::abs(kDelta * schwarz_christoffel_inverse(std::conj(kDelta) * z) - tv);
    return std::max(forward, backward);
}

double band_period(int m, int n) {
    if (((m + n) % 4 + 4) % 4 != 0 || (m == 0 && n == 0))
        throw domain_error("band_period: m + n must be a nonzero multiple of 4 (got m = " +
                           std::to_string(m) + ", n = " + std::to_string(n) + ")");
    const double K = constants().K.value;
    return ((m - n) % 4 == 0) ? 2.0 * K : 4.0 * K;
}

Complex monomial(Complex z, int m, int n) {
    const auto [s, c] = eval_sc(z);
    return std::pow(s, m) * std::pow(c, n);
}

double identity_residual_s12(Complex z) {
    const auto [s, c] = eval_sc(z);
    const auto [p, dp] = wp_at_generic(z);
    const Complex s6 = std::pow(s, 6);
    const Complex S = s6 * s6;
    const Complex inv3 = 1.0 / (p * p * p);
    const double first = std::abs((S + inv3) * (S + inv3) - S);
    const Complex shifted = S + inv3 - 0.5;
    const double second = std::abs(16.0 / (dp * dp) * shifted * shifted - inv3);
    return std::max(first, second);
}

Residuals24 identity_residual_s24(Complex z) {
    const auto [s, c] = eval_sc(z);
    const auto [p, dp] = wp_at_generic(z);
    const Complex inv3 = 1.0 / (p * p * p);
    const Complex dp2 = dp * dp;
    const Complex rhs = (1.0 + p * p * p * dp2 / 16.0) * inv3 * inv3 * inv3;
    auto residual = [&](Complex E) {
        const Complex inner = E - inv3 * inv3 - inv3 * dp2 / 8.0;
        return std::abs(4.0 / dp2 * inner * inner - rhs);
    };
    const Complex s12 = std::pow(std::pow(s, 6), 2);
    const Complex c12 = std::pow(std::pow(c, 6), 2);
    return {residual(s12 * s12), residual(c12 * c12)};
}

RadialLimit t_vertex_limit(int n, int k) {
    const int kk = ((k % 6) + 6) % 6;
    if (kk == 1 || kk == 4)
        throw domain_error("t_vertex_limit: vertex " + std::to_string(k) + " lies off the band boundary");
    const auto& geo = HexGeometry::standard();
    const Complex center = geo.center(n);
    const Complex v = geo.vertex(n, kk);
    const Extended coarse = t_band(center + (v - center) * (1.0 - kCoarseOffset));
    const Extended fine = t_band(center + (v - center) * (1.0 - kFineOffset));
    // Near a vertex t - t(v) behaves like (z - v)^{3/2}.
    const double ratio = std::pow(kFineOffset / kCoarseOffset, 1.5);
    const Complex extrapolated = (fine.value() - ratio * coarse.value()) / (1.0 - ratio);
    return {v, coarse, fine, extrapolated};
}

}  // namespace sextic
