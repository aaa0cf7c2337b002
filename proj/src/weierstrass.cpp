#include "sextic/weierstrass.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sextic/constants.hpp"

namespace sextic {

namespace {

constexpr double kConstructionTolerance = 1e-9;

std::vector<double> laurent_series_coefficients(double g2, double g3) {
    // c[k] for k = 0..kLaurentTerms+1; entries 0 and 1 are unused.
    std::vector<double> c(kLaurentTerms + 2, 0.0);
    c[2] = g2 / 20.0;
    c[3] = g3 / 28.0;
    for (std::size_t k = 4; k < c.size(); ++k) {
        double acc = 0.0;
        for (std::size_t m = 2; m + 2 <= k; ++m) acc += c[m] * c[k - m];
        const auto kk = static_cast<double>(k);
        c[k] = 3.0 * acc / ((2.0 * kk + 1.0) * (kk - 3.0));
    }
    return {c.begin() + 2, c.end()};
}

}  // namespace

Lattice::Lattice(double omega)
    : omega_(omega),
      generators_{Complex{2.0 * omega, 0.0}, 2.0 * omega * kGamma},
      coeffs_(laurent_series_coefficients(g2(), g3())) {
    if (!(omega > 0.0)) throw usage_error("Lattice: omega must be positive");
    verify();
}

const Lattice& Lattice::standard() {
    static const Lattice lattice(constants().omega.value);
    return lattice;
}

void Lattice::verify() const {
    std::ostringstream diag;
    diag.precision(3);
    const double at_half = std::abs(laurent_wp(omega_) - std::cbrt(4.0));
    if (!(at_half < kConstructionTolerance)) {
        diag << std::scientific << "Lattice: wp(omega) differs from 4^{1/3} by " << at_half;
        throw invalid_state_error(diag.str());
    }
    const Complex offsets[] = {{0.11, 0.07}, {-0.05, 0.13}, {0.09, -0.12}};
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        const Complex half = 0.5 * generators_[g];
        for (const Complex e : offsets) {
            const double gap = std::abs(laurent_wp(half + e) - laurent_wp(-half + e));
            if (!(gap < kConstructionTolerance)) {
                diag << std::scientific << "Lattice: generator " << g
                     << " is not a period of wp(.; 0, 16), mismatch " << gap;
                throw invalid_state_error(diag.str());
            }
        }
    }
}

Complex Lattice::nearest_lattice_point(Complex z) const {
    // z = a * g0 + b * g1 with g0 = 2w and g1 = w + i w sqrt(3).
    const double b = z.imag() / (omega_ * std::sqrt(3.0));
    const double a = (z.real() - b * omega_) / (2.0 * omega_);
    const double a0 = std::round(a);
    const double b0 = std::round(b);
    Complex best{};
    double best_dist = std::numeric_limits<double>::infinity();
    for (int da = -1; da <= 1; ++da) {
        for (int db = -1; db <= 1; ++db) {
            const Complex p = (a0 + da) * generators_[0] + (b0 + db) * generators_[1];
            const double d = std::abs(z - p);
            if (d < best_dist) {
                best_dist = d;
                best = p;
            }
        }
    }
    return best;
}

Complex Lattice::laurent_wp(Complex u) const {
    const Complex w = u * u;
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + *it;
    return 1.0 / w + acc * w;
}

Complex Lattice::laurent_wp_prime(Complex u) const {
    // d/du sum_{k>=2} c_k u^{2k-2} = u * sum_{k>=2} (2k-2) c_k w^{k-2}
    const Complex w = u * u;
    Complex acc{};
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const auto k = static_cast<double>(i + 2);
        acc = acc * w + (2.0 * k - 2.0) * coeffs_[i];
    }
    return -2.0 / (w * u) + u * acc;
}

Extended wp(Complex z, const Lattice& lattice) {
    const Complex u = lattice.reduce(z);
    if (std::abs(u) < kLatticePointGuard) return Extended::infinity();
    return lattice.laurent_wp(u);
}

Extended wp_prime(Complex z, const Lattice& lattice) {
    const Complex u = lattice.reduce(z);
    if (std::abs(u) < kLatticePointGuard) return Extended::infinity();
    return lattice.laurent_wp_prime(u);
}

Extended q_global(Complex z, const Lattice& lattice) {
    const Complex u = lattice.reduce(z);
    if (std::abs(u) < kLatticePointGuard) return Complex{};
    const Complex p = lattice.laurent_wp(u);
    if (p == Complex{}) return Extended::infinity();
    return 1.0 / p;
}

Complex locate_wp_zero(Complex guess, const Lattice& lattice) {
    Complex z = guess;
    for (int iter = 0; iter < 60; ++iter) {
        const Complex u = lattice.reduce(z);
        const Complex step = lattice.laurent_wp(u) / lattice.laurent_wp_prime(u);
        z -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    return z;
}

}  // namespace sextic
