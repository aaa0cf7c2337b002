#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "sextic/common.hpp"

namespace sextic {

/// Number of retained Laurent coefficients c_2..c_37.
inline constexpr std::size_t kLaurentTerms = 36;
/// Reduced arguments closer than this to 0 count as lattice points.
inline constexpr double kLatticePointGuard = 1e-8;

/// Period lattice of wp(z; 0, 16), generated by 2*omega and 2*omega*gamma.
///
/// The hexagonal shape is checked numerically when the lattice is built:
/// the raw Laurent series must agree at pairs of points that differ by a
/// generator, and wp(omega) must equal 4^{1/3}. Construction throws
/// invalid_state_error if either check fails.
class Lattice {
public:
    explicit Lattice(double omega);

    /// Lattice built from the Gamma-formula value of omega.
    static const Lattice& standard();

    static constexpr double g2() { return 0.0; }
    static constexpr double g3() { return 16.0; }
    double omega() const { return omega_; }
    const std::array<Complex, 2>& generators() const { return generators_; }
    /// Laurent coefficients c_2..c_37 of wp = z^{-2} + sum c_k z^{2k-2}.
    std::span<const double> laurent_coefficients() const { return coeffs_; }

    Complex nearest_lattice_point(Complex z) const;
    /// z minus its nearest lattice point (lands in the Voronoi cell of 0).
    Complex reduce(Complex z) const { return z - nearest_lattice_point(z); }

    /// Laurent sums without reduction; accurate for |u| well inside 2*omega.
    Complex laurent_wp(Complex u) const;
    Complex laurent_wp_prime(Complex u) const;

private:
    void verify() const;

    double omega_;
    std::array<Complex, 2> generators_;
    std::vector<double> coeffs_;
};

/// wp(z; 0, 16); infinity at lattice points.
Extended wp(Complex z, const Lattice& lattice = Lattice::standard());
/// wp'(z; 0, 16); infinity at lattice points.
Extended wp_prime(Complex z, const Lattice& lattice = Lattice::standard());
/// q = 1/wp, the global extension of s^2 c^2. Zero at lattice points,
/// infinity at zeros of wp.
Extended q_global(Complex z, const Lattice& lattice = Lattice::standard());

/// Newton iteration for a zero of wp starting from `guess`.
Complex locate_wp_zero(Complex guess, const Lattice& lattice = Lattice::standard());

}  // namespace sextic
