#pragma once

#include "sextic/common.hpp"
#include "sextic/hexagon.hpp"

namespace sextic {

/// 2|Im z| < L.
bool in_band(Complex z);

struct PeriodReduction {
    Complex z0;  // Re z0 in [-2K, 2K)
    long k;      // z = z0 + 4K k
};

/// Reduces a band point modulo the real period 4K of t.
/// Throws domain_error outside the band.
PeriodReduction reduce_mod_period(Complex z);

/// The 4K-periodic meromorphic extension of t = s/c to the band.
Extended t_band(Complex z);

/// w -> int_0^w (1 - zeta^6)^{-1/3} d zeta along [0, w], principal cube root.
/// Maps the closed unit disc onto the closed hexagon with vertex L at w = 1.
/// Throws domain_error for |w| > 1 and for boundary points within 1e-6 of a
/// sixth root of unity (the roots themselves map to the vertices).
Complex schwarz_christoffel(Complex w);

/// Solves schwarz_christoffel(w) = z by Newton continuation from w = 0.
/// z must lie in the open hexagon with vertex L.
Complex schwarz_christoffel_inverse(Complex z);

/// Round-trip error between t on H_0 and the hexagon map:
/// max(|delta F(conj(delta) t(z)) - z|, |delta F^{-1}(conj(delta) z) - t(z)|).
/// z must lie in H_0 and in the band.
double sc_inverse_residual(Complex z);

/// Whether s^m c^n extends meromorphically to the whole plane.
constexpr bool sc_monomial_extends(int m, int n) { return m == n && m % 2 == 0; }

/// Band period of s^m c^n: 2K when m - n is a multiple of 4, else 4K.
/// Requires m + n to be a multiple of 4 and (m, n) != (0, 0); throws
/// domain_error otherwise.
double band_period(int m, int n);

/// s^m c^n at a band point.
Complex monomial(Complex z, int m, int n);

/// max(|(S + wp^-3)^2 - S|, |16 wp'^-2 (S + wp^-3 - 1/2)^2 - wp^-3|) with S = s^12.
double identity_residual_s12(Complex z);

struct Residuals24 {
    double s24;
    double c24;
};

/// |4 wp'^-2 (E - wp^-6 - wp^-3 wp'^2 / 8)^2 - (1 + wp^3 wp'^2 / 16) wp^-9|
/// for E = s^24 and for E = c^24.
Residuals24 identity_residual_s24(Complex z);

struct RadialLimit {
    Complex vertex;
    Extended coarse;        // t at relative offset 1e-2 from the vertex
    Extended fine;          // t at relative offset 1e-3
    Complex extrapolated;   // Richardson estimate of the vertex value
};

/// Approaches vertex k of H_n radially from the hexagon's center. Only the
/// four vertices on the band boundary (k = 0, 2, 3, 5) are reachable.
RadialLimit t_vertex_limit(int n, int k);

}  // namespace sextic
