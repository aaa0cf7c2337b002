#pragma once

#include <array>

#include "sextic/common.hpp"

namespace sextic {

/// Radius of the disk around every hexagon vertex where evaluation is refused.
inline constexpr double kVertexExclusion = 1e-3;

/// The row of regular hexagons H_n = 2nK + H_0, where H_0 has circumradius L,
/// inradius K = (sqrt 3 / 2) L, vertical edges at Re z = +-K and vertices
/// delta * L * gamma^k. Adjacent hexagons share their vertical edges.
struct HexGeometry {
    double L;
    double K;

    /// Geometry built from the process-wide constants table.
    static const HexGeometry& standard();

    Complex center(int n) const { return {2.0 * K * n, 0.0}; }
    /// Vertex k (0..5) of H_n; k = 0 is the upper-right vertex K + iL/2 of H_0.
    Complex vertex(int n, int k) const;
    std::array<Complex, 6> vertices(int n) const;

    /// Distance from z to the nearest vertex of any hexagon in the row.
    double nearest_vertex_distance(Complex z) const;
    /// Open hexagon H_n membership.
    bool in_hexagon(Complex z, int n) const;
    /// Open strip 2|Im z| < L, contained in the union of the row and its shared edges.
    bool in_band(Complex z) const { return 2.0 * std::abs(z.imag()) < L; }
};

}  // namespace sextic
