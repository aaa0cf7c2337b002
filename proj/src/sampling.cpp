#include "sextic/sampling.hpp"

#include <cmath>

#include "sextic/hexagon.hpp"
#include "sextic/weierstrass.hpp"

namespace sextic {

Complex PointSampler::band_point(double im_fraction, double re_extent) {
    const auto& geo = HexGeometry::standard();
    if (re_extent < 0.0) re_extent = 4.0 * geo.K;
    const double half = im_fraction * geo.L;
    const double re = uniform(-re_extent, re_extent);
    const double im = uniform(-half, half);
    return {re, im};
}

Complex PointSampler::generic_band_point(double clearance) {
    const auto& geo = HexGeometry::standard();
    for (;;) {
        const Complex z = band_point();
        // Lattice points and half periods on the real axis are the multiples of K.
        const double to_multiple_of_K = std::abs(z - Complex{geo.K * std::round(z.real() / geo.K), 0.0});
        if (to_multiple_of_K < clearance) continue;
        if (geo.nearest_vertex_distance(z) < clearance) continue;
        return z;
    }
}

Complex PointSampler::disc_point(double radius, double im_limit) {
    for (;;) {
        const Complex z{uniform(-radius, radius), uniform(-im_limit, im_limit)};
        if (std::abs(z) < radius) return z;
    }
}

Complex PointSampler::cell_point(double clearance) {
    const auto& lattice = Lattice::standard();
    const auto& g = lattice.generators();
    for (;;) {
        const Complex z = uniform(0.0, 1.0) * g[0] + uniform(0.0, 1.0) * g[1];
        if (std::abs(lattice.reduce(z)) >= clearance) return z;
    }
}

}  // namespace sextic
