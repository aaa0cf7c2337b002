#pragma once

#include <cstdint>
#include <random>

#include "sextic/common.hpp"

namespace sextic {

/// Seeded source of test points in the regions used by the property suites.
///
/// Uniform variates are taken from the top 53 bits of mt19937_64, so a seed
/// gives the same points with every standard library.
class PointSampler {
public:
    explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    /// |Im z| < im_fraction * L and |Re z| <= re_extent.
    Complex band_point(double im_fraction = 0.45, double re_extent = -1.0);

    /// band_point at least `clearance` away from the lattice points 2nK, the
    /// half periods (2n+1)K and every hexagon vertex.
    Complex generic_band_point(double clearance = 0.25);

    /// Uniform in the disc |z| < radius intersected with |Im z| < im_limit.
    Complex disc_point(double radius, double im_limit);

    /// Uniform in the period parallelogram of wp, at least `clearance` from
    /// every lattice point.
    Complex cell_point(double clearance = 0.3);

private:
    std::mt19937_64 rng_;
};

}  // namespace sextic
