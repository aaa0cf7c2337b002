#include "sextic/hexagon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sextic/constants.hpp"

namespace sextic {

const HexGeometry& HexGeometry::standard() {
    static const HexGeometry geometry{constants().L.value, constants().K.value};
    return geometry;
}

Complex HexGeometry::vertex(int n, int k) const {
    Complex rot = kDelta * L;
    for (int i = 0; i < ((k % 6) + 6) % 6; ++i) rot *= kGamma;
    return center(n) + rot;
}

std::array<Complex, 6> HexGeometry::vertices(int n) const {
    std::array<Complex, 6> v{};
    for (int k = 0; k < 6; ++k) v[k] = vertex(n, k);
    return v;
}

double HexGeometry::nearest_vertex_distance(Complex z) const {
    const int n0 = static_cast<int>(std::lround(z.real() / (2.0 * K)));
    double best = std::numeric_limits<double>::infinity();
    for (int n = n0 - 1; n <= n0 + 1; ++n)
        for (const auto& v : vertices(n)) best = std::min(best, std::abs(z - v));
    return best;
}

bool HexGeometry::in_hexagon(Complex z, int n) const {
    const Complex w = z - center(n);
    // Edge normals point along the sixth roots of unity.
    Complex normal{1.0, 0.0};
    for (int k = 0; k < 6; ++k) {
        if ((w * std::conj(normal)).real() >= K) return false;
        normal *= kGamma;
    }
    return true;
}

}  // namespace sextic
