#include "sextic/sextic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "sextic/hexagon.hpp"

namespace sextic {

namespace {

constexpr std::size_t kMaxPathSteps = 1'000'000;

std::string format_point(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << '(' << z.real() << ", " << z.imag() << ')';
    return os.str();
}

/// Coefficients of x, x^2, ..., x^5 grown one index at a time.
class FifthPower {
public:
    explicit FifthPower(std::size_t capacity) {
        for (auto& p : powers_) p.reserve(capacity);
    }

    /// Appends coefficient n of every power, given x_0..x_n, and returns [z^n] x^5.
    Complex extend(const std::vector<Complex>& x) {
        const std::size_t n = powers_[0].size();
        powers_[0].push_back(x[n]);
        for (std::size_t p = 1; p < powers_.size(); ++p) {
            const auto& lower = powers_[p - 1];
            Complex acc{};
            for (std::size_t i = 0; i <= n; ++i) acc += lower[i] * x[n - i];
            powers_[p].push_back(acc);
        }
        return powers_[4][n];
    }

private:
    // powers_[p] holds the coefficients of x^{p+1}; powers_[0] mirrors x.
    std::array<std::vector<Complex>, 5> powers_;
};

}  // namespace

double trust_radius_at(Complex center) {
    return std::min(kStepRatio * HexGeometry::standard().nearest_vertex_distance(center), kMaxStep);
}

JetPair local_taylor(Complex s0, Complex c0, std::size_t order, Complex center) {
    if (order == 0) throw usage_error("local_taylor: order must be at least 1");
    const Complex s2 = s0 * s0;
    const Complex c2 = c0 * c0;
    const double drift = std::abs(s2 * s2 * s2 + c2 * c2 * c2 - 1.0);
    if (!(drift < kSexticTolerance)) {
        std::ostringstream os;
        os << "local_taylor: initial data violates s^6 + c^6 = 1 (drift " << drift << ") at "
           << format_point(center);
        throw invalid_state_error(os.str());
    }

    std::vector<Complex> a{s0};
    std::vector<Complex> b{c0};
    a.reserve(order + 1);
    b.reserve(order + 1);
    FifthPower s_pow(order);
    FifthPower c_pow(order);
    for (std::size_t n = 0; n < order; ++n) {
        const Complex s5 = s_pow.extend(a);
        const Complex c5 = c_pow.extend(b);
        const double inv = 1.0 / static_cast<double>(n + 1);
        a.push_back(c5 * inv);
        b.push_back(-s5 * inv);
    }
    return JetPair{center, TruncatedSeries(std::move(a)), TruncatedSeries(std::move(b)),
                   trust_radius_at(center)};
}

ContinuationPath plan_path(Complex z) {
    const auto& geo = HexGeometry::standard();
    if (!geo.in_band(z)) throw domain_error("point " + format_point(z) + " lies outside the band 2|Im z| < L");
    if (geo.nearest_vertex_distance(z) < kVertexExclusion)
        throw path_error("point " + format_point(z) + " lies within the vertex exclusion radius");

    ContinuationPath path{z, {Complex{}}};
    Complex p{};
    while (p != z) {
        if (path.step_points.size() > kMaxPathSteps)
            throw path_error("continuation to " + format_point(z) + " needs too many steps");
        const double h = trust_radius_at(p);
        const Complex d = z - p;
        const double dist = std::abs(d);
        const Complex next = dist <= h ? z : p + d * (h / dist);
        if (geo.nearest_vertex_distance(next) < kVertexExclusion)
            throw path_error("path to " + format_point(z) + " passes within the vertex exclusion radius");
        path.step_points.push_back(next);
        p = next;
    }
    return path;
}

JetPair continue_to(Complex z, std::size_t order) {
    const ContinuationPath path = plan_path(z);
    const auto& pts = path.step_points;
    if (pts.size() == 1) return local_taylor(0.0, 1.0, order, 0.0);

    JetPair jet = local_taylor(0.0, 1.0, kStepOrder, 0.0);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Complex h = pts[i] - jet.center;
        const Complex s = series_eval(jet.s, h);
        const Complex c = series_eval(jet.c, h);
        jet = local_taylor(s, c, i + 1 == pts.size() ? order : kStepOrder, pts[i]);
    }
    return jet;
}

SCValue eval_sc(Complex z) {
    const JetPair jet = continue_to(z, 1);
    return {jet.s_value(), jet.c_value()};
}

Extended eval_t(Complex z) {
    const auto [s, c] = eval_sc(z);
    if (std::abs(c) < kPoleThreshold) return Extended::infinity();
    return s / c;
}

FGValue eval_fg(Complex z) {
    const auto [s, c] = eval_sc(kDelta * z);
    return {std::conj(kDelta) * s, c};
}

}  // namespace sextic
