#include "sextic/quadrature.hpp"

#include <stdexcept>

namespace sextic::quadrature {

GaussRule make_gauss_legendre(std::size_t points) {
    if (points == 0) throw std::invalid_argument("Gauss-Legendre rule needs at least one point");
    GaussRule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    const auto n = static_cast<double>(points);
    const std::size_t m = (points + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        // Tricomi's initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= points; ++k) {
                const auto kk = static_cast<double>(k);
                const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[points - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[points - 1 - i] = w;
    }
    return rule;
}

}  // namespace sextic::quadrature
