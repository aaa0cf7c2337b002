#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace sextic::quadrature {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule make_gauss_legendre(std::size_t points);

template <std::size_t Points>
const GaussRule& gauss_legendre() {
    static const GaussRule rule = make_gauss_legendre(Points);
    return rule;
}

template <class T, class F>
T gauss_panel(F& f, double a, double b, const GaussRule& rule) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    T acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

namespace detail {

template <class T, class F>
T bisect(F& f, double a, double b, const GaussRule& rule, T whole, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const T left = gauss_panel<T>(f, a, mid, rule);
    const T right = gauss_panel<T>(f, mid, b, rule);
    const T halves = left + right;
    if (depth <= 0 || std::abs(halves - whole) <= tol) return halves;
    return bisect<T>(f, a, mid, rule, left, tol, depth - 1) +
           bisect<T>(f, mid, b, rule, right, tol, depth - 1);
}

}  // namespace detail

/// Composite Gauss-Legendre on [a, b], bisecting any panel whose estimate
/// changes by more than `panel_tol` when split. T is double or complex.
template <class T, class F>
T adaptive_gauss_legendre(F f, double a, double b, const GaussRule& rule, double panel_tol,
                          int max_depth = 48) {
    const T whole = gauss_panel<T>(f, a, b, rule);
    return detail::bisect<T>(f, a, b, rule, whole, panel_tol, max_depth);
}

/// Double-exponential (tanh-sinh) rule on [0, 1].
///
/// The integrand is called as f(x, 1 - x) with the complement computed
/// without cancellation, so endpoint singularities like (1 - x)^(-1/3) can be
/// evaluated accurately. Levels are refined until successive estimates agree
/// to `tol`.
template <class F>
double tanh_sinh_unit(F f, double tol = 1e-15, int max_level = 12) {
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    constexpr double kTMax = 4.0;

    auto term = [&](double t) {
        const double u = kHalfPi * std::sinh(t);
        const double e_pos = std::exp(2.0 * u);
        const double e_neg = std::exp(-2.0 * u);
        const double x = 1.0 / (1.0 + e_neg);
        const double xc = 1.0 / (1.0 + e_pos);
        if (!(x > 0.0) || !(xc > 0.0)) return 0.0;
        const double ch = std::cosh(u);
        const double weight = kHalfPi * std::cosh(t) / (2.0 * ch * ch);
        if (weight == 0.0) return 0.0;
        return weight * f(x, xc);
    };

    double h = 1.0;
    double sum = term(0.0);
    for (double t = h; t <= kTMax; t += h) sum += term(t) + term(-t);
    double estimate = h * sum;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double added = 0.0;
        for (double t = h; t <= kTMax; t += 2.0 * h) added += term(t) + term(-t);
        sum += added;
        const double next = h * sum;
        const double change = std::abs(next - estimate);
        estimate = next;
        if (level >= 3 && change <= tol * std::max(1.0, std::abs(estimate))) break;
    }
    return estimate;
}

}  // namespace sextic::quadrature
