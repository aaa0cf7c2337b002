#include "sextic/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace sextic {

namespace {

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.order() != b.order())
        throw usage_error(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                          " vs " + std::to_string(b.order()) + ")");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) {
    if (order > kMaxSeriesOrder)
        throw usage_error("series order " + std::to_string(order) + " exceeds maximum " +
                          std::to_string(kMaxSeriesOrder));
    coeffs_.assign(order + 1, Complex{});
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw usage_error("series needs at least one coefficient");
    if (order() > kMaxSeriesOrder)
        throw usage_error("series order " + std::to_string(order()) + " exceeds maximum " +
                          std::to_string(kMaxSeriesOrder));
    if (!std::all_of(coeffs_.begin(), coeffs_.end(), finite))
        throw invalid_state_error("series coefficient is not finite");
}

TruncatedSeries TruncatedSeries::constant(Complex value, std::size_t order) {
    std::vector<Complex> c(order + 1);
    c[0] = value;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
    std::vector<Complex> c(order + 1);
    if (order >= 1) c[1] = 1.0;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series add");
    std::vector<Complex> c(a.coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series subtract");
    std::vector<Complex> c(a.coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs_[k] - b.coeffs_[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(Complex scale, const TruncatedSeries& a) {
    std::vector<Complex> c(a.coeffs_);
    for (auto& v : c) v *= scale;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_mul");
    const auto x = a.coeffs();
    const auto y = b.coeffs();
    const std::size_t n = x.size();
    std::vector<Complex> c(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{};
        for (std::size_t i = 0; i <= k; ++i) acc += x[i] * y[k - i];
        c[k] = acc;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned k) {
    TruncatedSeries result = TruncatedSeries::constant(1.0, a.order());
    TruncatedSeries base = a;
    bool first = true;
    while (k != 0) {
        if (k & 1U) {
            result = first ? base : series_mul(result, base);
            first = false;
        }
        k >>= 1U;
        if (k != 0) base = series_mul(base, base);
    }
    return result;
}

Complex series_eval(const TruncatedSeries& a, Complex z) {
    const auto c = a.coeffs();
    Complex acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
    if (a.order() == 0) return TruncatedSeries(std::size_t{0});
    const auto c = a.coeffs();
    std::vector<Complex> d(a.order());
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
    return TruncatedSeries(std::move(d));
}

}  // namespace sextic
