#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sextic/common.hpp"

namespace sextic {

inline constexpr std::size_t kDefaultSeriesOrder = 64;
inline constexpr std::size_t kMaxSeriesOrder = 256;

/// Power series c_0 + c_1 z + ... + c_N z^N truncated after z^N.
///
/// Coefficients are always finite and the order never exceeds
/// kMaxSeriesOrder; construction throws otherwise. Values are immutable.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    /// Takes coefficients c_0..c_N; order is size() - 1.
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries constant(Complex value, std::size_t order);
    /// The series z (zero if order is 0).
    static TruncatedSeries variable(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const { return coeffs_; }
    Complex operator[](std::size_t k) const { return coeffs_[k]; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(Complex scale, const TruncatedSeries& a);

private:
    std::vector<Complex> coeffs_;
};

/// Truncated Cauchy product. Orders must match.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// a^k by binary exponentiation; a^0 is the constant 1.
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned k);

/// Horner evaluation of the truncated polynomial at z.
Complex series_eval(const TruncatedSeries& a, Complex z);

/// Termwise derivative, order N - 1. The derivative of an order-0 series is
/// the order-0 zero series.
TruncatedSeries series_derivative(const TruncatedSeries& a);

}  // namespace sextic
