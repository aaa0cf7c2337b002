#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sextic {

using Complex = std::complex<double>;

/// Rotation by a primitive sixth root of unity, e^{i pi/3}.
inline const Complex kGamma{0.5, std::numbers::sqrt3 / 2.0};
/// e^{i pi/6}; its square is kGamma.
inline const Complex kDelta{std::numbers::sqrt3 / 2.0, 0.5};

// Error categories. The CLI maps these onto exit codes.

/// Caller passed arguments that violate an operation's contract.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Point lies outside the region where the function is evaluated.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Continuation path comes too close to a branch point.
class path_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// Internal data no longer satisfies an invariant (e.g. sextic drift).
class invalid_state_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point of the Riemann sphere: a finite complex value or infinity.
class Extended {
public:
    Extended(Complex v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Extended(double v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static Extended infinity() {
        Extended e{0.0};
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    Complex value() const {
        if (infinite_) throw invalid_state_error("value() on point at infinity");
        return value_;
    }

    /// Chordal distance on the Riemann sphere, in [0, 1].
    friend double chordal_distance(const Extended& a, const Extended& b) {
        if (a.infinite_ && b.infinite_) return 0.0;
        if (a.infinite_) return 1.0 / std::sqrt(1.0 + std::norm(b.value_));
        if (b.infinite_) return 1.0 / std::sqrt(1.0 + std::norm(a.value_));
        return std::abs(a.value_ - b.value_) /
               std::sqrt((1.0 + std::norm(a.value_)) * (1.0 + std::norm(b.value_)));
    }

private:
    Complex value_;
    bool infinite_ = false;
};

}  // namespace sextic
