#pragma once

#include <cstddef>
#include <vector>

#include "sextic/common.hpp"
#include "sextic/series.hpp"

namespace sextic {

/// Re-expansion order used at every intermediate continuation step.
inline constexpr std::size_t kStepOrder = 32;
/// Step length is min(kStepRatio * distance to nearest vertex, kMaxStep).
inline constexpr double kStepRatio = 0.4;
inline constexpr double kMaxStep = 0.5;
/// Largest |s^6 + c^6 - 1| accepted as initial data for a local expansion.
inline constexpr double kSexticTolerance = 1e-9;
/// eval_t reports infinity when |c| falls below this.
inline constexpr double kPoleThreshold = 1e-8;

/// Taylor expansions of s and c about a common center.
struct JetPair {
    Complex center;
    TruncatedSeries s;
    TruncatedSeries c;
    /// Distance from the center within which the expansion is used.
    double trust_radius;

    Complex s_value() const { return s[0]; }
    Complex c_value() const { return c[0]; }
};

/// Straight-segment re-expansion centers from the origin to a target.
struct ContinuationPath {
    Complex target;
    /// Starts at 0 and ends at target.
    std::vector<Complex> step_points;
};

/// Step length allowed from a given center.
double trust_radius_at(Complex center);

/// Local Taylor solution of s' = c^5, c' = -s^5 with s(center) = s0, c(center) = c0.
///
/// Coefficients follow from a_{n+1} = [z^n](C^5)/(n+1) and
/// b_{n+1} = -[z^n](S^5)/(n+1), with the powers built one coefficient at a
/// time. Throws invalid_state_error if |s0^6 + c0^6 - 1| >= kSexticTolerance
/// and usage_error if order is 0.
JetPair local_taylor(Complex s0, Complex c0, std::size_t order, Complex center = {});

/// Plans the re-expansion centers for reaching z.
/// Throws domain_error outside the band and path_error within the vertex
/// exclusion radius.
ContinuationPath plan_path(Complex z);

/// Analytic continuation of the solution pair from the origin to z.
JetPair continue_to(Complex z, std::size_t order = kStepOrder);

struct SCValue {
    Complex s;
    Complex c;
};

/// (s(z), c(z)) for z in the band.
SCValue eval_sc(Complex z);

/// t(z) = s(z)/c(z); infinity where |c(z)| < kPoleThreshold.
Extended eval_t(Complex z);

struct FGValue {
    Complex f;
    Complex g;
};

/// Hyperbolic companions f(z) = conj(delta) s(delta z) and g(z) = c(delta z),
/// which satisfy f' = g^5, g' = f^5 and g^6 - f^6 = 1.
FGValue eval_fg(Complex z);

}  // namespace sextic
