#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "sextic/common.hpp"
#include "sextic/functions.hpp"

namespace sextic {

struct AxisSpec {
    double min;
    double max;
    std::size_t count;

    double at(std::size_t i) const {
        return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
};

/// Parses "min:max:n". Throws usage_error on malformed input.
AxisSpec parse_axis(std::string_view text);

/// Rectangular sampling window. Counts must be at least 2 and max > min.
struct GridSpec {
    AxisSpec re;
    AxisSpec im;
    FunctionId fn;

    /// Throws usage_error if the invariants do not hold.
    void validate() const;
    std::size_t size() const { return re.count * im.count; }
};

enum class SampleKind { value, infinity, undefined };

struct Sample {
    Complex z;
    SampleKind kind;
    Complex value;
};

/// Samples in row-major order: imaginary part outer (ascending), real part
/// inner (ascending). Points are evaluated concurrently on `threads` workers
/// (0 picks the hardware concurrency); the output order does not depend on it.
std::vector<Sample> evaluate_grid(const GridSpec& spec, unsigned threads = 0);

/// Header "re,im,val_re,val_im"; "inf,inf" at poles, "nan,nan" where the
/// function is not evaluated.
void write_csv(std::ostream& out, std::span<const Sample> samples);

/// RGB colour of a sample: hue from the argument, lightness m/(1+m) from the
/// modulus m. Poles are white and undefined points mid-grey.
std::array<std::uint8_t, 3> domain_color(const Sample& sample);

/// Binary P6 image with im.count rows and re.count columns; the top row is
/// the largest imaginary part.
void write_ppm(std::ostream& out, const GridSpec& spec, std::span<const Sample> samples);

}  // namespace sextic
