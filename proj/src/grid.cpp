#include "sextic/grid.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <thread>

namespace sextic {

namespace {

double parse_double(std::string_view text, std::string_view what) {
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v))
        throw usage_error("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
    return v;
}

double hue_channel(double p, double q, double t) {
    if (t < 0.0) t += 1.0;
    if (t > 1.0) t -= 1.0;
    if (t < 1.0 / 6.0) return p + (q - p) * 6.0 * t;
    if (t < 0.5) return q;
    if (t < 2.0 / 3.0) return p + (q - p) * (2.0 / 3.0 - t) * 6.0;
    return p;
}

std::uint8_t to_byte(double v) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

void append_number(std::string& line, double v) {
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
    line.append(buf, static_cast<std::size_t>(n));
}

}  // namespace

AxisSpec parse_axis(std::string_view text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
        throw usage_error("axis must have the form min:max:n, got '" + std::string(text) + "'");
    AxisSpec axis{};
    axis.min = parse_double(text.substr(0, c1), "axis minimum");
    axis.max = parse_double(text.substr(c1 + 1, c2 - c1 - 1), "axis maximum");
    const auto count_text = text.substr(c2 + 1);
    unsigned long long count = 0;
    const auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc{} || ptr != count_text.data() + count_text.size())
        throw usage_error("cannot parse axis count '" + std::string(count_text) + "'");
    axis.count = static_cast<std::size_t>(count);
    return axis;
}

void GridSpec::validate() const {
    if (re.count < 2 || im.count < 2) throw usage_error("grid counts must be at least 2");
    if (!(re.max > re.min) || !(im.max > im.min)) throw usage_error("grid axes need max > min");
}

std::vector<Sample> evaluate_grid(const GridSpec& spec, unsigned threads) {
    spec.validate();
    std::vector<Sample> samples(spec.size());
    for (std::size_t j = 0; j < spec.im.count; ++j)
        for (std::size_t i = 0; i < spec.re.count; ++i)
            samples[j * spec.re.count + i].z = Complex{spec.re.at(i), spec.im.at(j)};

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx = next++; idx < samples.size(); idx = next++) {
            Sample& sample = samples[idx];
            try {
                const Extended v = evaluate(spec.fn, sample.z);
                if (v.is_infinite()) {
                    sample.kind = SampleKind::infinity;
                } else {
                    sample.kind = SampleKind::value;
                    sample.value = v.value();
                }
            } catch (const domain_error&) {
                sample.kind = SampleKind::undefined;
            } catch (const invalid_state_error&) {
                sample.kind = SampleKind::undefined;
            }
        }
    };

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    return samples;
}

void write_csv(std::ostream& out, std::span<const Sample> samples) {
    out << "re,im,val_re,val_im\n";
    std::string line;
    for (const auto& s : samples) {
        line.clear();
        append_number(line, s.z.real());
        line += ',';
        append_number(line, s.z.imag());
        line += ',';
        switch (s.kind) {
            case SampleKind::value:
                append_number(line, s.value.real());
                line += ',';
                append_number(line, s.value.imag());
                break;
            case SampleKind::infinity: line += "inf,inf"; break;
            case SampleKind::undefined: line += "nan,nan"; break;
        }
        line += '\n';
        out << line;
    }
}

std::array<std::uint8_t, 3> domain_color(const Sample& sample) {
    switch (sample.kind) {
        case SampleKind::infinity: return {255, 255, 255};
        case SampleKind::undefined: return {128, 128, 128};
        case SampleKind::value: break;
    }
    const double m = std::abs(sample.value);
    const double lightness = m / (1.0 + m);
    double hue = std::arg(sample.value) / (2.0 * std::numbers::pi);
    if (hue < 0.0) hue += 1.0;
    const double q = lightness < 0.5 ? lightness * 2.0 : 1.0;
    const double p = 2.0 * lightness - q;
    return {to_byte(hue_channel(p, q, hue + 1.0 / 3.0)), to_byte(hue_channel(p, q, hue)),
            to_byte(hue_channel(p, q, hue - 1.0 / 3.0))};
}

void write_ppm(std::ostream& out, const GridSpec& spec, std::span<const Sample> samples) {
    if (samples.size() != spec.size()) throw usage_error("write_ppm: sample count does not match grid");
    out << "P6\n" << spec.re.count << ' ' << spec.im.count << "\n255\n";
    std::vector<char> row(3 * spec.re.count);
    for (std::size_t jj = spec.im.count; jj-- > 0;) {
        for (std::size_t i = 0; i < spec.re.count; ++i) {
            const auto rgb = domain_color(samples[jj * spec.re.count + i]);
            for (std::size_t ch = 0; ch < 3; ++ch) row[3 * i + ch] = static_cast<char>(rgb[ch]);
        }
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

}  // namespace sextic
