// Command-line front end for the sextic library.
//
//   sextic constants [--json]
//   sextic verify [--tol T] [--samples N] [--seed S]
//   sextic eval --fn {s,c,t,q,wp,wpprime,f,g} --z "re,im"
//   sextic grid --fn F --re min:max:n --im min:max:n --out FILE [--ppm FILE]
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 domain error, 4 I/O error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sextic/constants.hpp"
#include "sextic/functions.hpp"
#include "sextic/grid.hpp"
#include "sextic/verify.hpp"

namespace {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3, kIo = 4 };

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

sextic::Complex parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw sextic::usage_error("--z must have the form \"re,im\", got '" + text + "'");
    auto number = [&](const std::string& part) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            throw sextic::usage_error("cannot parse coordinate '" + part + "'");
        }
        if (used != part.size() || !std::isfinite(v)) throw sextic::usage_error("cannot parse coordinate '" + part + "'");
        return v;
    };
    return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

sextic::FunctionId parse_fn(const std::string& name) {
    const auto id = sextic::parse_function(name);
    if (!id) throw sextic::usage_error("unknown function '" + name + "' (expected s, c, t, q, wp, wpprime, f or g)");
    return *id;
}

int cmd_constants(bool json) {
    const auto& c = sextic::constants();
    const double dk_quad = std::abs(c.K_quad.value - c.K.value);
    const double domega = std::abs(c.omega.value - c.K.value);
    const double dl = std::abs(std::sqrt(3.0) / 2.0 * c.L.value - c.K.value);
    const double dup = sextic::duplication_residual(1.0 / 6.0);
    if (json) {
        nlohmann::ordered_json j;
        j["r"] = c.r.value();
        j["r_exact"] = std::to_string(c.r.num) + "/" + std::to_string(c.r.den);
        j["K_quad"] = c.K_quad.value;
        j["K_gamma"] = c.K.value;
        j["L"] = c.L.value;
        j["omega"] = c.omega.value;
        j["residuals"] = {{"K_quad_minus_K_gamma", dk_quad},
                          {"omega_minus_K", domega},
                          {"K_minus_sqrt3_half_L", dl},
                          {"duplication_at_one_sixth", dup}};
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    std::printf("r        = %lld/%lld = %.5f   (exact, 4^4/5^5)\n", static_cast<long long>(c.r.num),
                static_cast<long long>(c.r.den), c.r.value());
    std::printf("K_quad   = %.17g   (Gauss-Legendre)\n", c.K_quad.value);
    std::printf("K_gamma  = %.17g   (Gamma(1/6)^2 / (12 Gamma(1/3)))\n", c.K.value);
    std::printf("L        = %.17g   (tanh-sinh)\n", c.L.value);
    std::printf("omega    = %.17g   (Gamma(1/6) Gamma(1/2) / (6 2^(1/3) Gamma(2/3)))\n", c.omega.value);
    std::printf("2K       = %.17g   (first pole of t)\n", 2.0 * c.K.value);
    std::printf("|K_quad - K_gamma|          = %.3e\n", dk_quad);
    std::printf("|omega - K_gamma|           = %.3e\n", domega);
    std::printf("|K - (sqrt3/2) L|           = %.3e\n", dl);
    std::printf("duplication residual at 1/6 = %.3e\n", dup);
    return kOk;
}

int cmd_verify(std::optional<double> tol, std::size_t samples, std::uint64_t seed) {
    if (tol && !(*tol > 0.0)) throw sextic::usage_error("--tol must be positive");
    if (samples == 0) throw sextic::usage_error("--samples must be positive");
    sextic::VerifyOptions options;
    options.tol = tol;
    options.samples = samples;
    options.seed = seed;
    const auto report = sextic::run_verification(options);
    sextic::print_report(std::cout, report);
    return report.all_passed() ? kOk : kVerifyFailed;
}

int cmd_eval(const std::string& fn, const std::string& z_text) {
    const auto id = parse_fn(fn);
    const auto z = parse_point(z_text);
    const sextic::Extended v = sextic::evaluate(id, z);
    if (v.is_infinite()) {
        std::printf("inf\n");
    } else {
        std::printf("%.17g %.17g\n", v.value().real(), v.value().imag());
    }
    return kOk;
}

int cmd_grid(const std::string& fn, const std::string& re, const std::string& im, const std::string& out,
             const std::string& ppm) {
    sextic::GridSpec spec{sextic::parse_axis(re), sextic::parse_axis(im), parse_fn(fn)};
    spec.validate();
    const auto samples = sextic::evaluate_grid(spec);

    std::ofstream csv(out, std::ios::binary);
    if (!csv) throw io_error("cannot open '" + out + "' for writing");
    sextic::write_csv(csv, samples);
    csv.close();
    if (!csv) throw io_error("failed writing '" + out + "'");

    if (!ppm.empty()) {
        std::ofstream img(ppm, std::ios::binary);
        if (!img) throw io_error("cannot open '" + ppm + "' for writing");
        sextic::write_ppm(img, spec, samples);
        img.close();
        if (!img) throw io_error("failed writing '" + ppm + "'");
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evaluate and verify the degree-6 trigonometric system s' = c^5, c' = -s^5"};
    app.require_subcommand(1);

    auto* constants = app.add_subcommand("constants", "Print K, L, omega, r and cross-check residuals");
    bool json = false;
    constants->add_flag("--json", json, "Emit a JSON object");

    auto* verify = app.add_subcommand("verify", "Run every property suite");
    std::optional<double> tol;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    verify->add_option("--tol", tol, "Override every residual tolerance");
    verify->add_option("--samples", samples, "Random points per suite")->capture_default_str();
    verify->add_option("--seed", seed, "Random seed")->capture_default_str();

    auto* eval = app.add_subcommand("eval", "Evaluate one function at one point");
    std::string fn;
    std::string z;
    eval->add_option("--fn", fn, "s, c, t, q, wp, wpprime, f or g")->required();
    eval->add_option("--z", z, "Point as \"re,im\"")->required();

    auto* grid = app.add_subcommand("grid", "Sample a function on a rectangle");
    std::string grid_fn;
    std::string re_axis;
    std::string im_axis;
    std::string out;
    std::string ppm;
    grid->add_option("--fn", grid_fn, "Function to sample")->required();
    grid->add_option("--re", re_axis, "Real axis as min:max:n")->required();
    grid->add_option("--im", im_axis, "Imaginary axis as min:max:n")->required();
    grid->add_option("--out", out, "CSV output path")->required();
    grid->add_option("--ppm", ppm, "Optional P6 domain-colouring image");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*constants) return cmd_constants(json);
        if (*verify) return cmd_verify(tol, samples, seed);
        if (*eval) return cmd_eval(fn, z);
        if (*grid) return cmd_grid(grid_fn, re_axis, im_axis, out, ppm);
    } catch (const sextic::usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const sextic::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const io_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kUsage;
}
