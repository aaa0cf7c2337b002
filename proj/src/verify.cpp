#include "sextic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <ostream>
#include <utility>

#include "sextic/band.hpp"
#include "sextic/constants.hpp"
#include "sextic/hexagon.hpp"
#include "sextic/sampling.hpp"
#include "sextic/sextic.hpp"
#include "sextic/weierstrass.hpp"

namespace sextic {

namespace {

Complex sixth(Complex z) {
    const Complex z2 = z * z;
    return z2 * z2 * z2;
}

class Runner {
public:
    explicit Runner(const VerifyOptions& options) : options_(options) {}

    PointSampler sampler(std::uint64_t salt) const {
        return PointSampler(options_.seed * 0x9E3779B97F4A7C15ULL + salt);
    }
    std::size_t samples(double scale = 1.0) const {
        return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(scale * static_cast<double>(options_.samples))));
    }

    double tol(double default_tol) const { return options_.tol.value_or(default_tol); }

    void bound(std::string name, double measured, double default_tol, std::string detail = {}) {
        const double tol = options_.tol.value_or(default_tol);
        report_.suites.push_back({std::move(name), CheckKind::bound, measured, tol, measured < tol, std::move(detail)});
    }
    void witness(std::string name, double measured, double threshold, std::string detail = {}) {
        report_.suites.push_back(
            {std::move(name), CheckKind::witness, measured, threshold, measured > threshold, std::move(detail)});
    }
    void count(std::string name, std::size_t violations, std::string detail = {}) {
        const auto v = static_cast<double>(violations);
        report_.suites.push_back({std::move(name), CheckKind::count, v, 0.0, violations == 0, std::move(detail)});
    }

    /// Runs a suite body; an escaping exception fails the named check.
    void guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            report_.suites.push_back({name, CheckKind::bound, NAN, NAN, false, std::string("error: ") + e.what()});
        }
    }

    VerifyReport take() { return std::move(report_); }

private:
    VerifyOptions options_;
    VerifyReport report_;
};

void constants_suites(Runner& run) {
    run.guarded("Constants K_quad=K_gamma=omega=(sqrt3/2)L", [&] {
        const auto& c = constants();
        const double k = c.K.value;
        const double worst = std::max({std::abs(c.K_quad.value - k), std::abs(c.omega.value - k),
                                       std::abs(std::sqrt(3.0) / 2.0 * c.L.value - k)});
        run.bound("Constants K_quad=K_gamma=omega=(sqrt3/2)L", worst, 1e-10);
    });
    run.guarded("Constants duplication formula at z=1/6",
                [&] { run.bound("Constants duplication formula at z=1/6", duplication_residual(1.0 / 6.0), 1e-12); });
    run.guarded("Thm2 Picard radius r=4^4/5^5", [&] {
        const bool exact = kPicardRadius == Rational{256, 3125};
        run.count("Thm2 Picard radius r=4^4/5^5", exact ? 0 : 1, "r = 256/3125 = 0.08192");
    });
}

void sextic_suites(Runner& run) {
    const auto& geo = HexGeometry::standard();

    run.guarded("Thm1 s^6+c^6=1", [&] {
        auto pts = run.sampler(1);
        double worst = 0.0;
        for (std::size_t i = 0; i < run.samples(2.0); ++i) {
            const auto [s, c] = eval_sc(pts.band_point());
            worst = std::max(worst, std::abs(sixth(s) + sixth(c) - 1.0));
        }
        run.bound("Thm1 s^6+c^6=1", worst, 1e-10);
    });

    run.guarded("Thm3 rotation s(gz)=g s(z), c(gz)=c(z)", [&] {
        auto pts = run.sampler(2);
        double worst = 0.0;
        for (std::size_t i = 0; i < run.samples(); ++i) {
            const Complex z = pts.disc_point(0.45 * geo.L, 0.45 * geo.L);
            const auto base = eval_sc(z);
            const auto rot = eval_sc(kGamma * z);
            worst = std::max({worst, std::abs(rot.s - kGamma * base.s), std::abs(rot.c - base.c)});
        }
        run.bound("Thm3 rotation s(gz)=g s(z), c(gz)=c(z)", worst, 1e-10);
    });

    run.guarded("Thm3 reality and parity", [&] {
        auto pts = run.sampler(3);
        double worst = 0.0;
        for (std::size_t i = 0; i < run.samples(); ++i) {
            const Complex z = pts.band_point();
            const auto base = eval_sc(z);
            const auto conj_pt = eval_sc(std::conj(z));
            const auto neg = eval_sc(-z);
            worst = std::max({worst, std::abs(conj_pt.s - std::conj(base.s)), std::abs(conj_pt.c - std::conj(base.c)),
                              std::abs(neg.s + base.s), std::abs(neg.c - base.c)});
        }
        run.bound("Thm3 reality and parity", worst, 1e-10);
    });

    run.guarded("Thm4 g^6-f^6=1", [&] {
        auto pts = run.sampler(4);
        double worst = 0.0;
        for (std::size_t i = 0; i < run.samples(0.5); ++i) {
            const Complex z = std::conj(kDelta) * pts.band_point();
            const auto [f, g] = eval_fg(z);
            worst = std::max(worst, std::abs(sixth(g) - sixth(f) - 1.0));
        }
        run.bound("Thm4 g^6-f^6=1", worst, 1e-10);
    });

    run.guarded("Thm7 (t')^3=1+t^6", [&] {
        auto pts = run.sampler(5);
        double ode = 0.0;
        double slope = 0.0;
        double q_ode = 0.0;
        for (std::size_t i = 0; i < run.samples(0.5); ++i) {
            const JetPair jet = continue_to(pts.generic_band_point());
            const Complex s = jet.s_value();
            const Complex c = jet.c_value();
            const Complex ds = series_derivative(jet.s)[0];
            const Complex dc = series_derivative(jet.c)[0];
            const Complex t = s / c;
            const Complex dt = (ds * c - s * dc) / (c * c);
            ode = std::max(ode, std::abs(dt * dt * dt - 1.0 - sixth(t)));
            slope = std::max(slope, std::abs(dt - 1.0 / (c * c)));

            const TruncatedSeries q = series_mul(series_pow(jet.s, 2), series_pow(jet.c, 2));
            const Complex qv = q[0];
            const Complex dq = series_derivative(q)[0];
            q_ode = std::max(q_ode, std::abs(dq * dq - 4.0 * qv * (1.0 - 4.0 * qv * qv * qv)));
        }
        run.bound("Thm7 (t')^3=1+t^6", ode, 1e-8);
        run.bound("Thm7 t'=1/c^2", slope, 1e-9);
        run.bound("q ODE (q')^2=4q(1-4q^3)", q_ode, 1e-8);
    });

    run.guarded("Oracle stepped vs single N=128 expansion", [&] {
        auto pts = run.sampler(6);
        const JetPair origin = local_taylor(0.0, 1.0, 128);
        double worst = 0.0;
        for (std::size_t i = 0; i < run.samples(0.5); ++i) {
            const Complex z = pts.disc_point(0.8 * geo.L, 0.49 * geo.L);
            const auto stepped = eval_sc(z);
            const Complex s1 = series_eval(origin.s, z);
            const Complex c1 = series_eval(origin.c, z);
            const double scale = std::max(std::abs(s1), std::abs(c1));
            worst = std::max(worst, std::max(std::abs(stepped.s - s1), std::abs(stepped.c - c1)) / scale);
        }
        run.bound("Oracle stepped vs single N=128 expansion", worst, 1e-9);
    });
}

void weierstrass_suites(Runner& run) {
    const auto& lattice = Lattice::standard();

    run.guarded("Thm5 q=1/wp", [&] {
        auto pts = run.sampler(10);
        double worst = 0.0;
        for (std::size_t i = 0; i < run.samples(); ++i) {
            const Complex z = pts.band_point();
            const auto [s, c] = eval_sc(z);
            worst = std::max(worst, std::abs(q_global(z).value() - s * s * c * c));
        }
        run.bound("Thm5 q=1/wp", worst, 1e-9);
    });

    run.guarded("wp(omega)=4^(1/3)", [&] {
        run.bound("wp(omega)=4^(1/3)", std::abs(wp(lattice.omega()).value() - std::cbrt(4.0)), 1e-9);
    });

    run.guarded("wp ODE (wp')^2=4wp^3-16", [&] {
        auto pts = run.sampler(11);
        double ode = 0.0;
        double period = 0.0;
        double homogeneity = 0.0;
        for (std::size_t i = 0; i < run.samples(); ++i) {
            const Complex z = pts.cell_point();
            const Complex p = wp(z).value();
            const Complex dp = wp_prime(z).value();
            ode = std::max(ode, std::abs(dp * dp - 4.0 * p * p * p + 16.0));
            for (const Complex g : lattice.generators()) period = std::max(period, std::abs(wp(z + g).value() - p));
            homogeneity = std::max(homogeneity, std::abs(wp(kGamma * z).value() - p / (kGamma * kGamma)));
        }
        run.bound("wp ODE (wp')^2=4wp^3-16", ode, 1e-8);
        run.bound("wp periodicity under both generators", period, 1e-9);
        run.bound("wp homogeneity wp(gz)=g^-2 wp(z)", homogeneity, 1e-9);
    });

    run.guarded("wp zeros are simple", [&] {
        const Complex guess = (2.0 * lattice.omega() / 3.0) * (1.0 + kGamma) + Complex{0.05, -0.03};
        double residual = 0.0;
        double min_slope = INFINITY;
        for (const Complex g : {guess, std::conj(guess)}) {
            const Complex z0 = locate_wp_zero(g);
            residual = std::max(residual, std::abs(wp(z0).value()));
            min_slope = std::min(min_slope, std::abs(wp_prime(z0).value()));
        }
        run.bound("wp zeros located", residual, 1e-9);
        run.witness("wp zeros are simple |wp'(z0)|", min_slope, 0.1);
    });
}

void band_suites(Runner& run) {
    const auto& geo = HexGeometry::standard();
    const double K = geo.K;

    run.guarded("Thm8 t(z+4K)=t(z)", [&] {
        auto pts = run.sampler(20);
        double worst = 0.0;
        double gap = 0.0;
        for (std::size_t i = 0; i < run.samples(); ++i) {
            // Continuation along both paths, no reduction.
            Complex z = pts.generic_band_point();
            z -= 4.0 * K * std::floor((z.real() + 2.0 * K) / (4.0 * K));
            const Complex t0 = eval_t(z).value();
            const Complex t1 = eval_t(z + 4.0 * K).value();
            worst = std::max(worst, std::abs(t1 - t0));
            const Extended t2 = eval_t(z + 2.0 * K);
            gap = std::max(gap, t2.is_infinite() ? 1.0 : std::abs(t2.value() - t0));
        }
        run.bound("Thm8 t(z+4K)=t(z)", worst, 1e-9);
        run.witness("Thm8 2K is not a period of t", gap, 0.1);
    });

    run.guarded("Thm8 |t|<1 on H0, |t|>1 on H1", [&] {
        auto pts = run.sampler(21);
        std::size_t violations = 0;
        for (std::size_t i = 0; i < run.samples(); ++i) {
            const Complex z{pts.uniform(-0.95 * K, 0.95 * K), pts.uniform(-0.45 * geo.L, 0.45 * geo.L)};
            if (!(std::abs(t_band(z).value()) < 1.0)) ++violations;
            const Extended t1 = t_band(z + 2.0 * K);
            if (t1.is_finite() && !(std::abs(t1.value()) > 1.0)) ++violations;
        }
        run.count("Thm8 |t|<1 on H0, |t|>1 on H1", violations);
    });

    run.guarded("Thm8 t(delta L)=delta", [&] {
        const RadialLimit lim = t_vertex_limit(0, 0);
        const double err = std::abs(lim.fine.value() - kDelta);
        char buf[96];
        std::snprintf(buf, sizeof buf, "extrapolated error %.3e", std::abs(lim.extrapolated - kDelta));
        run.bound("Thm8 t(delta L)=delta", err, 1e-4, buf);
    });

    run.guarded("Thm6 identity (S+wp^-3)^2=S", [&] {
        auto pts = run.sampler(22);
        double s12 = 0.0;
        double s24 = 0.0;
        const std::size_t n = std::max<std::size_t>(1, run.samples(0.2));
        for (std::size_t i = 0; i < n; ++i) {
            const Complex z = pts.generic_band_point();
            s12 = std::max(s12, identity_residual_s12(z));
            const auto r24 = identity_residual_s24(z);
            s24 = std::max({s24, r24.s24, r24.c24});
        }
        run.bound("Thm6 identity (S+wp^-3)^2=S", s12, 1e-8);
        run.bound("s24/c24 identity", s24, 1e-7);
    });

    run.guarded("Thm10 classifier", [&] {
        std::size_t mismatches = 0;
        for (int m = -10; m <= 10; ++m)
            for (int n = -10; n <= 10; ++n)
                if (sc_monomial_extends(m, n) != (m == n && m % 2 == 0)) ++mismatches;
        run.count("Thm10 classifier", mismatches);
    });

    run.guarded("Thm11 band periods", [&] {
        auto pts = run.sampler(23);
        constexpr std::pair<int, int> kMonomials[] = {{2, 2}, {4, 0}, {1, 3}, {3, 1}, {2, 6}};
        double worst = 0.0;
        double weakest_refutation = INFINITY;
        std::string failing;
        const std::size_t n = std::max<std::size_t>(1, run.samples(0.2));
        std::vector<Complex> zs;
        for (std::size_t i = 0; i < n; ++i) zs.push_back(pts.band_point(0.45, 2.0 * K));
        for (const auto& [m, k] : kMonomials) {
            const double period = band_period(m, k);
            double shift = 0.0;
            double half = 0.0;
            for (const Complex z : zs) {
                const Complex base = monomial(z, m, k);
                shift = std::max(shift, std::abs(monomial(z + period, m, k) - base));
                half = std::max(half, std::abs(monomial(z + 0.5 * period, m, k) - base));
            }
            if (!(shift < run.tol(1e-8))) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%s(%d,%d) shift residual %.3e", failing.empty() ? "" : "; ", m, k, shift);
                failing += buf;
            }
            worst = std::max(worst, shift);
            weakest_refutation = std::min(weakest_refutation, half);
        }
        run.bound("Thm11 s^m c^n has period band_period(m,n)", worst, 1e-8, failing);
        run.witness("Thm11 half of band_period(m,n) is not a period", weakest_refutation, 1e-2);
    });

    run.guarded("SC map", [&] {
        run.bound("SC map F(1)=L", std::abs(schwarz_christoffel(1.0) - L_quad()), 1e-8);
        auto pts = run.sampler(24);
        double round_trip = 0.0;
        double symmetry = 0.0;
        const std::size_t n = std::max<std::size_t>(1, run.samples(0.2));
        for (std::size_t i = 0; i < n; ++i) {
            const Complex z{pts.uniform(-0.95 * K, 0.95 * K), pts.uniform(-0.45 * geo.L, 0.45 * geo.L)};
            round_trip = std::max(round_trip, sc_inverse_residual(z));
            const Complex w = std::polar(std::sqrt(pts.uniform(0.0, 0.98)), pts.uniform(-3.2, 3.2));
            const Complex f = schwarz_christoffel(w);
            symmetry = std::max({symmetry, std::abs(schwarz_christoffel(std::conj(w)) - std::conj(f)),
                                 std::abs(schwarz_christoffel(kGamma * w) - kGamma * f)});
        }
        run.bound("SC map round trip with t on H0", round_trip, 1e-8);
        run.bound("SC map conjugation and rotation symmetry", symmetry, 1e-12);
    });
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

VerifyReport run_verification(const VerifyOptions& options) {
    Runner run(options);
    constants_suites(run);
    sextic_suites(run);
    weierstrass_suites(run);
    band_suites(run);
    return run.take();
}

void print_report(std::ostream& out, const VerifyReport& report) {
    char buf[256];
    std::size_t failed = 0;
    for (const auto& s : report.suites) {
        const char* verdict = s.passed ? "PASS" : "FAIL";
        switch (s.kind) {
            case CheckKind::bound:
                std::snprintf(buf, sizeof buf, "%s: max_residual=%.3e tol=%.1e %s", s.name.c_str(), s.measured,
                              s.threshold, verdict);
                break;
            case CheckKind::witness:
                std::snprintf(buf, sizeof buf, "%s: max_gap=%.3e threshold=%.1e %s", s.name.c_str(), s.measured,
                              s.threshold, verdict);
                break;
            case CheckKind::count:
                std::snprintf(buf, sizeof buf, "%s: violations=%.0f %s", s.name.c_str(), s.measured, verdict);
                break;
        }
        out << buf;
        if (!s.detail.empty()) out << " (" << s.detail << ')';
        out << '\n';
        if (!s.passed) ++failed;
    }
    out << (failed == 0 ? "all " : "") << report.suites.size() - failed << '/' << report.suites.size()
        << " checks passed\n";
}

}  // namespace sextic
