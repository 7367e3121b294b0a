#include "commands.hpp"

#include "specmod/moduli.hpp"
#include "specmod/monopole.hpp"
#include "specmod/rng.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace specmod::cli {

namespace {

Rational rational_in_box(UniformRng& rng, long span, long max_den)
{
    const long num = static_cast<long>(rng.index(static_cast<std::uint64_t>(2 * span + 1))) - span;
    const long den = 1 + static_cast<long>(rng.index(static_cast<std::uint64_t>(max_den)));
    return Rational(num, den);
}

json disguise_report(const Config& cfg, const AuditOptions& opt, Family family)
{
    const auto pts = sample_moduli_points(family, opt.n, cfg.seed);
    const AuditReport rep = audit_disguise(family, pts);
    json j;
    j["audit"] = family == Family::R ? "disguise-r" : "disguise-h";
    j["seed"] = cfg.seed;
    j["n"] = rep.requested;
    j["evaluated"] = rep.evaluated;
    j["excluded"] = rep.excluded;
    j["excluded_indices"] = rep.excluded_indices;
    j["tolerance"] = cfg.tol;
    j["worst_residual"] = rounded(rep.worst_residual, cfg.precision);
    j["pass"] = rep.worst_residual < cfg.tol && rep.evaluated == rep.requested;
    j["notes"] = rep.notes;
    if (opt.explain) {
        json res = json::array();
        for (double r : rep.residuals) {
            res.push_back(rounded(r, cfg.precision));
        }
        j["residuals"] = res;
    }
    return j;
}

json morphism_report(const Config& cfg, const AuditOptions& opt)
{
    UniformRng rng(cfg.seed);
    std::size_t exact_failures = 0;
    std::size_t permutation_failures = 0;
    std::size_t done = 0;
    while (done < opt.n) {
        const std::array<Rational, 3> T{rational_in_box(rng, 20, 8),
                                        rational_in_box(rng, 20, 8),
                                        rational_in_box(rng, 20, 8)};
        if (T[0] == T[1] || T[0] == T[2] || T[1] == T[2]) {
            continue;
        }
        ++done;
        const auto t = morphism_triple<Rational>(T);
        const Rational e1 = T[0] + T[1] + T[2];
        const Rational e2 = T[0] * T[1] + T[0] * T[2] + T[1] * T[2];
        const Rational e3 = T[0] * T[1] * T[2];
        const bool exact = Rational(12) * t[0] == Rational(4) * e1 &&
                           Rational(12) * t[0] * t[0] - t[1] == Rational(4) * e2 &&
                           Rational(4) * t[0] * t[0] * t[0] - t[1] * t[0] + t[2] ==
                               Rational(4) * e3;
        if (!exact) {
            ++exact_failures;
        }
        const std::array<std::array<int, 3>, 5> perms{
            {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        for (const auto& p : perms) {
            const auto u = morphism_triple<Rational>({T[p[0]], T[p[1]], T[p[2]]});
            if (u != t) {
                ++permutation_failures;
                break;
            }
        }
    }
    json j;
    j["audit"] = "morphism";
    j["seed"] = cfg.seed;
    j["n"] = done;
    j["arithmetic"] = "exact-rational";
    j["cubic_identity_failures"] = exact_failures;
    j["permutation_failures"] = permutation_failures;
    j["pass"] = exact_failures == 0 && permutation_failures == 0;
    j["notes"] = json::array({"t3 carries the sign forced by the cubic identity "
                              "4 prod(x - T_i) = 4(x - t1)^3 - t2 (x - t1) - t3"});
    return j;
}

json group_report(const Config& cfg, const AuditOptions& opt)
{
    UniformRng rng(cfg.seed);
    double worst = 0.0;
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < opt.n; ++i) {
        const TRPoint t{Complex(rng.range(-2, 2), rng.range(-2, 2)),
                        Complex(rng.range(-2, 2), rng.range(-2, 2)),
                        Complex(rng.range(-2, 2), rng.range(-2, 2))};
        const BasisChange g1{std::polar(rng.range(0.5, 1.5), rng.range(0.0, kTwoPi)),
                             Complex(rng.range(-1, 1), rng.range(-1, 1))};
        const BasisChange g2{std::polar(rng.range(0.5, 1.5), rng.range(0.0, kTwoPi)),
                             Complex(rng.range(-1, 1), rng.range(-1, 1))};

        // composition law
        const TRPoint lhs = act_G(g1, act_G(g2, t));
        const TRPoint rhs = act_G(compose(g1, g2), t);
        worst = std::max({worst, std::abs(lhs.t1 - rhs.t1), std::abs(lhs.t2 - rhs.t2),
                          std::abs(lhs.t3 - rhs.t3)});

        // curve-point equivariance
        const Complex x(rng.range(-2, 2), rng.range(-2, 2));
        const Complex s = x - t.t1;
        const Complex y = std::sqrt(4.0 * s * s * s - t.t2 * s - t.t3);
        const auto [x2, y2] = act_G_curve(g1, x, y);
        worst = std::max(worst, curve_residual(act_G(g1, t), x2, y2));
    }
    json j;
    j["audit"] = "group";
    j["seed"] = cfg.seed;
    j["n"] = opt.n;
    j["tolerance"] = cfg.tol;
    j["worst_residual"] = rounded(worst, cfg.precision);
    j["pass"] = worst < cfg.tol;
    j["notes"] = json::array(
        {"basis changes [[c, c'], [0, 1/c]] have determinant 1 by construction, "
         "preserving the intersection pairing"});
    return j;
}

json ramanujan_exact_report(const Config& cfg)
{
    const bool ok = ramanujan_exact_check(Rational(cfg.order));
    json j;
    j["audit"] = "ramanujan-exact";
    j["order"] = cfg.order;
    j["arithmetic"] = "exact-rational";
    j["pass"] = ok;
    j["notes"] = json::array(
        {"checked as q du_k/dq identities for u = (E2/12, E4/12, E6/216); "
         "t_k = (2 pi i)^k u_k restores the tau-form of the system with the "
         "transcendental scale tracked symbolically"});
    return j;
}

json halphen_theta_report(const Config& cfg)
{
    const Rational order(cfg.order);
    const double tol = 1e-12;
    const double kappa_fit = fit_halphen_kappa(1.0, 2.0, 20, order, tol);
    const double residual = halphen_theta_residual(0.8, 3.0, 45, order, tol);

    // The display normalization pi/r1 depends on rho through the curve
    // scale; report it next to the constant the ODE actually fixes.
    json comparison = json::array();
    for (double rho : {1.5, 2.5}) {
        const SpectralCurve2 c = r_params_from_tau(Tau::imaginary(rho), order, tol);
        comparison.push_back({{"rho", rho},
                              {"pi_over_r1", rounded(std::numbers::pi / c.r1, cfg.precision)},
                              {"kappa", halphen_theta_kappa}});
    }

    json j;
    j["audit"] = "halphen-theta";
    j["kappa_frozen"] = halphen_theta_kappa;
    j["kappa_refit"] = rounded(kappa_fit, cfg.precision);
    j["fit_window"] = "rho in [1, 2], 20 samples";
    j["out_of_sample_residual"] = rounded(residual, cfg.precision);
    j["residual_window"] = "rho in [0.8, 3], 45 samples";
    j["pass"] = std::abs(kappa_fit - halphen_theta_kappa) < 1e-6 && residual < 1e-8;
    j["prefactor_comparison"] = comparison;
    j["notes"] = json::array(
        {"a solution-preserving rescaling of a homogeneous quadratic field must be "
         "constant; the rho-dependent display prefactor pi/r1 is reported for "
         "comparison only"});
    return j;
}

json selfdual_report(const Config& cfg, const AuditOptions& opt)
{
    UniformRng rng(cfg.seed);
    std::size_t done = 0;
    bool exact_zero = true;
    double forward_min = 0.0;
    while (done < opt.n) {
        auto draw = [&rng] {
            return Rational(1 + static_cast<long>(rng.index(200)),
                            1 + static_cast<long>(rng.index(20)));
        };
        std::array<Rational, 3> om{draw(), draw(), draw()};
        if (done % 2 == 1) {
            const auto i = rng.index(3);
            om[i] *= -1;
            om[(i + 1 + rng.index(2)) % 3] *= -1;
        }
        const auto sq = metric_squares(om);
        if (!(sq[0] > 0 && sq[1] > 0 && sq[2] > 0)) {
            continue;
        }
        ++done;
        const auto rev = selfdual_residual_triple(om, -1);
        exact_zero = exact_zero && rev[0] == 0 && rev[1] == 0 && rev[2] == 0;
        const auto fwd = selfdual_residual_triple(om, +1);
        double fwd_max = 0.0;
        for (const auto& r : fwd) {
            fwd_max = std::max(fwd_max, std::abs(to_double(r)));
        }
        forward_min = done == 1 ? fwd_max : std::min(forward_min, fwd_max);
    }
    json j;
    j["audit"] = "selfdual";
    j["seed"] = cfg.seed;
    j["n"] = done;
    j["arithmetic"] = "exact-rational";
    j["orientation"] = "-";
    j["reversed_exactly_zero"] = exact_zero;
    j["forward_min_residual"] = rounded(forward_min, cfg.precision);
    j["pass"] = exact_zero;
    j["notes"] = json::array(
        {"the Darboux-Halphen field implies the self-duality equations under "
         "rho-reversal; '-' is the measured orientation convention, with cross "
         "products bc = Omega1, ca = Omega2, ab = Omega3 from the reparametrization"});
    return j;
}

} // namespace

int cmd_audit(const Config& cfg, const AuditOptions& opt)
{
    json report;
    if (opt.target == "disguise-r") {
        report = disguise_report(cfg, opt, Family::R);
    } else if (opt.target == "disguise-h") {
        report = disguise_report(cfg, opt, Family::H);
    } else if (opt.target == "morphism") {
        report = morphism_report(cfg, opt);
    } else if (opt.target == "group") {
        report = group_report(cfg, opt);
    } else if (opt.target == "ramanujan-exact") {
        report = ramanujan_exact_report(cfg);
    } else if (opt.target == "halphen-theta") {
        report = halphen_theta_report(cfg);
    } else if (opt.target == "selfdual") {
        report = selfdual_report(cfg, opt);
    } else {
        std::fprintf(stderr,
                     "audit: unknown target '%s' (expected disguise-r, disguise-h, "
                     "morphism, group, ramanujan-exact, halphen-theta, selfdual)\n",
                     opt.target.c_str());
        return exit_usage;
    }
    std::printf("%s\n", report.dump(2).c_str());
    return report["pass"].get<bool>() ? exit_ok : exit_failed;
}

} // namespace specmod::cli
