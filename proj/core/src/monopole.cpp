#include "specmod/monopole.hpp"

#include "specmod/errors.hpp"
#include "specmod/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace specmod {

namespace {

constexpr double kPi = std::numbers::pi;

// Bisection brackets and caps for the two monotone inversions.
constexpr double kRhoMin = 1.0;
constexpr double kRhoMax = 60.0;
constexpr double kRatioMax = 1e6;
constexpr int kMaxIter = 200;
constexpr double kBisectTol = 1e-12;

double one_minus_I_tau(const FracSeries& e4_series, const FracSeries& d_series,
                       const Tau& tau, double tol)
{
    const Complex e4 = eval(e4_series, tau, tol);
    const Complex d = eval(d_series, tau, tol);
    return (1728.0 * d / (e4 * e4 * e4)).real();
}

} // namespace

Dimensions dimensions(int k)
{
    if (k < 1) {
        throw std::invalid_argument("dimensions: charge must be >= 1");
    }
    return {4 * k - 1, 4 * k - 4, (k - 1) * (k - 1)};
}

SpectralCurveK curve_from_r(const SpectralCurve2& c)
{
    // eta^2 - r1 z^3 + r2 z^2 + r1 z = 0: a1 = 0, a2 = -r1 z^3 + r2 z^2 + r1 z.
    SpectralCurveK out;
    out.k = 2;
    out.a = {{0.0, 0.0, 0.0}, {0.0, c.r1, c.r2, -c.r1, 0.0}};
    return out;
}

RealStructureCheck real_structure_check(const SpectralCurveK& curve, double tol)
{
    RealStructureCheck out{true, 0.0, {}};
    for (int i = 1; i <= curve.k; ++i) {
        const auto& ai = curve.a[static_cast<std::size_t>(i) - 1];
        for (int m = 0; m <= 2 * i; ++m) {
            const Complex lhs = m < static_cast<int>(ai.size()) ? ai[m] : Complex(0.0);
            const Complex mirror =
                (2 * i - m) < static_cast<int>(ai.size()) ? ai[2 * i - m] : Complex(0.0);
            const double sign = (i + m) % 2 == 0 ? 1.0 : -1.0;
            out.residuals.push_back(std::abs(lhs - sign * std::conj(mirror)));
        }
    }
    for (double r : out.residuals) {
        out.worst = std::max(out.worst, r);
    }
    out.ok = out.worst <= tol;
    return out;
}

std::pair<Complex, Complex> degenerate_curve(double r2)
{
    if (r2 < 0.0) {
        throw std::domain_error("degenerate_curve: r2 must be >= 0");
    }
    const double s = std::sqrt(r2);
    return {Complex(0.0, s), Complex(0.0, -s)};
}

WeierstrassInvariants weierstrass_from_r(const SpectralCurve2& c)
{
    if (c.r1 <= 0.0) {
        throw std::domain_error("weierstrass_from_r: degenerate curve (r1 = 0) splits "
                                "into two charge-1 curves");
    }
    const auto [g2, g3] = weierstrass_from_ratio(c.r2 / (3.0 * c.r1));
    return {g2, g3};
}

double I_from_r(const SpectralCurve2& c)
{
    if (c.r1 < 0.0) {
        throw std::domain_error("I_from_r: r1 must be >= 0");
    }
    if (c.r1 == 0.0) {
        return 1.0; // Delta_W = 0 limit
    }
    if (c.r2 == 0.0) {
        return 0.0; // r -> infinity limit
    }
    return 1.0 - one_minus_I_from_ratio(c.r1 / c.r2);
}

Tau tau_from_r(const SpectralCurve2& c, const Rational& order, double tol)
{
    if (!(c.r1 > 0.0) || c.r2 == 0.0) {
        throw std::domain_error("tau_from_r: requires r1 > 0 and r2 != 0");
    }
    const double target = one_minus_I_from_ratio(std::abs(c.r1 / c.r2));
    if (!(target > 0.0) || !(target < 1.0)) {
        throw NumericError("tau_from_r: invariant outside (0, 1)");
    }

    const FracSeries e4 = eisenstein_q(2, order);
    const FracSeries d = delta_series(order);
    // 1 - I(i rho) decreases from 1 - I(i) = 1 towards 0 along the axis.
    double lo = kRhoMin, hi = kRhoMax;
    if (one_minus_I_tau(e4, d, Tau::imaginary(hi), tol) > target) {
        throw NumericError("tau_from_r: target beyond the bisection bracket");
    }
    for (int it = 0; it < kMaxIter && (hi - lo) > kBisectTol; ++it) {
        const double mid = 0.5 * (lo + hi);
        (one_minus_I_tau(e4, d, Tau::imaginary(mid), tol) > target ? lo : hi) = mid;
    }
    const Tau tau = Tau::imaginary(0.5 * (lo + hi));

    // Round-trip postcondition on the invariant itself.
    if (std::abs(one_minus_I_tau(e4, d, tau, tol) - target) >
        tol * std::max(1.0, std::abs(target))) {
        throw NumericError("tau_from_r: bisection did not meet the tolerance");
    }
    return tau;
}

SpectralCurve2 r_params_from_tau(const Tau& tau, const Rational& order, double tol)
{
    if (!tau.purely_imaginary || tau.rho() < kRhoMin) {
        throw std::domain_error("r_params_from_tau: requires tau = i rho with rho >= 1");
    }
    const FracSeries e4_series = eisenstein_q(2, order);
    const FracSeries d_series = delta_series(order);
    const double target = one_minus_I_tau(e4_series, d_series, tau, tol);
    if (target < 0.0) {
        throw NumericError("r_params_from_tau: negative invariant");
    }

    // one_minus_I_from_ratio increases monotonically from 0 (r = 0) to 1.
    double lo = 0.0, hi = kRatioMax;
    for (int it = 0; it < kMaxIter && (hi - lo) > kBisectTol * std::max(1.0, lo); ++it) {
        const double mid = 0.5 * (lo + hi);
        (one_minus_I_from_ratio(mid) < target ? lo : hi) = mid;
    }
    const double r = 0.5 * (lo + hi);

    // g2(tau) = (64/3) r2^2 (1 + 3 r^2) fixes the absolute scale.
    const double g2_tau = 4.0 * kPi * kPi * kPi * kPi / 3.0 *
                          eval(e4_series, tau, tol).real();
    const double radicand = 3.0 * g2_tau / (64.0 * (1.0 + 3.0 * r * r));
    if (!(radicand > 0.0)) {
        throw NumericError("r_params_from_tau: negative radicand");
    }
    const double r2 = std::sqrt(radicand);
    return {r * r2, r2};
}

bool OmegaPoint::pairwise_distinct(double eps) const
{
    return std::min({std::abs(omega[0] - omega[1]), std::abs(omega[0] - omega[2]),
                     std::abs(omega[1] - omega[2])}) > eps;
}

OmegaPoint omega_from_theta(double rho, const Rational& order, double tol)
{
    if (!(rho > 0.0)) {
        throw std::domain_error("omega_from_theta: rho must be positive");
    }
    // Omega_i = kappa d/drho log theta_{i+1}(i rho); d/drho = -2 pi q d/dq
    // on the real section.
    const Tau tau = Tau::imaginary(rho);
    OmegaPoint out{{}, rho};
    for (int i = 0; i < 3; ++i) {
        const FracSeries logd = theta_q(i + 2, order).log_q_derivative();
        out.omega[i] = halphen_theta_kappa * -2.0 * kPi * eval(logd, tau, tol).real();
    }
    return out;
}

double omega_theta_residual(double rho_min, double rho_max, int n_samples,
                            const Rational& order, double tol)
{
    std::array<FracSeries, 3> logd{theta_q(2, order).log_q_derivative(),
                                   theta_q(3, order).log_q_derivative(),
                                   theta_q(4, order).log_q_derivative()};
    double worst = 0.0;
    for (int s = 0; s < n_samples; ++s) {
        const double rho = rho_min + (rho_max - rho_min) * s / std::max(1, n_samples - 1);
        const Tau tau = Tau::imaginary(rho);
        std::array<double, 3> om, omdot;
        for (int i = 0; i < 3; ++i) {
            const double scale = halphen_theta_kappa * -2.0 * kPi;
            om[i] = scale * eval(logd[i], tau, tol).real();
            omdot[i] = -2.0 * kPi * scale * eval(logd[i].q_derivative(), tau, tol).real();
        }
        const auto field = halphen_field<double>(om);
        for (int i = 0; i < 3; ++i) {
            worst = std::max(worst, std::abs(omdot[i] - field[i]));
        }
    }
    return worst;
}

BianchiFrame metric_from_omega(const OmegaPoint& p)
{
    if (p.omega[0] == 0.0 || p.omega[1] == 0.0 || p.omega[2] == 0.0) {
        throw std::domain_error("metric_from_omega: some Omega_i vanishes");
    }
    const auto sq = metric_squares(p.omega);
    BianchiFrame f{};
    f.rho = p.rho;
    f.a2 = sq[0];
    f.b2 = sq[1];
    f.c2 = sq[2];
    f.abc2 = p.omega[0] * p.omega[1] * p.omega[2];
    f.positive_signature = sq[0] > 0.0 && sq[1] > 0.0 && sq[2] > 0.0;
    if (f.positive_signature) {
        const auto res = selfdual_residual_triple(p.omega, -1);
        f.selfdual_res = {res[0], res[1], res[2]};
    } else {
        f.selfdual_res = {0.0, 0.0, 0.0};
    }
    return f;
}

std::array<double, 3> selfdual_residual(const OmegaPoint& p, int orientation)
{
    if (orientation != 1 && orientation != -1) {
        throw std::invalid_argument("selfdual_residual: orientation must be +1 or -1");
    }
    if (p.omega[0] == 0.0 || p.omega[1] == 0.0 || p.omega[2] == 0.0) {
        throw std::domain_error("selfdual_residual: some Omega_i vanishes");
    }
    const auto sq = metric_squares(p.omega);
    if (!(sq[0] > 0.0 && sq[1] > 0.0 && sq[2] > 0.0)) {
        throw NumericError("selfdual_residual: signature obstruction "
                           "(negative squared coefficient)");
    }
    return selfdual_residual_triple(p.omega, orientation);
}

AsymptoticReport asymptotic_report(double rho, const Rational& order, double tol)
{
    if (!(rho >= 1.0)) {
        throw std::domain_error("asymptotic_report: rho must be >= 1");
    }
    AsymptoticReport rep{};
    rep.rho = rho;
    rep.q = std::exp(-2.0 * kPi * rho);
    rep.omega = omega_from_theta(rho, order, tol);
    rep.frame = metric_from_omega(rep.omega);
    rep.b2_over_c2 = rep.frame.b2 / rep.frame.c2;
    rep.enhancement_gauge = std::abs(rep.b2_over_c2 - 1.0);
    const double q4 = std::pow(rep.q, 0.25);
    rep.ref_abc2 = 4.0 * q4;
    rep.ref_a2 = std::pow(rep.q, 0.75);
    rep.ref_b2c2 = 0.25 / q4;
    return rep;
}

} // namespace specmod
