#include "specmod/errors.hpp"
#include "specmod/monopole.hpp"
#include "specmod/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace specmod;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("charge bookkeeping")
{
    const Dimensions d2 = dimensions(2);
    CHECK(d2.moduli_dim == 7);
    CHECK(d2.reduced_dim == 4);
    CHECK(d2.genus == 1);

    const Dimensions d1 = dimensions(1);
    CHECK(d1.moduli_dim == 3);
    CHECK(d1.reduced_dim == 0);
    CHECK(d1.genus == 0);

    const Dimensions d3 = dimensions(3);
    CHECK(d3.moduli_dim == 11);
    CHECK(d3.reduced_dim == 8);
    CHECK(d3.genus == 4);

    CHECK_THROWS_AS(dimensions(0), std::invalid_argument);
}

TEST_CASE("real structure of spectral curves")
{
    SUBCASE("the real two-parameter family is involution-invariant")
    {
        const RealStructureCheck rc = real_structure_check(curve_from_r({1.5, -0.7}), 1e-12);
        CHECK(rc.ok);
        CHECK(rc.worst == 0.0);
    }
    SUBCASE("a generic complex a1 breaks the invariance")
    {
        SpectralCurveK c = curve_from_r({1.0, 2.0});
        c.a[0] = {Complex(0.3, 0.4), 0.0, 0.0};
        CHECK_FALSE(real_structure_check(c, 1e-12).ok);
    }
    SUBCASE("the split pair is invariant as a set")
    {
        // eta = +- i sqrt(r2) zeta multiply to eta^2 + r2 zeta^2; the
        // involution swaps the two lines, so the product curve passes.
        const RealStructureCheck rc = real_structure_check(curve_from_r({0.0, kPi * kPi / 4.0}),
                                                           1e-12);
        CHECK(rc.ok);
    }
    SUBCASE("a single line passes iff its slope is real")
    {
        // eta = c zeta <-> p = eta + a1, a1 = -c zeta.
        SpectralCurveK real_slope{1, {{0.0, -2.0, 0.0}}};
        CHECK(real_structure_check(real_slope, 1e-12).ok);
        SpectralCurveK imag_slope{1, {{0.0, Complex(0.0, -kPi / 2.0), 0.0}}};
        CHECK_FALSE(real_structure_check(imag_slope, 1e-12).ok);
    }
}

TEST_CASE("degenerate curve split")
{
    const auto [p, m] = degenerate_curve(kPi * kPi / 4.0);
    CHECK(p == Complex(0.0, kPi / 2.0));
    CHECK(m == Complex(0.0, -kPi / 2.0));

    const auto [p1, m1] = degenerate_curve(1.0);
    CHECK(p1 == Complex(0.0, 1.0));
    CHECK(m1 == Complex(0.0, -1.0));

    const auto [p0, m0] = degenerate_curve(0.0);
    CHECK(p0 == Complex(0.0));
    CHECK(m0 == Complex(0.0));

    CHECK_THROWS_AS(degenerate_curve(-1.0), std::domain_error);
}

TEST_CASE("lattice-normalized Weierstrass invariants")
{
    SUBCASE("(r1, r2) = (3, 9)")
    {
        const auto w = weierstrass_from_r({3.0, 9.0});
        CHECK(w.g2.real() == Approx(16.0).epsilon(1e-15));
        CHECK(w.g3.real() == Approx(12.0).epsilon(1e-15));
        CHECK(w.discriminant().real() == Approx(208.0).epsilon(1e-12));
    }
    SUBCASE("odd part drops at r2 = 0")
    {
        const auto w = weierstrass_from_r({2.0, 0.0});
        CHECK(w.g2.real() == 4.0);
        CHECK(w.g3.real() == 0.0);
    }
    SUBCASE("only the ratio r2/r1 matters")
    {
        const auto a = weierstrass_from_r({3.0, 9.0});
        const auto b = weierstrass_from_r({1.0, 3.0});
        CHECK(a.g2 == b.g2);
        CHECK(a.g3 == b.g3);
    }
    SUBCASE("the degenerate curve is rejected")
    {
        CHECK_THROWS_AS(weierstrass_from_r({0.0, 2.0}), std::domain_error);
    }
}

TEST_CASE("modular invariant of the curve parameters")
{
    SUBCASE("r = 1/3 gives I = 243/256 exactly")
    {
        CHECK(one_minus_I_from_ratio<Rational>(Rational(1, 3)) == Rational(13, 256));
        CHECK(I_from_r({3.0, 9.0}) == Approx(243.0 / 256.0).epsilon(1e-15));
    }
    SUBCASE("limits")
    {
        CHECK(I_from_r({0.0, 2.4674}) == 1.0);
        CHECK(I_from_r({1.0, 0.0}) == 0.0);
        CHECK(I_from_r({1e9, 1.0}) == Approx(0.0).epsilon(1e-8));
    }
    SUBCASE("identity with 27 g3^2/g2^3, exact over the rationals")
    {
        UniformRng rng(4711);
        for (int trial = 0; trial < 100; ++trial) {
            const Rational r(1 + static_cast<long>(rng.index(400)),
                             1 + static_cast<long>(rng.index(40)));
            const Rational s = Rational(1) / (Rational(3) * r); // r2/(3 r1)
            const auto [g2, g3] = weierstrass_from_ratio<Rational>(s);
            const Rational delta = g2 * g2 * g2 - Rational(27) * g3 * g3;
            CHECK(one_minus_I_from_ratio(r) * g2 * g2 * g2 == delta);
        }
    }
    SUBCASE("scaling covariance: (g2, g3) -> (m^-4 g2, m^-6 g3) fixes I and j")
    {
        UniformRng rng(4712);
        for (int trial = 0; trial < 50; ++trial) {
            const Rational s(1 + static_cast<long>(rng.index(50)),
                             1 + static_cast<long>(rng.index(9)));
            const Rational m(1 + static_cast<long>(rng.index(9)),
                             1 + static_cast<long>(rng.index(9)));
            const auto [g2, g3] = weierstrass_from_ratio<Rational>(s);
            const Rational m4 = rational_pow(m, 4), m6 = rational_pow(m, 6);
            const Rational g2s = g2 / m4, g3s = g3 / m6;
            const Rational I = Rational(27) * g3 * g3 / (g2 * g2 * g2);
            const Rational Is = Rational(27) * g3s * g3s / (g2s * g2s * g2s);
            CHECK(I == Is);
            const Rational delta = g2 * g2 * g2 - Rational(27) * g3 * g3;
            const Rational deltas = g2s * g2s * g2s - Rational(27) * g3s * g3s;
            if (delta != 0) {
                CHECK(g2 * g2 * g2 * deltas == g2s * g2s * g2s * delta); // j equal
            }
        }
    }
}

TEST_CASE("tau from curve parameters and back")
{
    const double tol = 1e-9;
    SUBCASE("(3, 9) round trip on the invariant")
    {
        const Tau tau = tau_from_r({3.0, 9.0}, 30, tol);
        CHECK(tau.purely_imaginary);
        const double one_minus = 13.0 / 256.0;
        const SpectralCurve2 back = r_params_from_tau(tau, 30, tol);
        CHECK(one_minus_I_from_ratio(back.r1 / back.r2) == Approx(one_minus).epsilon(1e-9));
    }
    SUBCASE("r2 -> 0+ sends tau to i")
    {
        const Tau tau = tau_from_r({3.0, 1e-6}, 30, tol);
        CHECK(tau.rho() < 1.0 + 1e-3);
    }
    SUBCASE("r1 -> 0+ sends rho to infinity")
    {
        const Tau tau = tau_from_r({1e-4, 2.4}, 30, tol);
        CHECK(tau.rho() > 3.0);
    }
    SUBCASE("rho round trips within 1e-8 on [1.2, 6]")
    {
        for (double rho : {1.2, 2.0, 3.1, 4.5, 6.0}) {
            const SpectralCurve2 c = r_params_from_tau(Tau::imaginary(rho), 30, tol);
            const Tau back = tau_from_r(c, 30, tol);
            CHECK(std::abs(back.rho() - rho) < 1e-8);
        }
    }
    SUBCASE("ratio r1/r2 round trips from the curve side")
    {
        const SpectralCurve2 c{1.0, 2.0};
        const Tau tau = tau_from_r(c, 30, tol);
        const SpectralCurve2 back = r_params_from_tau(tau, 30, tol);
        CHECK(back.r1 / back.r2 == Approx(0.5).epsilon(1e-8));
    }
    SUBCASE("degeneration limit at tau = 5i")
    {
        const SpectralCurve2 c = r_params_from_tau(Tau::imaginary(5.0), 30, tol);
        CHECK(std::abs(c.r2 - kPi * kPi / 4.0) < 1e-3);
        const double q = std::exp(-10.0 * kPi);
        CHECK(c.r1 / (kPi * kPi * std::pow(q, 0.25)) == Approx(1.0).epsilon(0.05));
    }
    SUBCASE("domain guards")
    {
        CHECK_THROWS_AS(tau_from_r({0.0, 1.0}, 30, tol), std::domain_error);
        CHECK_THROWS_AS(r_params_from_tau(Tau::imaginary(0.5), 30, tol), std::domain_error);
        CHECK_THROWS_AS(r_params_from_tau(Tau(Complex(0.3, 2.0)), 30, tol), std::domain_error);
    }
}

TEST_CASE("theta solution on the real section")
{
    const double tol = 1e-12;
    SUBCASE("Darboux-Halphen residual below 1e-8 near rho = 1.5")
    {
        CHECK(omega_theta_residual(1.5, 1.5, 1, 30, tol) < 1e-8);
    }
    SUBCASE("sign pattern keeps the metric signature positive")
    {
        for (double rho : {0.9, 1.5, 3.0}) {
            const OmegaPoint p = omega_from_theta(rho, 30, tol);
            int negatives = 0;
            for (double w : p.omega) {
                negatives += w < 0.0 ? 1 : 0;
            }
            CHECK(negatives == 2); // exactly one component of opposite sign
            CHECK(metric_from_omega(p).positive_signature);
        }
    }
    SUBCASE("large-rho behavior of the components")
    {
        const OmegaPoint p = omega_from_theta(4.0, 30, tol);
        CHECK(std::abs(p.omega[0] + kPi / 2.0) < 1e-4);
        CHECK(p.omega[1] / p.omega[2] == Approx(-1.0).epsilon(1e-4));
        CHECK(p.pairwise_distinct(1e-8));
    }
    SUBCASE("rho must be positive")
    {
        CHECK_THROWS_AS(omega_from_theta(0.0, 30, tol), std::domain_error);
    }
}

TEST_CASE("metric reconstruction")
{
    SUBCASE("Omega = (1, 2, 4)")
    {
        const BianchiFrame f = metric_from_omega({{1.0, 2.0, 4.0}, 1.0});
        CHECK(f.a2 == 8.0);
        CHECK(f.b2 == 2.0);
        CHECK(f.c2 == 0.5);
        CHECK(f.abc2 == 8.0);
        CHECK(f.a2 * f.b2 * f.c2 == f.abc2); // product identity, exact
        CHECK(f.positive_signature);
    }
    SUBCASE("symmetric pattern (-t, -t, t) gives equal positive coefficients")
    {
        for (double t : {1.0, 2.5}) {
            const BianchiFrame f = metric_from_omega({{-t, -t, t}, 1.0});
            CHECK(f.a2 == t);
            CHECK(f.b2 == t);
            CHECK(f.c2 == t);
            CHECK(f.positive_signature);
        }
    }
    SUBCASE("negative squares are returned as-is with the signature flag")
    {
        const BianchiFrame f = metric_from_omega({{1.0, 1.0, -1.0}, 1.0});
        CHECK_FALSE(f.positive_signature);
        CHECK(f.a2 == -1.0);
        CHECK(f.b2 == -1.0);
        CHECK(f.c2 == -1.0);
    }
    SUBCASE("vanishing Omega_i is rejected")
    {
        CHECK_THROWS_AS(metric_from_omega({{0.0, 1.0, 2.0}, 1.0}), std::domain_error);
    }
}

TEST_CASE("self-duality residuals")
{
    SUBCASE("Omega = (1, 2, 4): zero under reversed orientation")
    {
        const OmegaPoint p{{1.0, 2.0, 4.0}, 1.0};
        const auto res = selfdual_residual(p, -1);
        CHECK(res[0] == 0.0);
        CHECK(res[1] == 0.0);
        CHECK(res[2] == 0.0);
    }
    SUBCASE("Omega = (1, 2, 4): the forward orientation leaves (15, -5, -3)")
    {
        // Independent recomputation: Omega_dot = (-2, 6, 10) from the field;
        // d(a^2)/drho = (6*4 + 2*10)/1 - 8*(-2)/1           = 60
        // d(b^2)/drho = (10*1 + 4*(-2))/2 - 4*1*6/4         = -5
        // d(c^2)/drho = ((-2)*2 + 1*6)/4 - 1*2*10/16        = -0.75
        // lhs = (60/8, -5/2, -0.75/0.5) = (7.5, -2.5, -1.5)
        // rhs = (2 + 0.5 - 8 - 2, 0.5 + 8 - 2 - 4, 8 + 2 - 0.5 - 8) = (-7.5, 2.5, 1.5)
        const OmegaPoint p{{1.0, 2.0, 4.0}, 1.0};
        const auto res = selfdual_residual(p, +1);
        CHECK(res[0] == 15.0);
        CHECK(res[1] == -5.0);
        CHECK(res[2] == -3.0);
    }
    SUBCASE("exact equivalence over the rationals for admissible triples")
    {
        UniformRng rng(555);
        int done = 0;
        while (done < 100) {
            auto draw = [&rng] {
                return Rational(1 + static_cast<long>(rng.index(200)),
                                1 + static_cast<long>(rng.index(20)));
            };
            std::array<Rational, 3> om{draw(), draw(), draw()};
            if (done % 2 == 1) {
                // two-negative patterns are admissible as well
                const auto i = rng.index(3);
                om[i] *= -1;
                om[(i + 1 + rng.index(2)) % 3] *= -1;
            }
            const auto sq = metric_squares(om);
            if (!(sq[0] > 0 && sq[1] > 0 && sq[2] > 0)) {
                continue;
            }
            ++done;
            const auto res = selfdual_residual_triple(om, -1);
            CHECK(res[0] == 0);
            CHECK(res[1] == 0);
            CHECK(res[2] == 0);
        }
    }
    SUBCASE("symmetric reduction: 2 a'/a = -a^2 under reversal")
    {
        const double t = 0.7;
        const OmegaPoint p{{t, t, t}, 1.0};
        const auto res = selfdual_residual(p, -1);
        CHECK(std::abs(res[0]) < 1e-15);
        CHECK(std::abs(res[1]) < 1e-15);
        CHECK(std::abs(res[2]) < 1e-15);
        // a^2 = t here, and the reversed log-derivative equals -a^2.
        const BianchiFrame f = metric_from_omega(p);
        CHECK(f.a2 == Approx(t));
        const auto fwd = selfdual_residual(p, +1);
        CHECK(fwd[0] == Approx(2.0 * t)); // lhs(+) - rhs = t - (-t)
    }
    SUBCASE("signature obstruction is reported")
    {
        CHECK_THROWS_AS(selfdual_residual({{1.0, 1.0, -1.0}, 1.0}, -1), NumericError);
    }
}

TEST_CASE("degeneration chain along growing rho")
{
    const double tol = 1e-9;
    double prev_r1 = 1e300;
    double prev_I = -1.0;
    for (double rho : {1.5, 2.5, 3.5, 4.5}) {
        const SpectralCurve2 c = r_params_from_tau(Tau::imaginary(rho), 30, tol);
        CHECK(c.r1 < prev_r1); // r1 decays toward the split curve
        prev_r1 = c.r1;
        const double I = I_from_r(c);
        CHECK(I > prev_I); // I climbs toward 1
        prev_I = I;
        CHECK(metric_from_omega(omega_from_theta(rho, 30, 1e-12)).positive_signature);
    }
    CHECK(std::abs(prev_I - 1.0) < 1e-6);
    const SpectralCurve2 far = r_params_from_tau(Tau::imaginary(4.5), 30, tol);
    CHECK(std::abs(far.r2 - kPi * kPi / 4.0) < 1e-4);
}

TEST_CASE("asymptotic diagnostics")
{
    const double tol = 1e-12;
    SUBCASE("isometry enhancement gauge")
    {
        CHECK(asymptotic_report(2.0, 30, tol).enhancement_gauge < 0.05);
        CHECK(asymptotic_report(4.0, 30, tol).enhancement_gauge < 1e-3);
    }
    SUBCASE("reporting path at rho = 1")
    {
        const AsymptoticReport rep = asymptotic_report(1.0, 30, tol);
        CHECK(rep.q == Approx(std::exp(-2.0 * kPi)));
        CHECK(rep.frame.positive_signature);
        CHECK(rep.ref_abc2 == Approx(4.0 * std::pow(rep.q, 0.25)));
        CHECK(rep.b2_over_c2 > 0.0);
    }
}
