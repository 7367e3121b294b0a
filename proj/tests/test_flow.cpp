#include "specmod/flow.hpp"
#include "specmod/moduli.hpp"
#include "specmod/monopole.hpp"

#include <doctest.h>

#include <cmath>

using namespace specmod;

namespace {

std::array<Complex, 3> ramanujan_state(double s, const Rational& order = 30, double tol = 1e-12)
{
    const TRPoint t = ramanujan_solution(Tau::imaginary(s), order, tol);
    return {t.t1, t.t2, t.t3};
}

std::array<Complex, 3> omega_state(double rho, const Rational& order = 30, double tol = 1e-12)
{
    const OmegaPoint p = omega_from_theta(rho, order, tol);
    return {p.omega[0], p.omega[1], p.omega[2]};
}

} // namespace

TEST_CASE("R-flow reproduces the closed-form solution")
{
    const auto start = ramanujan_state(2.0);
    const auto oracle = ramanujan_state(1.2);
    const FlowResult res = integrate(FieldKind::ramanujan, start, 2.0, 1.2, 1e-8, oracle);
    CHECK(res.status == FlowResult::Status::ok);
    REQUIRE(res.endpoint_error.has_value());
    CHECK(*res.endpoint_error < 1e-6);
    CHECK(res.steps_accepted > 0);

    // samples strictly monotone in the flow parameter
    for (std::size_t i = 1; i < res.samples.size(); ++i) {
        CHECK(res.samples[i].first < res.samples[i - 1].first);
    }
}

TEST_CASE("Omega-flow matches the theta solution")
{
    const FlowResult res =
        integrate(FieldKind::omega, omega_state(1.0), 1.0, 2.0, 1e-8, omega_state(2.0));
    CHECK(res.status == FlowResult::Status::ok);
    REQUIRE(res.endpoint_error.has_value());
    CHECK(*res.endpoint_error < 1e-6);
}

TEST_CASE("H-flow follows the theta trajectory")
{
    const double tol = 1e-12;
    const THPoint T0 = halphen_solution_theta(Tau::imaginary(2.0), 30, tol);
    const THPoint T1 = halphen_solution_theta(Tau::imaginary(1.3), 30, tol);
    const FlowResult res = integrate(FieldKind::halphen, {T0.T1, T0.T2, T0.T3}, 2.0, 1.3, 1e-8,
                                     std::array<Complex, 3>{T1.T1, T1.T2, T1.T3});
    CHECK(res.status == FlowResult::Status::ok);
    CHECK(*res.endpoint_error < 1e-6);
}

TEST_CASE("a fixed point yields a constant trajectory")
{
    const std::array<Complex, 3> fp{1.0, 12.0, 8.0};
    const FlowResult res = integrate(FieldKind::ramanujan, fp, 2.0, 1.2, 1e-10, fp);
    CHECK(res.status == FlowResult::Status::ok);
    CHECK(*res.endpoint_error == 0.0);
}

TEST_CASE("forward-backward consistency")
{
    const double tol = 1e-9;
    const auto start = ramanujan_state(2.0);
    const FlowResult fwd = integrate(FieldKind::ramanujan, start, 2.0, 1.4, tol);
    const FlowResult back =
        integrate(FieldKind::ramanujan, fwd.endpoint, 1.4, 2.0, tol, start);
    CHECK(back.status == FlowResult::Status::ok);
    CHECK(*back.endpoint_error < 10.0 * tol);
}

TEST_CASE("fixed-step convergence order of the stepper")
{
    const auto start = ramanujan_state(2.0);
    const auto oracle = ramanujan_state(1.4);
    const auto err_at = [&](int n) {
        const auto end = integrate_fixed(FieldKind::ramanujan, start, 2.0, 1.4, n);
        double e = 0.0;
        for (int i = 0; i < 3; ++i) {
            e = std::max(e, std::abs(end[i] - oracle[i]));
        }
        return e;
    };
    const double e1 = err_at(8);
    const double e2 = err_at(16);
    const double slope = std::log2(e1 / e2);
    CHECK(slope > 4.0); // nominal 5, within 20%
    CHECK(slope < 6.0);
}

TEST_CASE("adaptive tolerance scaling")
{
    const auto start = ramanujan_state(2.0);
    const auto oracle = ramanujan_state(1.2);
    double prev = 0.0;
    for (double tol : {1e-6, 1e-8, 1e-10}) {
        const FlowResult res = integrate(FieldKind::ramanujan, start, 2.0, 1.2, tol, oracle);
        const double err = *res.endpoint_error;
        if (prev > 0.0) {
            CHECK(err < prev); // tighter tolerance, smaller endpoint error
        }
        prev = err;
    }
}

TEST_CASE("Halphen blow-up is detected and reported")
{
    // A symmetric state (c, c, c) flows as c' = i c^2 along tau = i s, i.e.
    // c(s) = c0/(1 - i c0 (s - s0)): with c0 = -3i the pole sits at s = 4/3.
    const std::array<Complex, 3> start{Complex(0.0, -3.0), Complex(0.0, -3.0),
                                       Complex(0.0, -3.0)};
    const FlowResult res = integrate(FieldKind::halphen, start, 1.0, 2.0, 1e-8);
    const bool stopped = res.status == FlowResult::Status::blowup ||
                         res.status == FlowResult::Status::domain_exit;
    CHECK(stopped);
    CHECK_FALSE(res.samples.empty());
    CHECK(std::isfinite(res.samples.back().second[0].real()));
}

TEST_CASE("residual scans of the closed-form solutions")
{
    std::vector<double> grid;
    for (int i = 0; i <= 50; ++i) {
        grid.push_back(1.0 + i * (2.0 - 1.0) / 50);
    }
    SUBCASE("Ramanujan solution")
    {
        const ResidualScan scan = residual_scan(
            FieldKind::ramanujan, [](double s) { return ramanujan_state(s); }, grid, 1e-4);
        CHECK(scan.max_residual < 1e-7);
        CHECK(scan.h_used == 1e-4);
    }
    SUBCASE("Omega solution over [0.8, 3]")
    {
        std::vector<double> wide;
        for (int i = 0; i <= 40; ++i) {
            wide.push_back(0.8 + i * (3.0 - 0.8) / 40);
        }
        const ResidualScan scan = residual_scan(
            FieldKind::omega, [](double rho) { return omega_state(rho); }, wide, 1e-4);
        CHECK(scan.max_residual < 1e-7);
    }
    SUBCASE("constant oracle against the zero field has zero residual")
    {
        // the Ramanujan field vanishes at the fixed point, and the constant
        // trajectory has zero derivative
        const ResidualScan scan = residual_scan(
            FieldKind::ramanujan,
            [](double) {
                return std::array<Complex, 3>{1.0, 12.0, 8.0};
            },
            grid, 1e-4);
        CHECK(scan.max_residual == 0.0);
    }
    SUBCASE("plain centered differences decay as h^2")
    {
        const auto res_at = [&](double h) {
            return residual_scan(
                       FieldKind::ramanujan, [](double s) { return ramanujan_state(s); },
                       {1.3, 1.7}, h, false)
                .max_residual;
        };
        const double r1 = res_at(1e-2);
        const double r2 = res_at(5e-3);
        const double ratio = r1 / r2;
        CHECK(ratio > 3.0); // h^2 scaling: nominal 4
        CHECK(ratio < 5.0);
    }
}
