#include "specmod/modforms.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace specmod {

namespace {

constexpr double kPi = std::numbers::pi;

Rational sigma_power(std::int64_t n, int k)
{
    // Divisor power sum via paired divisors.
    BigInt acc = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        acc += boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(k));
        const std::int64_t e = n / d;
        if (e != d) {
            acc += boost::multiprecision::pow(BigInt(e), static_cast<unsigned>(k));
        }
    }
    return Rational(acc);
}

} // namespace

Tau::Tau(Complex v) : value(v), purely_imaginary(v.real() == 0.0)
{
    if (!(v.imag() > 0.0)) {
        throw std::domain_error("Tau: imaginary part must be strictly positive");
    }
}

double Tau::rho() const
{
    if (!purely_imaginary) {
        throw std::domain_error("Tau: rho() requires a purely imaginary point");
    }
    return value.imag();
}

SeriesValue eval_series(const FracSeries& s, const Tau& tau, double tol)
{
    // |q|^{1/8}; |q| = e^{-2 pi Im tau} < 1 on the upper half-plane.
    const double abs_q = std::exp(-2.0 * kPi * tau.value.imag());

    Complex sum = 0.0;
    if (tau.purely_imaginary) {
        // Real path: every power of q is exactly real.
        double acc = 0.0;
        const double log_q = -2.0 * kPi * tau.rho();
        for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
            acc += to_double(it->second) * std::exp(log_q * static_cast<double>(it->first) / 8.0);
        }
        sum = acc;
    } else {
        const Complex two_pi_i_tau = Complex(0.0, 2.0 * kPi) * tau.value;
        for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
            sum += to_double(it->second) * std::exp(two_pi_i_tau * (static_cast<double>(it->first) / 8.0));
        }
    }
    // Tail estimate: geometric continuation of the last kept term. The
    // per-lattice-step rate is read off the last two terms, which absorbs
    // polynomial coefficient growth (divisor sums, partition-type counts);
    // for flat coefficients it reduces to the bare |q|^{1/8} rate. An 8x
    // margin covers coefficient fluctuation between neighbouring orders.
    double tail = 0.0;
    if (!s.is_zero()) {
        static constexpr double kSafety = 8.0;
        const auto term_mag = [&](const auto& it) {
            return std::abs(to_double(it->second)) *
                   std::exp(std::log(abs_q) * static_cast<double>(it->first) / 8.0);
        };
        const auto last = s.terms().rbegin();
        const double t_last = term_mag(last);
        const std::int64_t e_last = last->first;
        double rate = std::pow(abs_q, 1.0 / 8.0);
        if (s.terms().size() >= 2 && t_last > 0.0) {
            const auto prev = std::next(last);
            const double t_prev = term_mag(prev);
            if (t_prev > 0.0) {
                rate = std::pow(t_last / t_prev, 1.0 / static_cast<double>(e_last - prev->first));
            }
        }
        if (rate >= 1.0) {
            tail = std::numeric_limits<double>::infinity();
        } else {
            const double gap = static_cast<double>(s.truncation_eighths() - e_last);
            tail = kSafety * t_last * std::pow(rate, gap) / (1.0 - rate);
        }
    }
    if (!(tail <= tol)) {
        throw NumericError("eval_series: insufficient truncation order for requested tolerance");
    }
    return {sum, tail};
}

FracSeries eisenstein_q(int i, const Rational& order)
{
    if (i < 1 || i > 3) {
        throw std::invalid_argument("eisenstein_q: index must be 1, 2 or 3");
    }
    if (order <= 0) {
        throw std::invalid_argument("eisenstein_q: order must be positive");
    }
    static constexpr int b[4] = {0, -24, 240, -504};

    FracSeries s(FracSeries::to_eighths(order));
    s.set_coeff(0, 1);
    for (std::int64_t n = 1; Rational(n) < order; ++n) {
        s.set_coeff(8 * n, b[i] * sigma_power(n, 2 * i - 1));
    }
    return s;
}

FracSeries theta_q(int which, const Rational& order)
{
    if (which < 2 || which > 4) {
        throw std::invalid_argument("theta_q: index must be 2, 3 or 4");
    }
    if (order <= 0) {
        throw std::invalid_argument("theta_q: order must be positive");
    }
    FracSeries s(FracSeries::to_eighths(order));
    if (which == 2) {
        // Exponent (2n+1)^2/8; n and -n-1 pair up.
        for (std::int64_t n = 0;; ++n) {
            const std::int64_t e = (2 * n + 1) * (2 * n + 1);
            if (e >= s.truncation_eighths()) {
                break;
            }
            s.set_coeff(e, 2);
        }
    } else {
        s.set_coeff(0, 1);
        for (std::int64_t n = 1;; ++n) {
            const std::int64_t e = 4 * n * n; // n^2/2 in eighths
            if (e >= s.truncation_eighths()) {
                break;
            }
            s.set_coeff(e, which == 4 && (n % 2 != 0) ? -2 : 2);
        }
    }
    return s;
}

FracSeries delta_series(const Rational& order)
{
    const FracSeries e4 = eisenstein_q(2, order);
    const FracSeries e6 = eisenstein_q(3, order);
    return (e4 * e4 * e4 - e6 * e6).scaled(Rational(1, 1728));
}

WeierstrassInvariants g_invariants_tau(const Tau& tau, const Rational& order, double tol)
{
    const double pi4 = kPi * kPi * kPi * kPi;
    const Complex e4 = eval(eisenstein_q(2, order), tau, tol);
    const Complex e6 = eval(eisenstein_q(3, order), tau, tol);
    return {4.0 * pi4 / 3.0 * e4, 8.0 * pi4 * kPi * kPi / 27.0 * e6};
}

KleinPair j_and_I(const Tau& tau, const Rational& order, double tol)
{
    const Complex e4 = eval(eisenstein_q(2, order), tau, tol);
    const Complex d = eval(delta_series(order), tau, tol);
    const Complex e4_cubed = e4 * e4 * e4;
    if (std::abs(d) == 0.0) {
        throw std::domain_error("j_and_I: degenerate curve (Delta_W = 0), tau at a cusp");
    }
    // 1 - I = Delta_W/g2^3 = (E4^3 - E6^2)/E4^3 = 1728 d / E4^3.
    const Complex one_minus_I = 1728.0 * d / e4_cubed;
    return {e4_cubed / d, 1.0 - one_minus_I, one_minus_I};
}

ModularLawResiduals quasi_modularity_check(const Tau& tau, const std::array<int, 4>& abcd,
                                           const Rational& order, double tol)
{
    const auto [a, b, c, d] = abcd;
    if (a * d - b * c != 1) {
        throw std::invalid_argument("quasi_modularity_check: matrix must have determinant 1");
    }
    const Complex cd = static_cast<double>(c) * tau.value + static_cast<double>(d);
    if (std::abs(cd) == 0.0) {
        throw std::domain_error("quasi_modularity_check: c tau + d = 0");
    }
    const Complex image = (static_cast<double>(a) * tau.value + static_cast<double>(b)) / cd;

    if (c == 0) {
        // tau -> tau +- b fixes q (integer exponents), so all three laws hold
        // coefficient-by-coefficient; the residuals are exactly zero.
        return {0.0, 0.0, 0.0, image};
    }

    const Tau tau_image{image};
    const FracSeries e2 = eisenstein_q(1, order);
    const FracSeries e4 = eisenstein_q(2, order);
    const FracSeries e6 = eisenstein_q(3, order);

    const Complex anomaly = 12.0 / Complex(0.0, 2.0 * kPi) * static_cast<double>(c) * cd;
    const double r2 = std::abs(eval(e2, tau_image, tol) - cd * cd * eval(e2, tau, tol) - anomaly);
    const double r4 = std::abs(eval(e4, tau_image, tol) - std::pow(cd, 4) * eval(e4, tau, tol));
    const double r6 = std::abs(eval(e6, tau_image, tol) - std::pow(cd, 6) * eval(e6, tau, tol));
    return {r2, r4, r6, image};
}

} // namespace specmod
