#ifndef SPECMOD_MODFORMS_HPP
#define SPECMOD_MODFORMS_HPP

#include "specmod/errors.hpp"
#include "specmod/frac_series.hpp"

#include <array>
#include <complex>

namespace specmod {

using Complex = std::complex<double>;

/// Point of the upper half-plane. q = e^{2 pi i tau} throughout.
///
/// Purely imaginary tau (real part exactly zero) is tracked explicitly:
/// evaluation then runs in real arithmetic, so real-valuedness of the
/// modular quantities on the imaginary axis holds to the last bit.
struct Tau {
    Complex value;
    bool purely_imaginary;

    explicit Tau(Complex v);

    /// tau = i*rho, rho > 0.
    static Tau imaginary(double rho) { return Tau(Complex(0.0, rho)); }

    /// rho = -i*tau for purely imaginary tau.
    double rho() const;
};

struct SeriesValue {
    Complex value;
    double tail_bound; // geometric estimate of the dropped tail
};

/// Evaluates a truncated series at tau. Throws NumericError when the tail
/// bound exceeds `tol` ("insufficient truncation order").
SeriesValue eval_series(const FracSeries& s, const Tau& tau, double tol);

inline Complex eval(const FracSeries& s, const Tau& tau, double tol)
{
    return eval_series(s, tau, tol).value;
}

/// Normalized Eisenstein series E_{2i}, i in {1,2,3}:
///   E_{2i}(q) = 1 + b_i sum_{n>=1} sigma_{2i-1}(n) q^n,
///   (b_1,b_2,b_3) = (-24, 240, -504).
FracSeries eisenstein_q(int i, const Rational& order);

/// Theta constants, which in {2,3,4}:
///   theta2 = sum q^{(n+1/2)^2/2}, theta3 = sum q^{n^2/2},
///   theta4 = sum (-1)^n q^{n^2/2}  (sums over all integers n).
FracSeries theta_q(int which, const Rational& order);

/// (E4^3 - E6^2)/1728 = q - 24 q^2 + 252 q^3 - ... ; the discriminant up to
/// the (2 pi)^12 scale. Evaluating this series directly gives 1 - I without
/// catastrophic cancellation near the cusp.
FracSeries delta_series(const Rational& order);

struct WeierstrassInvariants {
    Complex g2;
    Complex g3;

    Complex discriminant() const { return g2 * g2 * g2 - 27.0 * g3 * g3; }
    bool nonsingular(double eps = 0.0) const { return std::abs(discriminant()) > eps; }
};

/// g2(tau) = 120 zeta(4) E4 = (4 pi^4/3) E4,
/// g3(tau) = 280 zeta(6) E6 = (8 pi^6/27) E6.
WeierstrassInvariants g_invariants_tau(const Tau& tau, const Rational& order, double tol);

struct KleinPair {
    Complex j;
    Complex I;           // 27 g3^2 / g2^3
    Complex one_minus_I; // Delta_W / g2^3, evaluated cancellation-free
};

/// Klein j and the companion invariant I at tau. Throws std::domain_error
/// if the curve is degenerate (Delta_W = 0 to working precision).
KleinPair j_and_I(const Tau& tau, const Rational& order, double tol);

/// Residuals of the weight-2 (quasi-modular, with anomaly), weight-4 and
/// weight-6 transformation laws for an SL(2,Z) matrix {{a,b},{c,d}}:
///   E2((a tau+b)/(c tau+d)) = (c tau+d)^2 E2(tau) + (12/(2 pi i)) c (c tau+d)
///   E_k((a tau+b)/(c tau+d)) = (c tau+d)^k E_k(tau),  k = 4, 6.
struct ModularLawResiduals {
    double e2;
    double e4;
    double e6;
    Complex image_tau;
};

ModularLawResiduals quasi_modularity_check(const Tau& tau, const std::array<int, 4>& abcd,
                                           const Rational& order, double tol);

} // namespace specmod

#endif
