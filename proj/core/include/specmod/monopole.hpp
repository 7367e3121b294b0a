#ifndef SPECMOD_MONOPOLE_HPP
#define SPECMOD_MONOPOLE_HPP

#include "specmod/modforms.hpp"

#include <array>
#include <utility>
#include <vector>

namespace specmod {

/// Parameters of the charge-2 spectral curve
///   eta^2 = r1 zeta^3 - r2 zeta^2 - r1 zeta,   r1 >= 0.
/// The curve is degenerate (splits into two lines) iff r1 = 0.
struct SpectralCurve2 {
    double r1;
    double r2;

    bool degenerate() const { return r1 == 0.0; }
};

/// General charge-k spectral curve
///   eta^k + a_1(zeta) eta^{k-1} + ... + a_k(zeta) = 0,
/// a_i a polynomial of degree <= 2i; a[i-1][m] is the zeta^m coefficient.
struct SpectralCurveK {
    int k;
    std::vector<std::vector<Complex>> a;
};

/// Moduli bookkeeping for charge k: (4k-1, 4k-4, (k-1)^2).
struct Dimensions {
    int moduli_dim;
    int reduced_dim;
    int genus;
};

Dimensions dimensions(int k);

/// k = 2 curve as a SpectralCurveK (a1 = 0, a2 = -r1 z^3 + r2 z^2 + r1 z).
SpectralCurveK curve_from_r(const SpectralCurve2& c);

struct RealStructureCheck {
    bool ok;
    double worst;
    std::vector<double> residuals; // one per coefficient condition
};

/// Invariance of the curve under the antiholomorphic involution
/// (eta, zeta) -> (-conj(eta)/conj(zeta)^2, -1/conj(zeta)).
///
/// Substituting into p and clearing powers of conj(zeta) gives the
/// coefficient condition  a_{i,m} = (-1)^{i+m} conj(a_{i,2i-m}),
/// checked here for every i, m. Validated against the k = 2 family (real
/// r1, r2 pass) and the k = 1 split pair.
RealStructureCheck real_structure_check(const SpectralCurveK& curve, double tol);

/// r1 = 0 split: eta^2 = -r2 zeta^2 factors into eta = +- i sqrt(r2) zeta.
/// Returns the two slopes. Throws std::domain_error for r2 < 0.
std::pair<Complex, Complex> degenerate_curve(double r2);

/// Lattice-normalized Weierstrass invariants of the k = 2 curve, from
/// s = r2/(3 r1):  g2 = 12 s^2 + 4,  g3 = 8 s^3 + 4 s.
/// Depends on r2/r1 only. Throws std::domain_error when r1 = 0.
template <class S>
std::pair<S, S> weierstrass_from_ratio(const S& s)
{
    return {S(12) * s * s + S(4), S(8) * s * s * s + S(4) * s};
}

WeierstrassInvariants weierstrass_from_r(const SpectralCurve2& c);

/// 1 - I = 27 r^4 (1/4 + r^2) / (1 + 3 r^2)^3 with r = r1/r2. Equals
/// Delta_W/g2^3 of weierstrass_from_ratio identically (exact in rational
/// arithmetic); keeping the complement avoids cancellation for small r.
template <class S>
S one_minus_I_from_ratio(const S& r)
{
    const S r2 = r * r;
    const S den = S(1) + S(3) * r2;
    return S(27) * r2 * r2 * (S(1) / S(4) + r2) / (den * den * den);
}

/// I = 27 g3^2/g2^3 as a function of the curve parameters. r1 = 0 gives
/// I = 1 (degenerate); r2 = 0 with r1 > 0 is the r -> infinity limit I = 0.
double I_from_r(const SpectralCurve2& c);

/// The unique purely imaginary tau = i rho, rho in [1, 60], with modular
/// invariant matching I_from_r(c); monotone bisection on the imaginary
/// axis. Requires r1 > 0, r2 != 0. Throws NumericError on non-convergence.
Tau tau_from_r(const SpectralCurve2& c, const Rational& order, double tol);

/// Inverse map: solve 1 - I(tau) = 1 - I(r) for r = r1/r2 by bisection
/// (monotone in r), then fix the absolute scale from
/// g2(tau) = (64/3) r2^2 (1 + 3 r^2). Requires rho = -i tau >= 1.
SpectralCurve2 r_params_from_tau(const Tau& tau, const Rational& order, double tol);

/// Point of T_Omega: a real Darboux-Halphen triple at parameter rho.
struct OmegaPoint {
    std::array<double, 3> omega;
    double rho;

    bool pairwise_distinct(double eps = 0.0) const;
};

/// Theta-constant solution of the real Darboux-Halphen system,
///   Omega_i(rho) = kappa * d/drho log theta_{i+1}(i rho),  kappa = 2,
/// the transport of halphen_solution_theta to the real section
/// (tau = i rho, Omega_j = i T_j).
OmegaPoint omega_from_theta(double rho, const Rational& order, double tol);

/// Max residual of Omega_dot_i = Omega_i(Omega_j+Omega_k) - Omega_j Omega_k
/// for the theta solution over [rho_min, rho_max].
double omega_theta_residual(double rho_min, double rho_max, int n_samples,
                            const Rational& order, double tol);

/// Squared Bianchi IX coefficients from the reparametrization
///   a^2 = Om2 Om3/Om1, b^2 = Om3 Om1/Om2, c^2 = Om1 Om2/Om3.
template <class S>
std::array<S, 3> metric_squares(const std::array<S, 3>& om)
{
    return {om[1] * om[2] / om[0], om[2] * om[0] / om[1], om[0] * om[1] / om[2]};
}

/// Metric data at one rho. Negative squared coefficients are returned
/// as-is with positive_signature = false, never absolute-valued.
struct BianchiFrame {
    double rho;
    double a2, b2, c2;
    double abc2; // (abc)^2 = Om1 Om2 Om3
    bool positive_signature;
    std::array<double, 3> selfdual_res; // orientation '-' residuals
};

BianchiFrame metric_from_omega(const OmegaPoint& p);

/// Residuals of the self-duality equations
///   2 a'/a = b^2 + c^2 - a^2 - 2bc   (+ cyclic)
/// with d(a^2)/drho formed by the chain rule through the Darboux-Halphen
/// field, and drho replaced by orientation * drho.
///
/// The cross products are realized algebraically from the reparametrization
/// (bc = Om1, ca = Om2, ab = Om3, the root choice consistent with the
/// squares), so the check is rational in the Omega_i. With orientation = -1
/// the residuals vanish identically; orientation is kept explicit so the
/// sign convention is a measured output rather than a hidden flip.
template <class S>
std::array<S, 3> selfdual_residual_triple(const std::array<S, 3>& om, int orientation)
{
    const std::array<S, 3> sq = metric_squares(om);
    std::array<S, 3> omdot{};
    for (int i = 0; i < 3; ++i) {
        omdot[i] = om[i] * (om[(i + 1) % 3] + om[(i + 2) % 3]) -
                   om[(i + 1) % 3] * om[(i + 2) % 3];
    }
    const S orient = S(orientation);
    std::array<S, 3> res{};
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        // d(sq_i)/drho / sq_i = omdot_j/om_j + omdot_k/om_k - omdot_i/om_i
        const S dlog = omdot[j] / om[j] + omdot[k] / om[k] - omdot[i] / om[i];
        const S rhs = sq[j] + sq[k] - sq[i] - S(2) * om[i];
        res[i] = orient * dlog - rhs;
    }
    return res;
}

/// Double-precision wrapper; throws NumericError when a squared coefficient
/// is negative (signature obstruction) and std::domain_error when some
/// Omega_i vanishes.
std::array<double, 3> selfdual_residual(const OmegaPoint& p, int orientation);

/// Large-rho diagnostics at one rho: the computed metric data next to the
/// reference asymptotic display, and the isometry-enhancement gauge
/// |b^2/c^2 - 1| (the two coefficients whose merging enlarges the isometry
/// to SO(3) x SO(2)). The reference column is reported, not asserted.
struct AsymptoticReport {
    double rho;
    double q; // e^{-2 pi rho}
    OmegaPoint omega;
    BianchiFrame frame;
    double b2_over_c2;
    double enhancement_gauge; // |b^2/c^2 - 1|
    // Displayed asymptotic form (4 q^{1/4}, q^{3/4}, q^{-1/4}/4): kept for
    // side-by-side comparison with the computed coefficients.
    double ref_abc2, ref_a2, ref_b2c2;
};

AsymptoticReport asymptotic_report(double rho, const Rational& order, double tol);

} // namespace specmod

#endif
