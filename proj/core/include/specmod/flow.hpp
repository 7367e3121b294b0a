#ifndef SPECMOD_FLOW_HPP
#define SPECMOD_FLOW_HPP

#include "specmod/modforms.hpp"

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace specmod {

/// The three flows: Ramanujan and Darboux-Halphen along the imaginary axis
/// (tau = i s, with the chain-rule factor i applied to the field so the
/// integration parameter s stays real), and the real Omega system in rho.
enum class FieldKind { ramanujan, halphen, omega };

struct FlowResult {
    enum class Status { ok, blowup, domain_exit };

    Status status = Status::ok;
    std::vector<std::pair<double, std::array<Complex, 3>>> samples;
    std::array<Complex, 3> endpoint{};
    double endpoint_param = 0.0;
    std::size_t steps_accepted = 0;
    std::size_t steps_rejected = 0;
    double h_min = 0.0;
    double h_max = 0.0;
    /// Max-abs deviation from the supplied reference endpoint, when given.
    std::optional<double> endpoint_error;
};

/// State norm cap for blow-up detection (Halphen flows reach finite-time
/// singularities) and domain-exit thresholds.
constexpr double flow_blowup_norm = 1e8;
constexpr double flow_domain_eps = 1e-10;

/// Adaptive embedded Runge-Kutta 5(4) trajectory from param0 to param1 with
/// local error <= tol per unit step. On blow-up or domain exit (Delta -> 0
/// for R, T_i collision for H) the result carries the last good sample.
FlowResult integrate(FieldKind kind, const std::array<Complex, 3>& start, double param0,
                     double param1, double tol,
                     const std::optional<std::array<Complex, 3>>& reference = std::nullopt);

/// Fixed-step variant (5th-order stepper only), for order measurements.
std::array<Complex, 3> integrate_fixed(FieldKind kind, const std::array<Complex, 3>& start,
                                       double param0, double param1, int n_steps);

struct ResidualScan {
    double max_residual;
    double h_used;
};

/// Max over the grid of |field(solution(s)) - d/ds solution(s)| with the
/// derivative from centered differences of step h; one Richardson
/// refinement (4 D(h/2) - D(h))/3 when `richardson` is set.
ResidualScan residual_scan(FieldKind kind,
                           const std::function<std::array<Complex, 3>(double)>& solution,
                           const std::vector<double>& grid, double h, bool richardson = true);

/// The parametrized field actually integrated (chain-rule factor included).
std::array<Complex, 3> flow_field(FieldKind kind, const std::array<Complex, 3>& y);

} // namespace specmod

#endif
