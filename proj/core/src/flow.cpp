#include "specmod/flow.hpp"

#include "specmod/errors.hpp"
#include "specmod/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specmod {

namespace {

using State = std::array<Complex, 3>;

State axpy(const State& y, double h, const State& k)
{
    return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2]};
}

double max_norm(const State& y)
{
    return std::max({std::abs(y[0]), std::abs(y[1]), std::abs(y[2])});
}

double domain_gauge(FieldKind kind, const State& y)
{
    switch (kind) {
    case FieldKind::ramanujan:
        return std::abs(y[1] * y[1] * y[1] - 27.0 * y[2] * y[2]); // |Delta|
    case FieldKind::halphen:
    case FieldKind::omega:
        return std::min({std::abs(y[0] - y[1]), std::abs(y[0] - y[2]),
                         std::abs(y[1] - y[2])});
    }
    return 1.0;
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// y5 - y4 error weights (including the FSAL stage).
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

struct StepOut {
    State y_new;
    double err; // max-norm of the embedded difference
};

template <class F>
StepOut dopri5_step(const F& f, const State& y, double h)
{
    const State k1 = f(y);
    const State k2 = f(axpy(y, h * a21, k1));
    const State k3 = f({y[0] + h * (a31 * k1[0] + a32 * k2[0]),
                        y[1] + h * (a31 * k1[1] + a32 * k2[1]),
                        y[2] + h * (a31 * k1[2] + a32 * k2[2])});
    State s4, s5, s6;
    for (int i = 0; i < 3; ++i) {
        s4[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    }
    const State k4 = f(s4);
    for (int i = 0; i < 3; ++i) {
        s5[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    }
    const State k5 = f(s5);
    for (int i = 0; i < 3; ++i) {
        s6[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                            a65 * k5[i]);
    }
    const State k6 = f(s6);

    StepOut out{};
    for (int i = 0; i < 3; ++i) {
        out.y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                   b6 * k6[i]);
    }
    const State k7 = f(out.y_new);
    double err = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Complex d = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                               e6 * k6[i] + e7 * k7[i]);
        err = std::max(err, std::abs(d));
    }
    out.err = err;
    return out;
}

} // namespace

State flow_field(FieldKind kind, const State& y)
{
    switch (kind) {
    case FieldKind::ramanujan: {
        auto v = ramanujan_field<Complex>(y);
        // tau = i s: d/ds = i d/dtau.
        return {Complex(0, 1) * v[0], Complex(0, 1) * v[1], Complex(0, 1) * v[2]};
    }
    case FieldKind::halphen: {
        auto v = halphen_field<Complex>(y);
        return {Complex(0, 1) * v[0], Complex(0, 1) * v[1], Complex(0, 1) * v[2]};
    }
    case FieldKind::omega:
        return halphen_field<Complex>(y);
    }
    throw std::invalid_argument("flow_field: unknown field");
}

FlowResult integrate(FieldKind kind, const State& start, double param0, double param1,
                     double tol, const std::optional<State>& reference)
{
    if (!(tol > 0.0)) {
        throw std::invalid_argument("integrate: tol must be positive");
    }
    FlowResult out;
    const double dir = param1 >= param0 ? 1.0 : -1.0;
    const double span = std::abs(param1 - param0);
    if (span == 0.0) {
        out.samples.emplace_back(param0, start);
        out.endpoint = start;
        out.endpoint_param = param0;
        if (reference) {
            State d = start;
            for (int i = 0; i < 3; ++i) {
                d[i] -= (*reference)[i];
            }
            out.endpoint_error = max_norm(d);
        }
        return out;
    }

    const auto f = [kind](const State& y) { return flow_field(kind, y); };

    // The singular loci are flow-invariant, so a start on (or within eps of)
    // the locus is legitimate; exit detection only arms for interior starts.
    const bool watch_domain = domain_gauge(kind, start) > flow_domain_eps;

    double s = param0;
    State y = start;
    double h = dir * std::min(span, 0.1 * span + 1e-3);
    out.samples.emplace_back(s, y);
    out.h_min = std::abs(h);
    out.h_max = 0.0;

    while (dir * (param1 - s) > 0.0) {
        if (std::abs(h) > std::abs(param1 - s)) {
            h = param1 - s;
        }
        const StepOut step = dopri5_step(f, y, h);
        // Error per unit step against the state scale.
        const double scale = tol * std::abs(h) * (1.0 + max_norm(y));
        if (step.err <= scale) {
            s += h;
            y = step.y_new;
            ++out.steps_accepted;
            out.h_min = std::min(out.h_min, std::abs(h));
            out.h_max = std::max(out.h_max, std::abs(h));
            out.samples.emplace_back(s, y);
            if (max_norm(y) > flow_blowup_norm) {
                out.status = FlowResult::Status::blowup;
                break;
            }
            if (watch_domain && domain_gauge(kind, y) <= flow_domain_eps) {
                out.status = FlowResult::Status::domain_exit;
                break;
            }
        } else {
            ++out.steps_rejected;
        }
        const double factor = step.err > 0.0
                                  ? 0.9 * std::pow(scale / step.err, 0.25)
                                  : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
        if (std::abs(h) < 1e-14 * span) {
            throw NumericError("integrate: step size underflow");
        }
    }

    out.endpoint = y;
    out.endpoint_param = s;
    if (reference && out.status == FlowResult::Status::ok) {
        State d = y;
        for (int i = 0; i < 3; ++i) {
            d[i] -= (*reference)[i];
        }
        out.endpoint_error = max_norm(d);
    }
    return out;
}

State integrate_fixed(FieldKind kind, const State& start, double param0, double param1,
                      int n_steps)
{
    if (n_steps < 1) {
        throw std::invalid_argument("integrate_fixed: need at least one step");
    }
    const auto f = [kind](const State& y) { return flow_field(kind, y); };
    const double h = (param1 - param0) / n_steps;
    State y = start;
    for (int i = 0; i < n_steps; ++i) {
        y = dopri5_step(f, y, h).y_new;
    }
    return y;
}

ResidualScan residual_scan(FieldKind kind,
                           const std::function<State(double)>& solution,
                           const std::vector<double>& grid, double h, bool richardson)
{
    if (!(h > 0.0)) {
        throw std::invalid_argument("residual_scan: h must be positive");
    }
    const auto centered = [&](double s, double step) {
        const State hi = solution(s + step);
        const State lo = solution(s - step);
        State d;
        for (int i = 0; i < 3; ++i) {
            d[i] = (hi[i] - lo[i]) / (2.0 * step);
        }
        return d;
    };

    double worst = 0.0;
    for (double s : grid) {
        State deriv = centered(s, h);
        if (richardson) {
            const State fine = centered(s, 0.5 * h);
            for (int i = 0; i < 3; ++i) {
                deriv[i] = (4.0 * fine[i] - deriv[i]) / 3.0;
            }
        }
        const State field = flow_field(kind, solution(s));
        for (int i = 0; i < 3; ++i) {
            worst = std::max(worst, std::abs(field[i] - deriv[i]));
        }
    }
    return {worst, h};
}

} // namespace specmod
