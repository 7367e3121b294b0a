#include "commands.hpp"

#include "specmod/flow.hpp"
#include "specmod/moduli.hpp"
#include "specmod/monopole.hpp"

#include <array>
#include <cstdio>

namespace specmod::cli {

namespace {

std::array<Complex, 3> closed_form_state(FieldKind kind, double s, const Rational& order,
                                         double tol)
{
    switch (kind) {
    case FieldKind::ramanujan: {
        const TRPoint t = ramanujan_solution(Tau::imaginary(s), order, tol);
        return {t.t1, t.t2, t.t3};
    }
    case FieldKind::halphen: {
        const THPoint T = halphen_solution_theta(Tau::imaginary(s), order, tol);
        return {T.T1, T.T2, T.T3};
    }
    case FieldKind::omega: {
        const OmegaPoint p = omega_from_theta(s, order, tol);
        return {p.omega[0], p.omega[1], p.omega[2]};
    }
    }
    throw std::invalid_argument("unknown field");
}

void add_state(KeyValueSink& out, const char* prefix, const std::array<Complex, 3>& y)
{
    for (int i = 0; i < 3; ++i) {
        out.add(std::string(prefix) + std::to_string(i + 1) + "_re", y[i].real());
        out.add(std::string(prefix) + std::to_string(i + 1) + "_im", y[i].imag());
    }
}

} // namespace

int cmd_flow(const Config& cfg, const FlowOptions& opt)
{
    FieldKind kind;
    if (opt.field == "R") {
        kind = FieldKind::ramanujan;
    } else if (opt.field == "H") {
        kind = FieldKind::halphen;
    } else if (opt.field == "omega") {
        kind = FieldKind::omega;
    } else {
        std::fprintf(stderr, "flow: field must be R, H or omega\n");
        return exit_usage;
    }

    const Rational order(cfg.order);
    const double tol = opt.tol.value_or(cfg.tol);
    const double param0 = opt.from_tau ? *opt.from_tau : opt.from.value_or(1.0);

    std::array<Complex, 3> start;
    bool oracle_start = false;
    if (opt.start) {
        if (opt.start->size() != 3) {
            std::fprintf(stderr, "flow: --start needs three comma-separated values\n");
            return exit_usage;
        }
        start = {Complex((*opt.start)[0]), Complex((*opt.start)[1]), Complex((*opt.start)[2])};
    } else {
        start = closed_form_state(kind, param0, order, cfg.tol);
        oracle_start = true;
    }

    std::optional<std::array<Complex, 3>> reference;
    if (oracle_start) {
        reference = closed_form_state(kind, opt.to, order, cfg.tol);
    }

    const FlowResult res = integrate(kind, start, param0, opt.to, tol, reference);

    KeyValueSink out(cfg);
    out.add_text("field", opt.field);
    out.add("from", param0);
    out.add("to", opt.to);
    out.add("tol", tol);
    out.add_text("status", res.status == FlowResult::Status::ok          ? "ok"
                           : res.status == FlowResult::Status::blowup    ? "blowup"
                                                                         : "domain_exit");
    out.add("steps_accepted", static_cast<double>(res.steps_accepted));
    out.add("steps_rejected", static_cast<double>(res.steps_rejected));
    out.add("h_min", res.h_min);
    out.add("h_max", res.h_max);
    out.add("endpoint_param", res.endpoint_param);
    add_state(out, "y", res.endpoint);
    if (res.endpoint_error) {
        out.add("endpoint_error", *res.endpoint_error);
    }
    out.print();

    if (res.status != FlowResult::Status::ok) {
        return exit_failed; // last good sample is in the table above
    }
    if (res.endpoint_error && !(*res.endpoint_error < 10.0 * tol)) {
        return exit_failed;
    }
    return exit_ok;
}

} // namespace specmod::cli
