#include "commands.hpp"

#include "specmod/modforms.hpp"

#include <cstdio>
#include <string>

namespace specmod::cli {

namespace {

bool is_series_target(const std::string& t)
{
    return t == "E2" || t == "E4" || t == "E6" || t == "theta2" || t == "theta3" ||
           t == "theta4";
}

FracSeries build_series(const std::string& target, const Rational& order)
{
    if (target == "E2") return eisenstein_q(1, order);
    if (target == "E4") return eisenstein_q(2, order);
    if (target == "E6") return eisenstein_q(3, order);
    if (target == "theta2") return theta_q(2, order);
    if (target == "theta3") return theta_q(3, order);
    return theta_q(4, order);
}

} // namespace

int cmd_eval(const Config& cfg, const EvalOptions& opt)
{
    const Rational order(cfg.order);

    if (opt.series) {
        if (!is_series_target(opt.target)) {
            std::fprintf(stderr, "eval: --series is only available for "
                                 "E2,E4,E6,theta2,theta3,theta4\n");
            return exit_usage;
        }
        const FracSeries s = build_series(opt.target, order);
        std::string line;
        for (const auto& [e, c] : s.terms()) {
            if (!line.empty()) {
                line += ", ";
            }
            line += format_exponent_eighths(e) + ":" + c.str();
        }
        std::printf("%s\n", line.c_str());
        return exit_ok;
    }

    if (!opt.tau_rho) {
        std::fprintf(stderr, "eval: need --tau <rho> or --series\n");
        return exit_usage;
    }
    const Tau tau = Tau::imaginary(*opt.tau_rho);
    KeyValueSink out(cfg);

    if (is_series_target(opt.target)) {
        const SeriesValue v = eval_series(build_series(opt.target, order), tau, cfg.tol);
        out.add(opt.target, v.value.real());
        out.add("tail_bound", v.tail_bound);
    } else if (opt.target == "g2" || opt.target == "g3") {
        const auto w = g_invariants_tau(tau, order, cfg.tol);
        out.add(opt.target, opt.target == "g2" ? w.g2.real() : w.g3.real());
    } else if (opt.target == "j") {
        out.add("j", j_and_I(tau, order, cfg.tol).j.real());
    } else if (opt.target == "I") {
        const KleinPair k = j_and_I(tau, order, cfg.tol);
        out.add("I", k.I.real());
        out.add("one_minus_I", k.one_minus_I.real()); // deviation from the cusp value
        out.add("one_minus_I_times_j_over_27", (k.one_minus_I * k.j).real() / 27.0);
    } else {
        std::fprintf(stderr, "eval: unknown target '%s'\n", opt.target.c_str());
        return exit_usage;
    }
    out.print();
    return exit_ok;
}

} // namespace specmod::cli
