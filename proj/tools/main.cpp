#include "commands.hpp"

#include "specmod/errors.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>

using namespace specmod::cli;

namespace {

int run(int argc, char** argv)
{
    CLI::App app{"spectral-curve moduli, modular flows and Bianchi IX metric data"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value configuration file");

    Config cfg;
    app.add_option("--order", cfg.order, "series truncation order in q-units")
        ->envname("SPECMOD_ORDER")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--tol", cfg.tol, "numeric tolerance")
        ->envname("SPECMOD_TOL")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for audit sampling")
        ->envname("SPECMOD_SEED")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->envname("SPECMOD_FORMAT")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--precision", cfg.precision, "significant digits in numeric output")
        ->envname("SPECMOD_PRECISION")
        ->check(CLI::Range(6, 17))
        ->capture_default_str();

    EvalOptions eval_opt;
    CLI::App* eval = app.add_subcommand("eval", "evaluate modular quantities");
    eval->add_option("target", eval_opt.target,
                     "E2, E4, E6, theta2, theta3, theta4, g2, g3, j, I")
        ->required();
    auto* eval_tau = eval->add_option("--tau", eval_opt.tau_rho, "evaluate at tau = i rho");
    eval->add_flag("--series", eval_opt.series, "print exact q-coefficients")
        ->excludes(eval_tau);

    AuditOptions audit_opt;
    CLI::App* audit = app.add_subcommand("audit", "identity audits with JSON reports");
    audit->add_option("target", audit_opt.target,
                      "disguise-r, disguise-h, morphism, group, ramanujan-exact, "
                      "halphen-theta, selfdual")
        ->required();
    audit->add_option("--n", audit_opt.n, "number of sample points");
    audit->add_flag("--explain", audit_opt.explain, "include per-point residuals");

    CurveOptions curve_opt;
    CLI::App* curve = app.add_subcommand("curve", "spectral curve parameter conversions");
    curve->add_option("--r1", curve_opt.r1, "curve parameter r1");
    curve->add_option("--r2", curve_opt.r2, "curve parameter r2");
    curve->add_option("--rho", curve_opt.rho, "imaginary part of tau");

    MetricOptions metric_opt;
    CLI::App* metric = app.add_subcommand("metric", "tabulate Bianchi IX metric data");
    metric->add_option("--rho-min", metric_opt.rho_min, "grid start")->required();
    metric->add_option("--rho-max", metric_opt.rho_max, "grid end")->required();
    metric->add_option("--steps", metric_opt.steps, "number of rows")->required();
    metric->add_option("--orientation", metric_opt.orientation,
                       "orientation for the self-duality residuals (+ or -)")
        ->capture_default_str();

    FlowOptions flow_opt;
    CLI::App* flow = app.add_subcommand("flow", "integrate the moduli vector fields");
    flow->add_option("field", flow_opt.field, "R, H or omega")->required();
    auto* flow_from_tau = flow->add_option(
        "--from-tau", flow_opt.from_tau, "start from the closed-form solution at tau = i s");
    flow->add_option("--from", flow_opt.from, "start parameter (closed-form start)")
        ->excludes(flow_from_tau);
    flow->add_option("--start", flow_opt.start, "raw start state a,b,c")->delimiter(',');
    flow->add_option("--to", flow_opt.to, "end parameter")->required();
    flow->add_option("--tol", flow_opt.tol, "local error tolerance");

    for (CLI::App* sub : {eval, audit, curve, metric, flow}) {
        sub->fallthrough(); // global options may follow the subcommand
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            return app.exit(e);
        }
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*eval) {
            return cmd_eval(cfg, eval_opt);
        }
        if (*audit) {
            return cmd_audit(cfg, audit_opt);
        }
        if (*curve) {
            return cmd_curve(cfg, curve_opt);
        }
        if (*metric) {
            return cmd_metric(cfg, metric_opt);
        }
        if (*flow) {
            return cmd_flow(cfg, flow_opt);
        }
    } catch (const specmod::NumericError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_numeric;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_numeric;
    }
    return exit_usage;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fatal: %s\n", e.what());
        return exit_numeric;
    }
}
