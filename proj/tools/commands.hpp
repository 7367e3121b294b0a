#ifndef SPECMOD_TOOLS_COMMANDS_HPP
#define SPECMOD_TOOLS_COMMANDS_HPP

#include "common.hpp"

#include <optional>
#include <string>
#include <vector>

namespace specmod::cli {

struct EvalOptions {
    std::string target;
    std::optional<double> tau_rho;
    bool series = false;
};
int cmd_eval(const Config& cfg, const EvalOptions& opt);

struct AuditOptions {
    std::string target;
    std::size_t n = 100;
    bool explain = false;
};
int cmd_audit(const Config& cfg, const AuditOptions& opt);

struct CurveOptions {
    std::optional<double> r1;
    std::optional<double> r2;
    std::optional<double> rho;
};
int cmd_curve(const Config& cfg, const CurveOptions& opt);

struct MetricOptions {
    double rho_min = 1.0;
    double rho_max = 3.0;
    int steps = 5;
    std::string orientation = "-";
};
int cmd_metric(const Config& cfg, const MetricOptions& opt);

struct FlowOptions {
    std::string field; // R | H | omega
    std::optional<double> from_tau;
    std::optional<double> from;
    std::optional<std::vector<double>> start;
    double to = 0.0;
    std::optional<double> tol;
};
int cmd_flow(const Config& cfg, const FlowOptions& opt);

} // namespace specmod::cli

#endif
