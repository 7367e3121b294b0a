#include "commands.hpp"

#include "specmod/errors.hpp"
#include "specmod/monopole.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace specmod::cli {

int cmd_metric(const Config& cfg, const MetricOptions& opt)
{
    if (!(opt.rho_min < opt.rho_max) || opt.steps < 1) {
        std::fprintf(stderr, "metric: need --rho-min < --rho-max and --steps >= 1\n");
        return exit_usage;
    }
    if (opt.orientation != "-" && opt.orientation != "+") {
        std::fprintf(stderr, "metric: orientation must be '+' or '-'\n");
        return exit_usage;
    }
    const int orientation = opt.orientation == "-" ? -1 : +1;
    const Rational order(cfg.order);

    static constexpr const char* columns[] = {"rho", "q",   "Omega1", "Omega2",
                                              "Omega3", "a2",  "b2",     "c2",
                                              "abc2",   "sd1", "sd2",    "sd3",
                                              "b2_over_c2"};

    json rows = json::array();
    if (cfg.format == "csv") {
        std::string header;
        for (const char* c : columns) {
            header += header.empty() ? c : std::string(",") + c;
        }
        std::printf("%s\n", header.c_str());
    }

    for (int i = 0; i < opt.steps; ++i) {
        const double rho =
            opt.steps == 1
                ? opt.rho_min
                : opt.rho_min + (opt.rho_max - opt.rho_min) * i / (opt.steps - 1);
        const OmegaPoint p = omega_from_theta(rho, order, cfg.tol);
        const BianchiFrame f = metric_from_omega(p);
        if (!f.positive_signature) {
            std::fprintf(stderr, "metric: signature obstruction at rho = %s\n",
                         fmt(rho, cfg.precision).c_str());
            return exit_numeric;
        }
        const auto sd = selfdual_residual(p, orientation);
        const double vals[] = {rho,
                               std::exp(-2.0 * std::numbers::pi * rho),
                               p.omega[0],
                               p.omega[1],
                               p.omega[2],
                               f.a2,
                               f.b2,
                               f.c2,
                               f.abc2,
                               sd[0],
                               sd[1],
                               sd[2],
                               f.b2 / f.c2};
        if (cfg.format == "csv") {
            std::string line;
            for (double v : vals) {
                line += line.empty() ? fmt(v, cfg.precision)
                                     : "," + fmt(v, cfg.precision);
            }
            std::printf("%s\n", line.c_str());
        } else {
            json row = json::object();
            for (std::size_t k = 0; k < std::size(columns); ++k) {
                row[columns[k]] = rounded(vals[k], cfg.precision);
            }
            rows.push_back(row);
        }
    }
    if (cfg.format == "json") {
        std::printf("%s\n", rows.dump(2).c_str());
    }
    return exit_ok;
}

} // namespace specmod::cli
