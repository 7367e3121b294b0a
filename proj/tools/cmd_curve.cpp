#include "commands.hpp"

#include "specmod/monopole.hpp"

#include <cmath>
#include <cstdio>

namespace specmod::cli {

int cmd_curve(const Config& cfg, const CurveOptions& opt)
{
    const Rational order(cfg.order);
    const bool from_r = opt.r1.has_value() || opt.r2.has_value();
    if (from_r == opt.rho.has_value()) {
        std::fprintf(stderr, "curve: give either --r1/--r2 or --rho\n");
        return exit_usage;
    }

    SpectralCurve2 c{};
    double rho = 0.0;
    if (from_r) {
        if (!opt.r1 || !opt.r2) {
            std::fprintf(stderr, "curve: both --r1 and --r2 are required\n");
            return exit_usage;
        }
        c = {*opt.r1, *opt.r2};
        if (c.degenerate()) {
            const double slope = std::sqrt(std::abs(c.r2));
            std::fprintf(stderr,
                         "curve: degenerate: two k=1 curves eta = +-i sqrt(r2) zeta "
                         "(slopes +-%.6gi)\n",
                         slope);
            return exit_usage;
        }
        rho = tau_from_r(c, order, cfg.tol).rho();
    } else {
        rho = *opt.rho;
        c = r_params_from_tau(Tau::imaginary(rho), order, cfg.tol);
    }

    const WeierstrassInvariants w = weierstrass_from_r(c);
    KeyValueSink out(cfg);
    out.add("r1", c.r1);
    out.add("r2", c.r2);
    out.add("g2", w.g2.real());
    out.add("g3", w.g3.real());
    out.add("delta_w", w.discriminant().real());
    out.add("I", I_from_r(c));
    out.add("rho", rho);
    out.print();
    return exit_ok;
}

} // namespace specmod::cli
