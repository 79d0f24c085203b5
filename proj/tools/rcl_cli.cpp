#include <cstdint>
#include <string>

#include "CLI11.hpp"
#include "rcl/capi.h"

int main(int argc, char** argv) {
    CLI::App app{"rcl: Ramsey cycle laboratory"};
    app.require_subcommand(1);

    std::string config, out;
    long long budget = 0;
    int jobs = 0;
    std::uint64_t seed = 1;
    bool have_seed = false;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "base RNG seed")->each([&](const std::string&) {
            have_seed = true;
        });
        cmd->add_option("--config", config, "flat key = value config file");
        cmd->add_option("--out", out, "output path or directory (default: $RCL_OUT_DIR or .)");
        cmd->add_option("--budget", budget, "work budget for exact searches");
        cmd->add_option("--jobs", jobs, "worker threads");
    };

    int n_lo = 5, n_hi = 10;
    auto* verify = app.add_subcommand("verify-lb", "verify lower-bound colourings exhaustively");
    verify->add_option("--n-lo", n_lo, "smallest cycle length");
    verify->add_option("--n-hi", n_hi, "largest cycle length");
    add_common(verify);

    auto* sweep = app.add_subcommand("sweep", "threshold sweep, one CSV row per trial");
    add_common(sweep);

    int bn = 12, bseeds = 20;
    double bp = 0.35;
    auto* boosters = app.add_subcommand("boosters", "booster statistics by planting search");
    boosters->add_option("-n", bn, "instance order (<= 14)");
    boosters->add_option("-p", bp, "edge probability");
    boosters->add_option("--trials", bseeds, "seeds");
    add_common(boosters);

    int sn = 200;
    double sp = 0.2;
    auto* spectrum = app.add_subcommand("spectrum", "per-length cycle finder success");
    spectrum->add_option("-n", sn, "host order");
    spectrum->add_option("-p", sp, "edge probability");
    add_common(spectrum);

    std::string csv_in, svg_out = "plot.svg";
    auto* plot = app.add_subcommand("plot", "render success-rate curves from a sweep CSV");
    plot->add_option("csv", csv_in, "input CSV")->required();
    plot->add_option("svg", svg_out, "output SVG");
    add_common(plot);

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) return rcl_cmd_verify_lb(n_lo, n_hi, out.c_str());
    if (sweep->parsed())
        return rcl_cmd_sweep(config.c_str(), out.c_str(), budget, jobs, seed, have_seed ? 1 : 0);
    if (boosters->parsed()) return rcl_cmd_boosters(bn, bp, bseeds, out.c_str());
    if (spectrum->parsed()) return rcl_cmd_spectrum(sn, sp, seed, budget, out.c_str());
    if (plot->parsed()) return rcl_cmd_plot(csv_in.c_str(), svg_out.c_str());
    return 3;
}
