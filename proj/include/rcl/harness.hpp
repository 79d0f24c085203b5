#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "rcl/graph.hpp"

namespace rcl {

// Flat key = value experiment configuration. CLI flags override file values.
struct ExperimentConfig {
    std::vector<int> n_values = {30};
    std::vector<double> p_values = {0.5};
    std::vector<double> offsets = {0, 2, 4, 6, 8, 10};  // N = R(C_n) + offset/p
    std::vector<std::string> strategies = {"clique", "random", "perturbed-extremal"};
    int seeds = 10;
    std::uint64_t base_seed = 1;
    long long budget = 50'000'000;
    int jobs = 1;
    bool timing = true;  // timing = off zeroes elapsed_ms for byte-stable CSV
    double eps = 0.02;   // perturbed-extremal flip rate
    std::string out_dir;

    void set(const std::string& key, const std::string& value);  // ParseError on bad input
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

struct ExperimentRecord {
    int n = 0;
    double p = 0.0;
    int N = 0;
    std::uint64_t seed = 0;
    std::string strategy;
    bool mono_red = false;
    bool mono_blue = false;
    std::string method;  // exact | finder
    long long elapsed_ms = 0;
};

std::string csv_header();
std::string csv_row(const ExperimentRecord& r);

// Exit-code semantics for all commands: 0 success, 2 invariant violation.
// Config errors surface as Err::ParseError / Err::InvalidArgument (exit 3
// at the CLI boundary).

// Theorem 1(2) at desk scale: lower-bound colourings on clique hosts contain
// no monochromatic C_n (exhaustive oracle, n in [n_lo, n_hi] within 5..10).
int cmd_verify_lower_bound(int n_lo, int n_hi, std::ostream& report);

// Threshold sweep; one CSV row per (cell, seed) trial, trial-index order.
int cmd_threshold_sweep(const ExperimentConfig& config, std::ostream& csv, std::ostream& log);

// Lemma 4.1 / bipartite booster statistics by planting search.
int cmd_booster_stats(int n, double p, int seeds, std::ostream& csv, std::ostream& log);

// Lemma 5.1 spectrum: per-length finder success on H = G(n, p).
int cmd_cycle_spectrum(int n, double p, std::uint64_t seed, long long budget,
                       std::ostream& report);

// Success-rate-vs-N curves per strategy; deterministic bytes for fixed input.
void emit_svg_plot(const std::string& csv_text, std::ostream& svg);

}  // namespace rcl
