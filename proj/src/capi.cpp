#include "rcl/capi.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "rcl/colouring.hpp"
#include "rcl/error.hpp"
#include "rcl/graph.hpp"
#include "rcl/harness.hpp"
#include "rcl/oracle.hpp"
#include "rcl/rotation.hpp"

namespace {

thread_local std::string g_last_error;

int status_of(rcl::Err e) { return (int)e; }

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const rcl::Error& e) {
        set_error(e.what());
        return -status_of(e.code);
    } catch (const std::exception& e) {
        set_error(e.what());
        return -RCL_UNKNOWN_ERROR;
    }
}

template <typename T, typename F>
T* guarded_ptr(F&& f) {
    try {
        return f();
    } catch (const rcl::Error& e) {
        set_error(e.what());
        return nullptr;
    } catch (const std::exception& e) {
        set_error(e.what());
        return nullptr;
    }
}

std::string output_path(const char* dir, const char* name) {
    std::string d = dir && *dir ? dir : "";
    if (d.empty()) {
        const char* env = std::getenv("RCL_OUT_DIR");
        d = env && *env ? env : ".";
    }
    if (!d.empty() && d.back() != '/') d += '/';
    return d + name;
}

int exit_code_of(const rcl::Error& e) {
    switch (e.code) {
        case rcl::Err::ParseError:
        case rcl::Err::InvalidArgument:
        case rcl::Err::IoError:
            return 3;
        default:
            return 2;
    }
}

int fill_cycle(const rcl::Cycle& c, int* out, int cap) {
    if (!out) return 1;
    if ((int)c.verts.size() > cap) {
        set_error("cycle buffer too small");
        return -RCL_INVALID_ARGUMENT;
    }
    for (size_t i = 0; i < c.verts.size(); ++i) out[i] = c.verts[i];
    return 1;
}

}  // namespace

struct rcl_graph {
    rcl::Graph g;
};
struct rcl_colouring {
    rcl::EdgeColouring c;
};

extern "C" {

const char* rcl_last_error(void) { return g_last_error.c_str(); }

rcl_graph* rcl_graph_new(int n) {
    return guarded_ptr<rcl_graph>([&]() {
        rcl::require(n >= 0, rcl::Err::InvalidArgument, "graph order must be nonnegative");
        return new rcl_graph{rcl::Graph(n)};
    });
}

rcl_graph* rcl_graph_sample_gnp(int n, double p, uint64_t seed) {
    return guarded_ptr<rcl_graph>(
        [&]() { return new rcl_graph{rcl::sample_gnp(n, p, rcl::Seed{seed})}; });
}

rcl_graph* rcl_graph_complete(int n) {
    return guarded_ptr<rcl_graph>([&]() { return new rcl_graph{rcl::Graph::complete(n)}; });
}

void rcl_graph_free(rcl_graph* g) { delete g; }

int rcl_graph_n(const rcl_graph* g) { return g ? g->g.n() : -RCL_INVALID_ARGUMENT; }

long long rcl_graph_edge_count(const rcl_graph* g) {
    return g ? g->g.edge_count() : -RCL_INVALID_ARGUMENT;
}

int rcl_graph_add_edge(rcl_graph* g, int u, int v) {
    return guarded([&]() {
        rcl::require(g != nullptr, rcl::Err::InvalidArgument, "null graph");
        g->g.add_edge(u, v);
        return RCL_OK;
    });
}

int rcl_graph_has_edge(const rcl_graph* g, int u, int v) {
    return guarded([&]() {
        rcl::require(g != nullptr, rcl::Err::InvalidArgument, "null graph");
        rcl::require(u >= 0 && v >= 0 && u < g->g.n() && v < g->g.n(),
                     rcl::Err::InvalidArgument, "vertex out of range");
        return g->g.has_edge(u, v) ? 1 : 0;
    });
}

rcl_graph* rcl_graph_read_file(const char* path) {
    return guarded_ptr<rcl_graph>(
        [&]() { return new rcl_graph{rcl::read_edge_list_file(path)}; });
}

int rcl_graph_write_file(const rcl_graph* g, const char* path) {
    return guarded([&]() {
        rcl::require(g != nullptr, rcl::Err::InvalidArgument, "null graph");
        rcl::write_edge_list_file(g->g, path);
        return RCL_OK;
    });
}

rcl_colouring* rcl_colouring_read_file(const char* path, rcl_graph** host_out) {
    return guarded_ptr<rcl_colouring>([&]() {
        std::ifstream in(path);
        rcl::require(in.good(), rcl::Err::IoError, std::string("cannot open ") + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        auto [host, col] = rcl::read_colouring(ss.str());
        if (host_out) *host_out = new rcl_graph{host};
        return new rcl_colouring{col};
    });
}

int rcl_colouring_write_file(const rcl_graph* host, const rcl_colouring* c, const char* path) {
    return guarded([&]() {
        rcl::require(host && c, rcl::Err::InvalidArgument, "null argument");
        std::ofstream out(path);
        rcl::require(out.good(), rcl::Err::IoError, std::string("cannot open ") + path);
        out << rcl::write_colouring(host->g, c->c);
        return RCL_OK;
    });
}

void rcl_colouring_free(rcl_colouring* c) { delete c; }

int rcl_colouring_is_red(const rcl_colouring* c, int u, int v) {
    return guarded([&]() {
        rcl::require(c != nullptr, rcl::Err::InvalidArgument, "null colouring");
        return c->c.is_red(u, v) ? 1 : 0;
    });
}

rcl_colouring* rcl_apply_strategy(const rcl_graph* g, const char* strategy, int n, double eps,
                                  uint64_t seed) {
    return guarded_ptr<rcl_colouring>([&]() -> rcl_colouring* {
        rcl::require(g && strategy, rcl::Err::InvalidArgument, "null argument");
        std::string st = strategy;
        rcl::Seed s{seed};
        std::optional<rcl::EdgeColouring> col;
        if (st == "random") {
            col = rcl::random_colouring(g->g, s);
        } else if (st == "perturbed-extremal") {
            col = rcl::perturbed_extremal_colouring(g->g, n, eps, s);
        } else if (st == "clique" || st == "clique-odd" || st == "clique-even") {
            bool odd = n % 2 == 1;
            rcl::require(st == "clique" || (st == "clique-odd") == odd,
                         rcl::Err::PreconditionFailed, "strategy parity mismatch");
            int blocks = odd ? 2 * (n - 1) : (n - 1) + (n / 2 - 1);
            int xsize = g->g.n() - blocks;
            rcl::require(xsize >= 0, rcl::Err::PreconditionFailed, "host too small for blocks");
            col = odd ? rcl::odd_lower_bound_colouring(g->g, n, xsize)
                      : rcl::even_lower_bound_colouring(g->g, n, xsize);
        } else {
            rcl::fail(rcl::Err::InvalidArgument, "unknown strategy " + st);
        }
        rcl::require(col.has_value(), rcl::Err::PreconditionFailed,
                     "strategy produced no colouring (construction absent)");
        return new rcl_colouring{*col};
    });
}

int rcl_find_cycle_exact(const rcl_graph* g, int ell, long long budget, int* cycle_out,
                         int cycle_cap) {
    return guarded([&]() {
        rcl::require(g != nullptr, rcl::Err::InvalidArgument, "null graph");
        rcl::OracleGuard guard;
        if (budget > 0) guard.budget = budget;
        auto c = rcl::find_cycle_exact(g->g, ell, guard);
        if (!c) return 0;
        return fill_cycle(*c, cycle_out, cycle_cap);
    });
}

int rcl_cycle_finder(const rcl_graph* g, int ell, double p, uint64_t seed, int* cycle_out,
                     int cycle_cap) {
    return guarded([&]() {
        rcl::require(g != nullptr, rcl::Err::InvalidArgument, "null graph");
        rcl::CycleFinderParams params;
        params.p = p;
        auto c = rcl::cycle_finder(g->g, g->g, ell, params, rcl::Seed{seed});
        if (!c) return 0;
        return fill_cycle(*c, cycle_out, cycle_cap);
    });
}

int rcl_ramsey_number_cycle(int n) {
    return guarded([&]() { return rcl::ramsey_number_cycle(n); });
}

int rcl_cmd_verify_lb(int n_lo, int n_hi, const char* out_path) {
    try {
        if (out_path && *out_path) {
            std::ofstream out(out_path);
            rcl::require(out.good(), rcl::Err::IoError,
                         std::string("cannot open ") + out_path);
            return rcl::cmd_verify_lower_bound(n_lo, n_hi, out);
        }
        return rcl::cmd_verify_lower_bound(n_lo, n_hi, std::cout);
    } catch (const rcl::Error& e) {
        set_error(e.what());
        std::cerr << e.what() << "\n";
        return exit_code_of(e);
    }
}

int rcl_cmd_sweep(const char* config_path, const char* out_dir, long long budget, int jobs,
                  uint64_t seed, int have_seed) {
    try {
        rcl::ExperimentConfig cfg;
        if (config_path && *config_path) cfg = rcl::parse_config_file(config_path);
        if (budget > 0) cfg.budget = budget;
        if (jobs > 0) cfg.jobs = jobs;
        if (have_seed) cfg.base_seed = seed;
        if (out_dir && *out_dir) cfg.out_dir = out_dir;
        std::string csv_path = output_path(cfg.out_dir.c_str(), "sweep.csv");
        std::ofstream csv(csv_path);
        rcl::require(csv.good(), rcl::Err::IoError, "cannot open " + csv_path);
        int rc = rcl::cmd_threshold_sweep(cfg, csv, std::cerr);
        std::cout << "wrote " << csv_path << "\n";
        return rc;
    } catch (const rcl::Error& e) {
        set_error(e.what());
        std::cerr << e.what() << "\n";
        return exit_code_of(e);
    }
}

int rcl_cmd_boosters(int n, double p, int seeds, const char* out_dir) {
    try {
        std::string csv_path = output_path(out_dir, "boosters.csv");
        std::ofstream csv(csv_path);
        rcl::require(csv.good(), rcl::Err::IoError, "cannot open " + csv_path);
        int rc = rcl::cmd_booster_stats(n, p, seeds, csv, std::cerr);
        std::cout << "wrote " << csv_path << "\n";
        return rc;
    } catch (const rcl::Error& e) {
        set_error(e.what());
        std::cerr << e.what() << "\n";
        return exit_code_of(e);
    }
}

int rcl_cmd_spectrum(int n, double p, uint64_t seed, long long budget, const char* out_path) {
    try {
        if (out_path && *out_path) {
            std::ofstream out(out_path);
            rcl::require(out.good(), rcl::Err::IoError,
                         std::string("cannot open ") + out_path);
            return rcl::cmd_cycle_spectrum(n, p, seed, budget, out);
        }
        return rcl::cmd_cycle_spectrum(n, p, seed, budget, std::cout);
    } catch (const rcl::Error& e) {
        set_error(e.what());
        std::cerr << e.what() << "\n";
        return exit_code_of(e);
    }
}

int rcl_cmd_plot(const char* csv_path, const char* svg_path) {
    try {
        rcl::require(csv_path && svg_path, rcl::Err::InvalidArgument, "null path");
        std::ifstream in(csv_path);
        rcl::require(in.good(), rcl::Err::IoError, std::string("cannot open ") + csv_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        std::ofstream out(svg_path);
        rcl::require(out.good(), rcl::Err::IoError, std::string("cannot open ") + svg_path);
        rcl::emit_svg_plot(ss.str(), out);
        return 0;
    } catch (const rcl::Error& e) {
        set_error(e.what());
        std::cerr << e.what() << "\n";
        return exit_code_of(e);
    }
}

}  // extern "C"
