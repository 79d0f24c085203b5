#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcl/graph.hpp"

namespace rcl {

// Pósa rotation state: a path with fixed endpoint u = path.front(), the
// derived endpoint closure S(P,u), penultimate set T, and a stored derived
// path per endpoint for reconstruction.
struct RotationState {
    const Graph* host = nullptr;
    std::vector<int> path;  // current path; front() is the fixed endpoint
    Bitset s;               // derived endpoints, including the initial v
    Bitset t;               // penultimate vertices of derived paths
    std::vector<std::vector<int>> derived;  // by endpoint; empty if not derived

    int fixed() const { return path.front(); }
    int endpoint() const { return path.back(); }
    const std::vector<int>& path_to(int w) const;  // derived (u,w)-path
};

// Single elementary rotation P - x x^+ + vx around the given pivot.
RotationState elementary_rotation(const RotationState& st, int pivot);

// BFS closure over elementary rotations with u fixed; pivots ascending.
RotationState derived_endpoints(const Graph& g, const Path& p, int u);

// T from the same closure, restricted to V2 of the host.
Bitset penultimate_set(const BipartiteGraph& g, const Path& p, int u);

// Pósa-style search: greedy extension plus rotation closure on both sides,
// multiple starts, deterministic per seed. Sound (never exceeds the true
// longest path), not complete.
Path longest_path_heuristic(const Graph& g, Seed seed);

enum class BoosterMode { Exact, Rotation };

// Booster pairs. Exact mode defers to the oracle (n <= 16 guard there).
// Rotation mode: pairs {u,w}, w in S(P,u), from heuristic longest paths;
// returns {} when a Hamilton cycle is detected (vacuous-case convention).
std::vector<std::pair<int, int>> enumerate_boosters(const Graph& g, BoosterMode mode,
                                                    Seed seed = Seed{1});

// Bipartite boosters {u,w}, u a longest-V1-path endpoint, w in T; {} when a
// spanning-V2 cycle is detected.
std::vector<std::pair<int, int>> enumerate_bipartite_boosters(const BipartiteGraph& g,
                                                              Seed seed = Seed{1});

struct SparsifyParams {
    double eta = 0.5;
    double delta = 0.25;  // keep rate is 2*delta
    double c = 0.01;
    double p = 1.0;  // ambient edge probability of the host model
    int retry_cap = 20;
    int joined_samples = 50;
};

// Lemma-5.4-style sparsification by rejection sampling.
Graph sparsify(const Graph& g, const Bitset& x, const Bitset& y, SparsifyParams params,
               Seed seed);

// Iterated booster addition from the reservoir until the active vertex set
// (vertices of h minus forbidden) carries a Hamilton cycle, or no booster is
// available. Every returned cycle is certified against the reservoir.
std::optional<Cycle> booster_augmentation(const Graph& h, const Graph& reservoir,
                                          const Bitset& forbidden, Seed seed = Seed{1});

struct CycleFinderParams {
    double lambda = 0.5;
    double B = 30.0;
    double C = 100.0;
    double eps = 0.01;
    double b = 0.05;
    double c = 0.01;
    double delta = 0.25;
    double p = 1.0;  // ambient density estimate; <= 0 means estimate from H
    int attempts = 3;
};

using TraceFn = std::function<void(const std::string&)>;

// End-to-end fixed-length cycle finder (short regime: broom embedding +
// joinedness closing edge; long regime: sparsify, remove, augment).
std::optional<Cycle> cycle_finder(const Graph& g, const Graph& h, int ell,
                                  CycleFinderParams params, Seed seed, TraceFn trace = {});

std::optional<Cycle> bipartite_cycle_finder(const BipartiteGraph& g, const BipartiteGraph& h,
                                            int ell, CycleFinderParams params, Seed seed,
                                            TraceFn trace = {});

}  // namespace rcl
