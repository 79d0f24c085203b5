#pragma once

#include <utility>
#include <vector>

#include "rcl/graph.hpp"

namespace rcl {

// Synthetic blow-up of a reduced graph: one m-cluster per reduced vertex,
// one random bipartite pair per reduced edge. Regularity of the pairs is
// assumed by construction, not verified.
struct Blowup {
    Graph reduced;                // the template graph H
    Graph host;                   // |V(H)| * m vertices
    int m = 0;
    double q = 0.0;    // pair edge probability
    double eps = 0.0;  // regularity parameter the construction targets

    int cluster_of(int host_vertex) const { return host_vertex / m; }
    Bitset cluster(int reduced_vertex) const;
};

Blowup make_blowup(const Graph& h, int m, double q, double eps, Seed seed);

// Cycle of length exactly 2l (or 2l+1 when odd) assembled from per-matching-
// edge double-brooms, connector broom chains along good walks, and (odd case)
// a parity vertex. Throws stagewise errors; the returned cycle is certified
// against the blow-up host.
Cycle cycles_in_blowup(const Graph& h, const std::vector<std::pair<int, int>>& matching,
                       const Blowup& blowup, int ell, bool odd, Seed seed);

}  // namespace rcl
