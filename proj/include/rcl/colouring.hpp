#pragma once

#include <optional>

#include "rcl/graph.hpp"

namespace rcl {

// Lower-bound colourings. Odd case: V = V1 u V2 u X with |V1| = |V2| = n-1,
// N(X) inside V1; block-internal edges red, everything else blue. Even case:
// |V1| = n-1, |V2| = n/2-1, N(X) inside V2; blue exactly the (V1 u X, V2)
// crossing edges (V2-internal edges red).
//
// The X search is greedy (ascending degree seed plus local swaps), with an
// exhaustive fallback for |V(G)| <= 20. Returns nullopt when no valid X and
// packing exist.
std::optional<EdgeColouring> odd_lower_bound_colouring(const Graph& g, int n, int xsize);
std::optional<EdgeColouring> even_lower_bound_colouring(const Graph& g, int n, int xsize);

struct ExtremalPartition {
    Bitset x, y;
    bool odd_case = true;
    double alpha = 0.0;
    bool exact = false;  // provenance: exact enumeration vs local search
};

// Witness search for the alpha-extremal structure. Exact over all partitions
// for |V(G)| <= 16, otherwise hill-climbing with restarts (flagged).
std::optional<ExtremalPartition> is_alpha_extremal(const Graph& g, const EdgeColouring& col,
                                                   double alpha, bool odd, Seed seed = Seed{1});

// Direct recheck of the definition for a given partition.
bool check_extremal_partition(const Graph& g, const EdgeColouring& col, double alpha, bool odd,
                              const Bitset& x, const Bitset& y);

// Strategy colourings used by the harness.
EdgeColouring random_colouring(const Graph& g, Seed seed);
// Perturbed lower-bound colouring: flip each edge colour with probability eps.
std::optional<EdgeColouring> perturbed_extremal_colouring(const Graph& g, int n, double eps,
                                                          Seed seed);

}  // namespace rcl
