#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rcl/graph.hpp"

namespace rcl {

// R(C_n): 6 for n in {3,4}; 2n-1 for odd n >= 5; 3n/2 - 1 for even n >= 6.
int ramsey_number_cycle(int n);

struct OracleGuard {
    int max_n = 24;       // DFS search permitted up to this order for any length
    int max_len = 16;     // beyond max_n, only lengths up to this are exact
    long long budget = 50'000'000;  // rough node-expansion budget
};

// Exhaustive search for a cycle of length exactly ell. Returns nullopt when
// the graph provably contains none. Throws InstanceTooLarge past the guard.
std::optional<Cycle> find_cycle_exact(const Graph& g, int ell, OracleGuard guard = {});

// Exact longest path via subset DP; requires n <= 20.
Path longest_path_exact(const Graph& g);
int longest_path_length_exact(const Graph& g);  // edge count

bool hamiltonian_exact(const Graph& g);                    // n <= 20
bool hamilton_path_exact(const Graph& g, int u, int v);    // n <= 20

// All boosters by definition: non-edges {u,v} such that G+uv is Hamiltonian
// or has a strictly longer longest path. Requires n <= 16. For Hamiltonian
// inputs every non-edge qualifies (the definition holds literally).
std::vector<std::pair<int, int>> exact_boosters(const Graph& g);

// Bipartite boosters by definition: crossing non-edges {u,v} such that G+uv
// has a cycle of length 2|V2| or a longer longest path. Requires n <= 16.
std::vector<std::pair<int, int>> exact_bipartite_boosters(const BipartiteGraph& g);

// Longest cycle length (0 if acyclic); subset DP, n <= 20.
int longest_cycle_length_exact(const Graph& g);

}  // namespace rcl
