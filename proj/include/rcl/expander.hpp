#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcl/graph.hpp"

namespace rcl {

// Expansion factor kept rational so |N(S)| >= d|S| never hits float ties.
struct Ratio {
    long long num = 1, den = 1;
    // value * count <= bound ?
    bool times_leq(long long count, long long bound) const { return num * count <= bound * den; }
    double value() const { return (double)num / (double)den; }
    Ratio minus_one() const { return Ratio{num - den, den}; }
};

struct ExpanderParams {
    int m = 1;
    Ratio d{1, 1};
};

struct JoinedParams {
    int m = 1, m2 = 1;
};

enum class Verdict { Holds, Fails, Unknown };
enum class CheckMode { Exact, Sampled };

struct PropertyWitness {
    Verdict verdict = Verdict::Unknown;
    CheckMode mode = CheckMode::Exact;
    std::vector<std::vector<int>> witness;  // violating set(s) when Fails
    std::string note;
};

struct CheckBudget {
    long long subsets = 10'000'000;
    int samples_per_size = 64;
};

// |N(S)| >= d|S| for all S with |S| <= m. Exact enumerates; sampled draws
// random sets plus greedy descent and never claims Holds.
PropertyWitness check_expander(const Graph& g, ExpanderParams params, CheckMode mode,
                               CheckBudget budget = {}, Seed seed = Seed{1});

// every disjoint (m, m2) set pair spans an edge
PropertyWitness check_joined(const Graph& g, JoinedParams params, CheckMode mode,
                             CheckBudget budget = {}, Seed seed = Seed{1});

// Bipartite variants: sets within one part, neighbourhoods in the other.
PropertyWitness check_bipartite_expander(const BipartiteGraph& g, ExpanderParams params,
                                         CheckMode mode, CheckBudget budget = {},
                                         Seed seed = Seed{1});
// m-bipartite-joined: every A in V1, B in V2 with |A| = |B| = m spans an edge.
PropertyWitness check_bipartite_joined(const BipartiteGraph& g, int m, CheckMode mode,
                                       CheckBudget budget = {}, Seed seed = Seed{1});

// parameter improvement: (floor((n-M+1)/(d+1)), d)
ExpanderParams improved_expansion(int n, int m, int M, int k, Ratio d);

// Greedy removal of r vertices keeping G - X a (2k-2, d-1)-expander.
Bitset remove_preserving_expansion(const Graph& g, int k, Ratio d, int r,
                                   CheckBudget budget = {});

// Removal from V2 via a 2r-edge path grown under (d+2, k)-bipartite-
// extendability; G - X rechecked as a (2k, d)-bipartite-expander.
Bitset bipartite_remove_preserving_expansion(const BipartiteGraph& g, int k, int d, int r,
                                             CheckBudget budget = {});

// (eta, p)-uniformity: e(A,B) = (1 +- eta) p|A||B|, e(A) = (1 +- eta) p C(|A|,2)
// over sets of size >= eta * n. Exact for n <= 16, else sampled.
PropertyWitness empirical_uniformity(const Graph& g, double eta, double p,
                                     CheckBudget budget = {}, Seed seed = Seed{1});

}  // namespace rcl
