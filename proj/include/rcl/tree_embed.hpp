#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcl/expander.hpp"
#include "rcl/graph.hpp"

namespace rcl {

// Rooted tree on vertices 0..n-1. Bipartition classes are depth parities
// from the root.
struct TreeSpec {
    int n = 0;
    int root = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<std::vector<int>> adjacency() const;
    // BFS order from `from` (defaults to root); parents alongside
    void traversal(std::vector<int>& order, std::vector<int>& parent, int from = -1) const;
    std::vector<int> depths(int from = -1) const;
    // class of each vertex: depth parity from root
    std::vector<int> classes() const { return parities(depths()); }
    int max_degree() const;
    int class_size(int cls) const;
    void validate() const;

    static TreeSpec single();
    static TreeSpec path(int s);           // s vertices
    static TreeSpec binary(int h);         // full binary tree of depth h
    static TreeSpec star(int leaves);
    // path of `path_edges` edges rooted at one end, full binary tree of depth
    // h hanging off the far end (broom for the connecting-path lemma)
    static TreeSpec broom(int path_edges, int h, std::vector<int>* leaves_out = nullptr);

    std::string serialize() const;  // parent-array text with class labels
    static TreeSpec deserialize(const std::string& text);

private:
    static std::vector<int> parities(std::vector<int> d) {
        for (auto& x : d) x &= 1;
        return d;
    }
};

// (h,s)-double-broom: two depth-h binary trees whose roots are identified
// with the endpoints of a path on s vertices; leaf-to-leaf path has exactly
// 2h+s vertices.
struct DoubleBroomSpec {
    TreeSpec tree;
    int h = 0, s = 2;
    std::vector<int> end_a, end_b;  // leaf sets (tree indices)
    int path_a = 0, path_b = 0;     // path endpoints (= broom roots)
};

DoubleBroomSpec build_double_broom(int h, int s);

// Join through an edge between a B1-leaf and an A2-leaf; result is an
// (h, s1+s2+2h)-double-broom with ends (A1, B2). Indices of b2 are shifted
// by b1.tree.n in the result.
DoubleBroomSpec join_brooms(const DoubleBroomSpec& b1, const DoubleBroomSpec& b2,
                            int b1_leaf, int b2_leaf);

struct GoodWalk {
    std::vector<int> verts;
};

// Walk from u to v with vertex-count parity `even`, each vertex used at most
// three times. Throws when the parity is unachievable (bipartite component).
GoodWalk good_walk(const Graph& h, int u, int v, bool even);

// --- extendability ---------------------------------------------------------

class ExtendableEmbedding {
public:
    ExtendableEmbedding(const BipartiteGraph& host, int d, int m)
        : host_(&host), d_(d), m_(m), image_(host.n()), deg_(host.n(), 0) {}

    const BipartiteGraph& host() const { return *host_; }
    int d() const { return d_; }
    int m() const { return m_; }
    const Bitset& image() const { return image_; }
    int deg_in_s(int v) const { return deg_[v]; }
    const std::vector<std::pair<int, int>>& s_edges() const { return edges_; }

    void add_root(int v);
    void add_leaf(int s, int y);  // host edge required; y outside image

private:
    const BipartiteGraph* host_;
    int d_, m_;
    Bitset image_;
    std::vector<int> deg_;
    std::vector<std::pair<int, int>> edges_;
};

// D(X;S) = |N(X) \ V(S)| - (d-1)|X| + sum_{x in X ∩ V(S)} (d_S(x) - 1)
long long deficiency(const ExtendableEmbedding& emb, const Bitset& x);

enum class RecheckMode { Exact, Sampled, Auto };

// Definition check: min deficiency >= 0 over U within one part, |U| <= 2m.
// Exact mode prunes to vertices with few unused neighbours (sets containing
// any vertex with >= 2dm unused neighbours pass automatically).
PropertyWitness is_bipartite_extendable(const ExtendableEmbedding& emb,
                                        RecheckMode mode = RecheckMode::Auto,
                                        CheckBudget budget = {}, Seed seed = Seed{1});

// Least-index y in N(s) outside the image keeping the embedding extendable.
int extend_by_leaf(const BipartiteGraph& g, ExtendableEmbedding& emb, int s,
                   CheckBudget budget = {}, RecheckMode mode = RecheckMode::Auto);

struct TreeEmbedding {
    ExtendableEmbedding emb;
    std::vector<int> image_of;  // tree index -> host vertex
};

// Leaf-by-leaf embedding of T with t mapped to s, meeting the prior image
// only at s. BFS traversal order from t, ascending index tie-break.
TreeEmbedding embed_tree_bipartite(const BipartiteGraph& g, ExtendableEmbedding emb,
                                   const TreeSpec& t, int s, int t_root,
                                   CheckBudget budget = {},
                                   RecheckMode mode = RecheckMode::Auto);

// Randomized greedy embedding into a plain host, restricted to `allowed`.
// Used where no extendability bookkeeping is wanted (short-regime brooms).
std::optional<std::vector<int>> embed_tree_greedy(const Graph& g, const TreeSpec& t,
                                                  int root_image, const Bitset& allowed,
                                                  Rng& rng);

// Section-6 connecting path: (s1,s2)-path of length exactly n-2 (n odd) built
// from two embedded brooms joined at a leaf edge.
Path connecting_path(const BipartiteGraph& g, int s1, int s2, int n, int d, int m,
                     Seed seed = Seed{1}, int retries = 8);

}  // namespace rcl
