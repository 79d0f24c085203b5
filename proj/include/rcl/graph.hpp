#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcl/bitset.hpp"
#include "rcl/error.hpp"
#include "rcl/random.hpp"

namespace rcl {

// Simple undirected graph on vertices 0..n-1, adjacency kept as bitset rows.
// Treat instances as immutable once shared; mutation is for construction and
// for locally owned working copies.
class Graph {
public:
    Graph() : n_(0), m_(0) {}
    explicit Graph(int n) : n_(n), m_(0), rows_(n, Bitset(n)) {}

    int n() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return u != v && rows_[u].test(v); }
    void add_edge(int u, int v) {
        require(u >= 0 && v >= 0 && u < n_ && v < n_ && u != v, Err::InvalidArgument,
                "add_edge: bad endpoints");
        if (rows_[u].test(v)) return;
        rows_[u].set(v);
        rows_[v].set(u);
        ++m_;
    }
    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) return;
        rows_[u].reset(v);
        rows_[v].reset(u);
        --m_;
    }

    const Bitset& row(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }
    int min_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }
    std::vector<int> neighbours(int v) const { return rows_[v].to_vector(); }

    // N(S) \ S
    Bitset external_neighbourhood(const Bitset& s) const {
        Bitset nb(n_);
        s.for_each([&](int v) { nb |= rows_[v]; });
        nb.andnot(s);
        return nb;
    }

    // Edges inside a vertex set.
    long long edges_within(const Bitset& s) const {
        long long e = 0;
        s.for_each([&](int v) { e += (rows_[v] & s).count(); });
        return e / 2;
    }
    // Edges between two disjoint vertex sets.
    long long edges_between(const Bitset& a, const Bitset& b) const {
        long long e = 0;
        a.for_each([&](int v) { e += (rows_[v] & b).count(); });
        return e;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v = rows_[u].next(u + 1); v >= 0; v = rows_[u].next(v + 1))
                es.push_back({u, v});
        return es;
    }

    // Induced subgraph on `keep`; old->new index map returned through `map`
    // (entries -1 for dropped vertices).
    Graph induced(const Bitset& keep, std::vector<int>* map = nullptr) const {
        std::vector<int> idx(n_, -1);
        int k = 0;
        keep.for_each([&](int v) { idx[v] = k++; });
        Graph h(k);
        keep.for_each([&](int v) {
            (rows_[v] & keep).for_each([&](int w) {
                if (v < w) h.add_edge(idx[v], idx[w]);
            });
        });
        if (map) *map = idx;
        return h;
    }

    bool is_subgraph_of(const Graph& g) const {
        if (n_ != g.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (!rows_[v].is_subset_of(g.rows_[v])) return false;
        return true;
    }

    bool connected_within(const Bitset& verts) const;
    // Connected components restricted to `verts`.
    std::vector<Bitset> components(const Bitset& verts) const;

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }
    static Graph cycle_graph(int n) {
        Graph g(n);
        for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
        return g;
    }
    static Graph path_graph(int n) {
        Graph g(n);
        for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        return g;
    }
    static Graph petersen();
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
        Graph g(n);
        for (auto [u, v] : es) g.add_edge(u, v);
        return g;
    }

private:
    int n_;
    long long m_;
    std::vector<Bitset> rows_;
};

// One uniform draw per vertex pair in fixed (u<v) order, so the same seed at
// p1 <= p2 yields nested edge sets (monotone coupling).
Graph sample_gnp(int n, double p, Seed seed);

// Bipartite host: a Graph plus a part assignment. All edges must cross.
struct BipartiteGraph {
    Graph g;
    Bitset part2;  // membership of V2

    BipartiteGraph() = default;
    BipartiteGraph(Graph g_, Bitset part2_);

    int n() const { return g.n(); }
    Bitset part1() const { return part2.complement(); }
    bool in_v2(int v) const { return part2.test(v); }

    static BipartiteGraph sample(int n1, int n2, double p, Seed seed);
    static BipartiteGraph complete(int n1, int n2);
};

struct Path {
    std::vector<int> verts;

    int length() const { return (int)verts.size() - 1; }  // edge count
    void validate(const Graph& g) const;
};

struct Cycle {
    std::vector<int> verts;  // closing edge back() -> front() implied

    int length() const { return (int)verts.size(); }
    void validate(const Graph& g) const;
};

// --- edge-list serialization ---------------------------------------------
// Header line "n <count>", then one "u v" line per edge.

std::string write_edge_list(const Graph& g);
Graph read_edge_list(const std::string& text);
void write_edge_list_file(const Graph& g, const std::string& path);
Graph read_edge_list_file(const std::string& path);

enum class Colour : uint8_t { Red = 0, Blue = 1 };

// Total red/blue edge colouring of a host graph (host passed alongside).
class EdgeColouring {
public:
    EdgeColouring() : n_(0) {}
    explicit EdgeColouring(int n) : n_(n), red_(n, Bitset(n)) {}

    int n() const { return n_; }
    bool is_red(int u, int v) const { return red_[u].test(v); }
    Colour colour(int u, int v) const { return is_red(u, v) ? Colour::Red : Colour::Blue; }
    void set(int u, int v, Colour c) {
        if (c == Colour::Red) {
            red_[u].set(v);
            red_[v].set(u);
        } else {
            red_[u].reset(v);
            red_[v].reset(u);
        }
    }
    const Bitset& red_row(int v) const { return red_[v]; }

private:
    int n_;
    std::vector<Bitset> red_;
};

Graph monochromatic_subgraph(const Graph& host, const EdgeColouring& col, Colour c);

// Colouring serialization: header, then "u v R" / "u v B" lines.
std::string write_colouring(const Graph& host, const EdgeColouring& col);
std::pair<Graph, EdgeColouring> read_colouring(const std::string& text);

}  // namespace rcl
