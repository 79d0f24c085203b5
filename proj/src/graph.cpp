#include "rcl/graph.hpp"

#include <fstream>
#include <sstream>

namespace rcl {

bool Graph::connected_within(const Bitset& verts) const {
    int start = verts.next(0);
    if (start < 0) return true;
    Bitset seen(n_);
    seen.set(start);
    Bitset frontier = seen;
    while (frontier.any()) {
        Bitset next(n_);
        frontier.for_each([&](int v) { next |= rows_[v]; });
        next &= verts;
        next.andnot(seen);
        seen |= next;
        frontier = next;
    }
    return seen == (verts & Bitset::full(n_));
}

std::vector<Bitset> Graph::components(const Bitset& verts) const {
    std::vector<Bitset> comps;
    Bitset left = verts;
    for (int s = left.next(0); s >= 0; s = left.next(0)) {
        Bitset comp(n_);
        comp.set(s);
        Bitset frontier = comp;
        while (frontier.any()) {
            Bitset next(n_);
            frontier.for_each([&](int v) { next |= rows_[v]; });
            next &= verts;
            next.andnot(comp);
            comp |= next;
            frontier = next;
        }
        left.andnot(comp);
        comps.push_back(comp);
    }
    return comps;
}

Graph Graph::petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

Graph sample_gnp(int n, double p, Seed seed) {
    require(n >= 0 && p >= 0.0 && p <= 1.0, Err::InvalidArgument, "sample_gnp: bad n or p");
    Graph g(n);
    Rng rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) g.add_edge(u, v);
    return g;
}

BipartiteGraph::BipartiteGraph(Graph g_, Bitset part2_) : g(std::move(g_)), part2(std::move(part2_)) {
    for (auto [u, v] : g.edges())
        require(part2.test(u) != part2.test(v), Err::InvalidArgument,
                "bipartite graph has a non-crossing edge");
}

BipartiteGraph BipartiteGraph::sample(int n1, int n2, double p, Seed seed) {
    Graph g(n1 + n2);
    Rng rng(seed);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            if (rng.uniform() < p) g.add_edge(u, n1 + v);
    Bitset p2(n1 + n2);
    for (int v = 0; v < n2; ++v) p2.set(n1 + v);
    return BipartiteGraph(std::move(g), std::move(p2));
}

BipartiteGraph BipartiteGraph::complete(int n1, int n2) {
    Graph g(n1 + n2);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) g.add_edge(u, n1 + v);
    Bitset p2(n1 + n2);
    for (int v = 0; v < n2; ++v) p2.set(n1 + v);
    return BipartiteGraph(std::move(g), std::move(p2));
}

void Path::validate(const Graph& g) const {
    require(!verts.empty(), Err::InvalidArgument, "path: empty");
    Bitset seen(g.n());
    for (int v : verts) {
        require(v >= 0 && v < g.n(), Err::InvalidArgument, "path: vertex out of range");
        require(!seen.test(v), Err::InvalidArgument, "path: repeated vertex");
        seen.set(v);
    }
    for (size_t i = 0; i + 1 < verts.size(); ++i)
        require(g.has_edge(verts[i], verts[i + 1]), Err::InvalidArgument, "path: missing edge");
}

void Cycle::validate(const Graph& g) const {
    require(verts.size() >= 3, Err::InvalidArgument, "cycle: fewer than 3 vertices");
    Path{verts}.validate(g);
    require(g.has_edge(verts.back(), verts.front()), Err::InvalidArgument,
            "cycle: missing closing edge");
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.n() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

namespace {

int parse_header(std::istream& is) {
    std::string tag;
    int n;
    if (!(is >> tag >> n) || tag != "n" || n < 0)
        fail(Err::ParseError, "edge list: bad header (expected 'n <count>')");
    return n;
}

}  // namespace

Graph read_edge_list(const std::string& text) {
    std::istringstream is(text);
    Graph g(parse_header(is));
    int u, v;
    while (is >> u >> v) {
        require(u >= 0 && v >= 0 && u < g.n() && v < g.n() && u != v, Err::ParseError,
                "edge list: bad edge");
        g.add_edge(u, v);
    }
    return g;
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream f(path);
    require(f.good(), Err::IoError, "cannot open for writing: " + path);
    f << write_edge_list(g);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    require(f.good(), Err::IoError, "cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return read_edge_list(ss.str());
}

Graph monochromatic_subgraph(const Graph& host, const EdgeColouring& col, Colour c) {
    Graph g(host.n());
    for (auto [u, v] : host.edges())
        if (col.colour(u, v) == c) g.add_edge(u, v);
    return g;
}

std::string write_colouring(const Graph& host, const EdgeColouring& col) {
    std::ostringstream os;
    os << "n " << host.n() << "\n";
    for (auto [u, v] : host.edges())
        os << u << " " << v << " " << (col.is_red(u, v) ? 'R' : 'B') << "\n";
    return os.str();
}

std::pair<Graph, EdgeColouring> read_colouring(const std::string& text) {
    std::istringstream is(text);
    int n = parse_header(is);
    Graph g(n);
    EdgeColouring col(n);
    int u, v;
    char c;
    while (is >> u >> v >> c) {
        require(u >= 0 && v >= 0 && u < n && v < n && u != v && (c == 'R' || c == 'B'),
                Err::ParseError, "colouring: bad line");
        g.add_edge(u, v);
        col.set(u, v, c == 'R' ? Colour::Red : Colour::Blue);
    }
    return {std::move(g), std::move(col)};
}

}  // namespace rcl
