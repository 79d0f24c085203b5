#include "rcl/colouring.hpp"

#include <algorithm>
#include <numeric>

namespace rcl {

namespace {

// Find X of the given size whose external neighbourhood fits in `room`
// vertices, greedily then exhaustively for small graphs. Returns nullopt if
// none found.
std::optional<Bitset> find_confined_set(const Graph& g, int xsize, int room) {
    int nv = g.n();
    if (xsize == 0) return Bitset(nv);
    auto fits = [&](const Bitset& x) {
        return g.external_neighbourhood(x).count() <= room;
    };
    // greedy seed: ascending degree
    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    Bitset x(nv);
    for (int i = 0; i < xsize; ++i) x.set(order[i]);
    // local swaps: replace a member by an outsider whenever that shrinks N(X)
    bool improved = true;
    while (improved && !fits(x)) {
        improved = false;
        int cur = g.external_neighbourhood(x).count();
        for (int out = x.next(0); out >= 0 && !improved; out = x.next(out + 1)) {
            for (int in = 0; in < nv && !improved; ++in) {
                if (x.test(in)) continue;
                Bitset cand = x;
                cand.reset(out);
                cand.set(in);
                if (g.external_neighbourhood(cand).count() < cur) {
                    x = cand;
                    improved = true;
                }
            }
        }
    }
    if (fits(x)) return x;
    if (nv <= 20) {  // exhaustive fallback
        std::vector<int> idx(xsize);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            Bitset cand = Bitset::of(nv, idx);
            if (fits(cand)) return cand;
            int i = xsize - 1;
            while (i >= 0 && idx[i] == nv - xsize + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < xsize; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

EdgeColouring colour_blocks(const Graph& g, const std::vector<int>& block) {
    EdgeColouring col(g.n());
    for (auto [u, v] : g.edges())
        col.set(u, v, block[u] == block[v] ? Colour::Red : Colour::Blue);
    return col;
}

}  // namespace

std::optional<EdgeColouring> odd_lower_bound_colouring(const Graph& g, int n, int xsize) {
    require(n >= 3 && n % 2 == 1, Err::InvalidArgument, "odd_lower_bound_colouring: n must be odd >= 3");
    require(xsize >= 0 && g.n() == 2 * (n - 1) + xsize, Err::InvalidArgument,
            "odd_lower_bound_colouring: |V| must equal 2(n-1)+xsize");
    auto x = find_confined_set(g, xsize, n - 1);
    if (!x) return std::nullopt;
    Bitset nx = g.external_neighbourhood(*x);
    // V1 = N(X) padded to n-1; V2 = rest
    std::vector<int> block(g.n(), 2);  // 2 = V2
    x->for_each([&](int v) { block[v] = 0; });  // 0 = X
    int v1 = 0;
    nx.for_each([&](int v) {
        block[v] = 1;
        ++v1;
    });
    for (int v = 0; v < g.n() && v1 < n - 1; ++v) {
        if (block[v] == 2) {
            block[v] = 1;
            ++v1;
        }
    }
    return colour_blocks(g, block);
}

std::optional<EdgeColouring> even_lower_bound_colouring(const Graph& g, int n, int xsize) {
    require(n >= 6 && n % 2 == 0, Err::InvalidArgument, "even_lower_bound_colouring: n must be even >= 6");
    require(xsize >= 0 && g.n() == (n - 1) + (n / 2 - 1) + xsize, Err::InvalidArgument,
            "even_lower_bound_colouring: |V| must equal (n-1)+(n/2-1)+xsize");
    auto x = find_confined_set(g, xsize, n / 2 - 1);
    if (!x) return std::nullopt;
    Bitset nx = g.external_neighbourhood(*x);
    // V2 = N(X) padded to n/2-1; V1 = rest. Blue edges are exactly the
    // (V1 u X, V2) crossing ones; X has no V1 edges by choice of X.
    std::vector<int> v2flag(g.n(), 0);
    int v2 = 0;
    nx.for_each([&](int v) {
        v2flag[v] = 1;
        ++v2;
    });
    for (int v = 0; v < g.n() && v2 < n / 2 - 1; ++v) {
        if (!v2flag[v] && !x->test(v)) {
            v2flag[v] = 1;
            ++v2;
        }
    }
    EdgeColouring col(g.n());
    for (auto [u, v] : g.edges())
        col.set(u, v, v2flag[u] != v2flag[v] ? Colour::Blue : Colour::Red);
    return col;
}

bool check_extremal_partition(const Graph& g, const EdgeColouring& col, double alpha, bool odd,
                              const Bitset& x, const Bitset& y) {
    int nv = g.n();
    if ((x & y).any() || (x | y).count() != nv) return false;
    double xs = x.count(), ys = y.count();
    if (odd) {
        if (xs < (1 - alpha) * nv / 2.0 || ys < (1 - alpha) * nv / 2.0) return false;
    } else {
        if (xs < (1 - alpha) * 2.0 * nv / 3.0 || ys < (1 - alpha) * nv / 3.0) return false;
    }
    Graph red = monochromatic_subgraph(g, col, Colour::Red);
    Graph blue = monochromatic_subgraph(g, col, Colour::Blue);
    long long ex = g.edges_within(x), ey = g.edges_within(y), exy = g.edges_between(x, y);
    long long rx = red.edges_within(x), ry = red.edges_within(y), bxy = blue.edges_between(x, y);
    if (rx < (1 - alpha) * ex) return false;
    if (odd && ry < (1 - alpha) * ey) return false;
    if (bxy < (1 - alpha) * exy) return false;
    return true;
}

namespace {

// Margin used by the local search: minimum slack over all the definition's
// inequalities (>= 0 iff the partition is a witness).
double partition_margin(const Graph& g, const Graph& red, const Graph& blue, double alpha,
                        bool odd, const Bitset& x, const Bitset& y) {
    int nv = g.n();
    double m = 1e18;
    auto upd = [&](double have, double need) { m = std::min(m, have - need); };
    upd(x.count(), odd ? (1 - alpha) * nv / 2.0 : (1 - alpha) * 2.0 * nv / 3.0);
    upd(y.count(), odd ? (1 - alpha) * nv / 2.0 : (1 - alpha) * nv / 3.0);
    upd((double)red.edges_within(x), (1 - alpha) * g.edges_within(x));
    if (odd) upd((double)red.edges_within(y), (1 - alpha) * g.edges_within(y));
    upd((double)blue.edges_between(x, y), (1 - alpha) * g.edges_between(x, y));
    return m;
}

}  // namespace

std::optional<ExtremalPartition> is_alpha_extremal(const Graph& g, const EdgeColouring& col,
                                                   double alpha, bool odd, Seed seed) {
    int nv = g.n();
    require(alpha >= 0.0 && alpha <= 1.0, Err::InvalidArgument, "is_alpha_extremal: bad alpha");
    Graph red = monochromatic_subgraph(g, col, Colour::Red);
    Graph blue = monochromatic_subgraph(g, col, Colour::Blue);
    if (nv <= 16) {
        for (uint32_t m = 0; m < (1u << nv); ++m) {
            Bitset x(nv);
            for (int v = 0; v < nv; ++v)
                if (m >> v & 1) x.set(v);
            Bitset y = x.complement();
            if (check_extremal_partition(g, col, alpha, odd, x, y))
                return ExtremalPartition{x, y, odd, alpha, true};
        }
        return std::nullopt;
    }
    // local search with restarts: flip single vertices to increase the margin
    Rng rng(seed);
    for (int restart = 0; restart < 20; ++restart) {
        Bitset x(nv);
        for (int v = 0; v < nv; ++v)
            if (rng.uniform() < (odd ? 0.5 : 2.0 / 3.0)) x.set(v);
        Bitset y = x.complement();
        double cur = partition_margin(g, red, blue, alpha, odd, x, y);
        bool improved = true;
        while (improved && cur < 0) {
            improved = false;
            for (int v = 0; v < nv; ++v) {
                Bitset x2 = x, y2 = y;
                if (x.test(v)) {
                    x2.reset(v);
                    y2.set(v);
                } else {
                    x2.set(v);
                    y2.reset(v);
                }
                double cand = partition_margin(g, red, blue, alpha, odd, x2, y2);
                if (cand > cur) {
                    x = x2;
                    y = y2;
                    cur = cand;
                    improved = true;
                }
            }
        }
        if (cur >= 0) return ExtremalPartition{x, y, odd, alpha, false};
    }
    return std::nullopt;
}

EdgeColouring random_colouring(const Graph& g, Seed seed) {
    Rng rng(seed);
    EdgeColouring col(g.n());
    for (auto [u, v] : g.edges())
        col.set(u, v, rng.uniform() < 0.5 ? Colour::Red : Colour::Blue);
    return col;
}

std::optional<EdgeColouring> perturbed_extremal_colouring(const Graph& g, int n, double eps,
                                                          Seed seed) {
    std::optional<EdgeColouring> base;
    int xsize;
    if (n % 2 == 1) {
        xsize = g.n() - 2 * (n - 1);
        if (xsize < 0) return std::nullopt;
        base = odd_lower_bound_colouring(g, n, xsize);
    } else {
        xsize = g.n() - (n - 1) - (n / 2 - 1);
        if (xsize < 0) return std::nullopt;
        base = even_lower_bound_colouring(g, n, xsize);
    }
    if (!base) return std::nullopt;
    Rng rng(seed);
    for (auto [u, v] : g.edges())
        if (rng.uniform() < eps)
            base->set(u, v, base->is_red(u, v) ? Colour::Blue : Colour::Red);
    return base;
}

}  // namespace rcl
