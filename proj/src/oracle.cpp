#include "rcl/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <map>
#include <queue>

namespace rcl {

int ramsey_number_cycle(int n) {
    require(n >= 3, Err::InvalidArgument, "ramsey_number_cycle: n >= 3 required");
    if (n == 3 || n == 4) return 6;
    if (n % 2 == 1) return 2 * n - 1;
    return 3 * n / 2 - 1;
}

namespace {

// BFS distances within one vertex set; -1 unreachable.
std::vector<int> bfs_dist(const Graph& g, int src, const Bitset& verts) {
    std::vector<int> dist(g.n(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        (g.row(v) & verts).for_each([&](int w) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        });
    }
    return dist;
}

bool component_bipartite(const Graph& g, const Bitset& comp, std::vector<int>& side) {
    int s = comp.next(0);
    side.assign(g.n(), -1);
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    bool ok = true;
    while (!q.empty() && ok) {
        int v = q.front();
        q.pop();
        (g.row(v) & comp).for_each([&](int w) {
            if (side[w] < 0) {
                side[w] = side[v] ^ 1;
                q.push(w);
            } else if (side[w] == side[v]) {
                ok = false;
            }
        });
    }
    return ok;
}

struct CycleDfs {
    const Graph& g;
    int ell;
    long long budget;
    std::vector<int> dist;
    bool parity_prune = false;
    Bitset allowed;
    Bitset onpath;
    std::vector<int> stack;
    int start = 0;

    CycleDfs(const Graph& g_, int ell_, long long b) : g(g_), ell(ell_), budget(b), allowed(g_.n()), onpath(g_.n()) {}

    bool run(int s, const Bitset& comp, bool bip, const std::vector<int>& side) {
        start = s;
        allowed = comp;
        // canonical form: s is the least vertex of the cycle
        for (int v = 0; v < s; ++v) allowed.reset(v);
        if (!allowed.test(s)) return false;
        dist = bfs_dist(g, s, allowed);
        parity_prune = bip;
        if (bip && (ell % 2) == 1) return false;
        (void)side;
        onpath.clear();
        onpath.set(s);
        stack = {s};
        bool found = dfs(s, ell - 1);
        onpath.reset(s);
        return found;
    }

    bool dfs(int v, int remaining) {
        if (--budget < 0) fail(Err::InstanceTooLarge, "find_cycle_exact: budget exceeded");
        if (remaining == 0) return g.has_edge(v, start);
        bool found = false;
        (g.row(v) & allowed).for_each([&](int w) {
            if (found || onpath.test(w)) return;
            if (dist[w] < 0 || dist[w] > remaining) return;
            if (parity_prune && ((remaining - dist[w]) & 1)) return;
            onpath.set(w);
            stack.push_back(w);
            if (dfs(w, remaining - 1)) {
                found = true;
            } else {
                stack.pop_back();
                onpath.reset(w);
            }
        });
        return found;
    }
};

std::optional<Cycle> dfs_cycle_search(const Graph& g, int ell, long long budget) {
    CycleDfs d(g, ell, budget);
    auto comps = g.components(Bitset::full(g.n()));
    for (const auto& comp : comps) {
        if (comp.count() < ell) continue;
        std::vector<int> side;
        bool bip = component_bipartite(g, comp, side);
        for (int s = comp.next(0); s >= 0; s = comp.next(s + 1)) {
            if (d.run(s, comp, bip, side)) return Cycle{d.stack};
        }
    }
    return std::nullopt;
}

// Meet-in-the-middle: glue two half-paths sharing only the canonical least
// start vertex, then check the joining edge.
std::optional<Cycle> mitm_cycle_search(const Graph& g, int ell, long long budget) {
    int n = g.n();
    int h1 = ell / 2, h2 = ell - h1;  // edge counts from start along each arm
    for (int s = 0; s < n; ++s) {
        Bitset allowed = Bitset::full(n);
        for (int v = 0; v < s; ++v) allowed.reset(v);
        auto dist = bfs_dist(g, s, allowed);
        // enumerate simple paths with exactly k edges from s
        auto enumerate = [&](int k) {
            std::vector<std::pair<Bitset, std::vector<int>>> out;
            std::vector<int> stack = {s};
            Bitset onpath(n);
            onpath.set(s);
            auto rec = [&](auto&& self, int v, int left) -> void {
                if (--budget < 0) fail(Err::InstanceTooLarge, "find_cycle_exact: budget exceeded");
                if (left == 0) {
                    out.push_back({onpath, stack});
                    return;
                }
                (g.row(v) & allowed).for_each([&](int w) {
                    if (onpath.test(w) || dist[w] < 0 || dist[w] > left) return;
                    onpath.set(w);
                    stack.push_back(w);
                    self(self, w, left - 1);
                    stack.pop_back();
                    onpath.reset(w);
                });
            };
            rec(rec, s, k);
            return out;
        };
        auto half1 = enumerate(h1);
        if (half1.empty()) continue;
        std::vector<std::vector<int>> by_end(n);
        for (size_t i = 0; i < half1.size(); ++i) by_end[half1[i].second.back()].push_back((int)i);
        auto half2 = enumerate(h2);
        for (auto& [mask2, p2] : half2) {
            int y = p2.back();
            for (int x = g.row(y).next(0); x >= 0; x = g.row(y).next(x + 1)) {
                if (mask2.test(x) && x != s) continue;
                for (int i : by_end[x]) {
                    if (--budget < 0) fail(Err::InstanceTooLarge, "find_cycle_exact: budget exceeded");
                    auto& [mask1, p1] = half1[i];
                    Bitset inter = mask1 & mask2;
                    if (inter.count() != 1) continue;  // share only s
                    // cycle: p1 forward (s..x), then p2 reversed (y..back to s's successor)
                    std::vector<int> cyc = p1;
                    for (int j = (int)p2.size() - 1; j >= 1; --j) cyc.push_back(p2[j]);
                    return Cycle{cyc};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Cycle> find_cycle_exact(const Graph& g, int ell, OracleGuard guard) {
    require(ell >= 3, Err::InvalidArgument, "find_cycle_exact: ell >= 3 required");
    if (ell > g.n()) return std::nullopt;
    std::optional<Cycle> res;
    if (g.n() <= guard.max_n) {
        res = dfs_cycle_search(g, ell, guard.budget);
    } else if (ell <= 12) {
        res = dfs_cycle_search(g, ell, guard.budget);
    } else if (ell <= guard.max_len) {
        res = mitm_cycle_search(g, ell, guard.budget);
    } else {
        fail(Err::InstanceTooLarge, "find_cycle_exact: instance beyond exact guard");
    }
    if (res) res->validate(g);
    return res;
}

namespace {

void check_dp_size(const Graph& g, int lim, const char* who) {
    require(g.n() >= 1 && g.n() <= lim, Err::InstanceTooLarge, std::string(who) + ": n out of range for subset DP");
}

// dp[mask] = bitset of endpoints v such that some simple path spans mask and
// ends at v (unanchored).
std::vector<uint32_t> path_dp(const Graph& g) {
    int n = g.n();
    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    std::vector<uint32_t> dp(size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) dp[size_t{1} << v] = 1u << v;
    for (size_t mask = 1; mask < dp.size(); ++mask) {
        uint32_t ends = dp[mask];
        while (ends) {
            int v = std::countr_zero(ends);
            ends &= ends - 1;
            uint32_t ext = adj[v] & ~uint32_t(mask);
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (size_t{1} << w)] |= 1u << w;
            }
        }
    }
    return dp;
}

// anchored at a: dp over masks containing a, endpoints of paths starting at a
std::vector<uint32_t> path_dp_anchored(const Graph& g, int a) {
    int n = g.n();
    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    std::vector<uint32_t> dp(size_t{1} << n, 0);
    dp[size_t{1} << a] = 1u << a;
    for (size_t mask = 1; mask < dp.size(); ++mask) {
        if (!(mask >> a & 1)) continue;
        uint32_t ends = dp[mask];
        while (ends) {
            int v = std::countr_zero(ends);
            ends &= ends - 1;
            uint32_t ext = adj[v] & ~uint32_t(mask);
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (size_t{1} << w)] |= 1u << w;
            }
        }
    }
    return dp;
}

}  // namespace

int longest_path_length_exact(const Graph& g) {
    check_dp_size(g, 20, "longest_path_length_exact");
    auto dp = path_dp(g);
    int best = 0;
    for (size_t mask = 1; mask < dp.size(); ++mask)
        if (dp[mask]) best = std::max(best, std::popcount(mask));
    return best - 1;
}

Path longest_path_exact(const Graph& g) {
    check_dp_size(g, 20, "longest_path_exact");
    auto dp = path_dp(g);
    size_t best_mask = 0;
    int best = 0, best_end = -1;
    for (size_t mask = 1; mask < dp.size(); ++mask) {
        if (dp[mask] && std::popcount(mask) > best) {
            best = std::popcount(mask);
            best_mask = mask;
            best_end = std::countr_zero(dp[mask]);
        }
    }
    // backtrack
    std::vector<int> rev;
    size_t mask = best_mask;
    int v = best_end;
    while (true) {
        rev.push_back(v);
        size_t pm = mask & ~(size_t{1} << v);
        if (!pm) break;
        int u = -1;
        uint32_t cand = dp[pm];
        while (cand) {
            int c = std::countr_zero(cand);
            cand &= cand - 1;
            if (g.has_edge(c, v)) {
                u = c;
                break;
            }
        }
        require(u >= 0, Err::StageFailure, "longest_path_exact: backtrack failed");
        mask = pm;
        v = u;
    }
    std::reverse(rev.begin(), rev.end());
    Path p{rev};
    p.validate(g);
    return p;
}

bool hamiltonian_exact(const Graph& g) {
    check_dp_size(g, 20, "hamiltonian_exact");
    if (g.n() <= 2) return false;
    auto dp = path_dp_anchored(g, 0);
    size_t full = (size_t{1} << g.n()) - 1;
    uint32_t adj0 = 0;
    for (int w : g.neighbours(0)) adj0 |= 1u << w;
    return (dp[full] & adj0) != 0;
}

bool hamilton_path_exact(const Graph& g, int u, int v) {
    check_dp_size(g, 20, "hamilton_path_exact");
    auto dp = path_dp_anchored(g, u);
    size_t full = (size_t{1} << g.n()) - 1;
    return (dp[full] >> v) & 1;
}

int longest_cycle_length_exact(const Graph& g) {
    check_dp_size(g, 20, "longest_cycle_length_exact");
    int n = g.n(), best = 0;
    for (int s = 0; s < n; ++s) {
        // min-vertex canonical start
        Bitset keep(n);
        for (int v = s; v < n; ++v) keep.set(v);
        std::vector<int> map;
        Graph h = g.induced(keep, &map);
        if (h.n() < 3) break;
        auto dp = path_dp_anchored(h, map[s]);
        uint32_t adjs = 0;
        for (int w : h.neighbours(map[s])) adjs |= 1u << w;
        for (size_t mask = 1; mask < dp.size(); ++mask) {
            int sz = std::popcount(mask);
            if (sz < 3 || sz <= best) continue;
            if (dp[mask] & adjs) best = sz;
        }
    }
    return best;
}

namespace {

// f_v[mask] := max size of a submask of mask carrying a path with endpoint v
std::vector<std::vector<uint8_t>> best_sub_path(const Graph& g, const std::vector<uint32_t>& dp) {
    int n = g.n();
    std::vector<std::vector<uint8_t>> f(n, std::vector<uint8_t>(size_t{1} << n, 0));
    for (int v = 0; v < n; ++v) {
        auto& fv = f[v];
        for (size_t mask = 1; mask < fv.size(); ++mask) {
            uint8_t best = (dp[mask] >> v & 1) ? (uint8_t)std::popcount(mask) : 0;
            uint32_t m = (uint32_t)mask;
            while (m) {
                int i = std::countr_zero(m);
                m &= m - 1;
                best = std::max(best, fv[mask & ~(size_t{1} << i)]);
            }
            fv[mask] = best;
        }
    }
    return f;
}

}  // namespace

std::vector<std::pair<int, int>> exact_boosters(const Graph& g) {
    check_dp_size(g, 16, "exact_boosters");
    int n = g.n();
    std::vector<std::pair<int, int>> out;
    if (hamiltonian_exact(g)) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v)) out.push_back({u, v});
        return out;
    }
    auto dp = path_dp(g);
    int lp = 0;
    for (size_t mask = 1; mask < dp.size(); ++mask)
        if (dp[mask]) lp = std::max(lp, std::popcount(mask));
    auto f = best_sub_path(g, dp);
    std::vector<uint32_t> hp(n, 0);  // hp[u] = endpoints of hamilton paths from u
    size_t full = (size_t{1} << n) - 1;
    for (int u = 0; u < n; ++u) hp[u] = path_dp_anchored(g, u)[full];
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (hp[u] >> v & 1) {
                out.push_back({u, v});
                continue;
            }
            int best = 0;
            for (size_t m1 = 1; m1 < dp.size() && best <= lp; ++m1) {
                if (!(dp[m1] >> u & 1)) continue;
                best = std::max(best, std::popcount(m1) + (int)f[v][full & ~m1]);
            }
            if (best > lp) out.push_back({u, v});
        }
    }
    return out;
}

std::vector<std::pair<int, int>> exact_bipartite_boosters(const BipartiteGraph& bg) {
    const Graph& g = bg.g;
    check_dp_size(g, 16, "exact_bipartite_boosters");
    int n = g.n();
    int n2 = bg.part2.count();
    int target = 2 * n2;
    std::vector<std::pair<int, int>> out;
    bool has_target_cycle = target >= 3 && find_cycle_exact(g, target).has_value();
    auto dp = path_dp(g);
    int lp = 0;
    for (size_t mask = 1; mask < dp.size(); ++mask)
        if (dp[mask]) lp = std::max(lp, std::popcount(mask));
    auto f = best_sub_path(g, dp);
    uint32_t v2mask = 0;
    bg.part2.for_each([&](int v) { v2mask |= 1u << v; });
    std::vector<std::vector<uint32_t>> anchored(n);
    for (int u = 0; u < n; ++u) anchored[u] = path_dp_anchored(g, u);
    for (int u = 0; u < n; ++u) {
        if (bg.in_v2(u)) continue;
        for (int v = 0; v < n; ++v) {
            if (!bg.in_v2(v) || g.has_edge(u, v)) continue;
            bool booster = has_target_cycle;
            if (!booster && target >= 3) {
                // u-v path on exactly `target` vertices covering all of V2
                for (size_t mask = 1; mask < dp.size() && !booster; ++mask) {
                    if ((mask & v2mask) != v2mask) continue;
                    if (std::popcount(mask) != target) continue;
                    if (anchored[u][mask] >> v & 1) booster = true;
                }
            }
            if (!booster) {
                int best = 0;
                for (size_t m1 = 1; m1 < dp.size() && best <= lp; ++m1) {
                    if (!(dp[m1] >> u & 1)) continue;
                    best = std::max(best, std::popcount(m1) + (int)f[v][((size_t{1} << n) - 1) & ~m1]);
                }
                booster = best > lp;
            }
            if (booster) out.push_back({u, v});
        }
    }
    return out;
}

}  // namespace rcl
