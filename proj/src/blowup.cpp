#include "rcl/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rcl/error.hpp"
#include "rcl/tree_embed.hpp"

namespace rcl {

Bitset Blowup::cluster(int reduced_vertex) const {
    Bitset b(host.n());
    for (int i = 0; i < m; ++i) b.set(reduced_vertex * m + i);
    return b;
}

Blowup make_blowup(const Graph& h, int m, double q, double eps, Seed seed) {
    require(m >= 2 && q > 0 && q <= 1 && eps > 0, Err::InvalidArgument, "make_blowup: bad params");
    Blowup b;
    b.reduced = h;
    b.m = m;
    b.q = q;
    b.eps = eps;
    b.host = Graph(h.n() * m);
    int idx = 0;
    for (auto [u, v] : h.edges()) {
        Rng rng(seed.sub(idx++));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (rng.uniform() < q) b.host.add_edge(u * m + i, v * m + j);
    }
    return b;
}

namespace {

struct BroomImage {
    DoubleBroomSpec spec;
    std::vector<int> img;                 // tree index -> host vertex
    std::vector<int> ends_a, ends_b;      // host images of the two end sets
    int entry = -1, exit = -1;            // chosen host leaves (cycle order)

    // host vertices of the unique tree path entry -> exit
    std::vector<int> spine() const {
        int ta = -1, tb = -1;
        for (size_t i = 0; i < img.size(); ++i) {
            if (img[i] == entry) ta = (int)i;
            if (img[i] == exit) tb = (int)i;
        }
        std::vector<int> order, parent;
        spec.tree.traversal(order, parent, ta);
        std::vector<int> chain;
        for (int v = tb; v >= 0; v = parent[v]) chain.push_back(img[v]);
        std::reverse(chain.begin(), chain.end());  // entry first
        return chain;
    }
};

// Embed an (h,s)-double-broom into the pair (ca, cb) of the blow-up, using
// only vertices outside `used`; end set A lands in cluster ca, B in cb.
BroomImage embed_broom(const Blowup& bw, int h, int s, int ca, int cb, const Bitset& used,
                       Rng& rng, const char* stage) {
    DoubleBroomSpec spec = build_double_broom(h, s);
    Bitset allowed = (bw.cluster(ca) | bw.cluster(cb)).minus(used);
    // class parity decides which cluster must host the root so that the A
    // end set lands in ca
    int root_cluster = spec.tree.classes()[spec.end_a.front()] ==
                               spec.tree.classes()[spec.tree.root]
                           ? ca
                           : cb;
    std::vector<int> roots = (bw.cluster(root_cluster).minus(used)).to_vector();
    require(!roots.empty(), Err::StageFailure,
            std::string("cycles_in_blowup: stage=") + stage + " cluster exhausted");
    rng.shuffle(roots);
    int tries = std::min<int>(12, (int)roots.size());
    for (int t = 0; t < tries; ++t) {
        auto img = embed_tree_greedy(bw.host, spec.tree, roots[t], allowed, rng);
        if (!img) continue;
        BroomImage out;
        out.spec = spec;
        out.img = *img;
        for (int l : spec.end_a) out.ends_a.push_back((*img)[l]);
        for (int l : spec.end_b) out.ends_b.push_back((*img)[l]);
        return out;
    }
    fail(Err::StageFailure, std::string("cycles_in_blowup: stage=") + stage + " embed failed");
}

// host edge between the exit end set of `from` and the entry end set of `to`
bool join(const Graph& host, BroomImage& from, BroomImage& to) {
    for (int b : from.ends_b)
        for (int a : to.ends_a)
            if (host.has_edge(b, a)) {
                from.exit = b;
                to.entry = a;
                return true;
            }
    return false;
}

Cycle attempt_assembly(const Graph& h, const std::vector<std::pair<int, int>>& matching,
                       const Blowup& bw, int ell, bool odd, Seed seed) {
    int k = (int)matching.size();
    int m = bw.m;
    int hh = std::max(1, (int)std::ceil(std::log2(std::max(2.0, bw.eps * m))));
    Rng rng(seed);

    // walks in the reduced graph between consecutive matching edges; the
    // last one carries the parity in the odd case
    std::vector<std::vector<int>> walks(k);
    for (int i = 0; i < k; ++i) {
        int from = matching[i].second, to = matching[(i + 1) % k].first;
        bool even_count = (i < k - 1) || !odd;
        walks[i] = good_walk(h, from, to, even_count).verts;
    }

    // balanced partition of the target into k parts, even except the last
    // one in the odd case (Claim: brooms have the right sizes)
    int target = 2 * ell + (odd ? 1 : 0);
    std::vector<long long> t(k, 0);
    long long base = (target / k) & ~1LL;
    long long rest = target - base * k;
    for (int i = 0; i < k; ++i) t[i] = base;
    int i = 0;
    while (rest >= 2) {
        t[i % k] += 2;
        rest -= 2;
        ++i;
    }
    if (rest == 1) t[k - 1] += 1;

    std::vector<long long> s(k);
    for (int j = 0; j < k; ++j) {
        long long interior = (long long)walks[j].size() - 2;
        long long brooms = (j == k - 1 && odd) ? interior - 1 : interior;  // u takes one slot
        s[j] = t[j] - 2 * hh - (long long)(hh + 1) * brooms - ((j == k - 1 && odd) ? 1 : 0);
    }
    // rebalance so every s_j is a feasible even size >= 2 and fits in its pair
    long long cap = 2LL * (m - ((1 << (hh + 1)) - 2)) - 2 * std::max(1, (int)(bw.eps * m));
    for (int rounds = 0; rounds < 4 * k; ++rounds) {
        int lo = (int)(std::min_element(s.begin(), s.end()) - s.begin());
        int hi = (int)(std::max_element(s.begin(), s.end()) - s.begin());
        if (s[lo] >= 2 && s[hi] <= cap) break;
        require(s[hi] - 2 >= 2 || s[lo] + 2 <= cap, Err::StageFailure,
                "cycles_in_blowup: stage=sizing no feasible broom sizes");
        s[hi] -= 2;
        s[lo] += 2;
    }
    for (int j = 0; j < k; ++j)
        require(s[j] >= 2 && s[j] % 2 == 0 && s[j] <= cap, Err::StageFailure,
                "cycles_in_blowup: stage=sizing s_" + std::to_string(j) + "=" +
                    std::to_string(s[j]));

    Bitset used(bw.host.n());
    auto mark = [&](const BroomImage& b) {
        for (int v : b.img) used.set(v);
    };

    // matching brooms P_i in the pairs (X_i, Y_i)
    std::vector<BroomImage> matching_brooms;
    for (int j = 0; j < k; ++j) {
        matching_brooms.push_back(embed_broom(bw, hh, (int)s[j], matching[j].first,
                                              matching[j].second, used, rng, "matching-broom"));
        mark(matching_brooms.back());
    }

    // connector chains along the walks; cyclic broom order with the parity
    // vertex u spliced in before returning to P_1 in the odd case
    std::vector<BroomImage> order;
    int reserve = std::max(1, (int)std::ceil(10 * bw.eps * m));
    int u_vertex = -1;
    std::vector<int> u_cluster_pool;
    for (int j = 0; j < k; ++j) {
        order.push_back(matching_brooms[j]);
        const auto& w = walks[j];
        int interior = (int)w.size() - 2;
        int nbrooms = ((j == k - 1 && odd) ? interior - 1 : interior) / 2;
        for (int b = 0; b < nbrooms; ++b) {
            int ca = w[1 + 2 * b], cb = w[2 + 2 * b];
            // reserved subsets: cap the allowed portion of each cluster
            Bitset block = used;
            auto cap_cluster = [&](int c) {
                auto freev = (bw.cluster(c).minus(used)).to_vector();
                rng.shuffle(freev);
                for (int z = reserve; z < (int)freev.size(); ++z) block.set(freev[z]);
            };
            if ((int)(bw.cluster(ca).minus(used)).count() > reserve) cap_cluster(ca);
            if ((int)(bw.cluster(cb).minus(used)).count() > reserve) cap_cluster(cb);
            order.push_back(embed_broom(bw, hh, 2, ca, cb, block, rng, "connector-broom"));
            mark(order.back());
        }
        if (j == k - 1 && odd) {
            int cu = w[(int)w.size() - 2];  // last interior cluster hosts u
            u_cluster_pool = (bw.cluster(cu).minus(used)).to_vector();
            rng.shuffle(u_cluster_pool);
        }
    }

    // joins between consecutive brooms (Fact: e(B_i, A_{i+1}) > 0)
    int nb = (int)order.size();
    for (int j = 0; j + 1 < nb; ++j)
        require(join(bw.host, order[j], order[j + 1]), Err::StageFailure,
                "cycles_in_blowup: stage=join no edge between end sets");
    if (!odd) {
        require(join(bw.host, order[nb - 1], order[0]), Err::StageFailure,
                "cycles_in_blowup: stage=close no closing edge");
    } else {
        // parity vertex u with a neighbour in the last end set and in A_1
        bool found = false;
        for (int u : u_cluster_pool) {
            int eb = -1, ea = -1;
            for (int b : order[nb - 1].ends_b)
                if (bw.host.has_edge(u, b)) eb = b;
            for (int a : order[0].ends_a)
                if (bw.host.has_edge(u, a)) ea = a;
            if (eb >= 0 && ea >= 0) {
                u_vertex = u;
                order[nb - 1].exit = eb;
                order[0].entry = ea;
                found = true;
                break;
            }
        }
        require(found, Err::StageFailure, "cycles_in_blowup: stage=parity-vertex none found");
    }

    std::vector<int> verts;
    for (int j = 0; j < nb; ++j) {
        auto sp = order[j].spine();
        verts.insert(verts.end(), sp.begin(), sp.end());
    }
    if (odd) verts.push_back(u_vertex);
    Cycle cyc{verts};
    cyc.validate(bw.host);
    require((int)cyc.verts.size() == 2 * ell + (odd ? 1 : 0), Err::StageFailure,
            "cycles_in_blowup: stage=certify length mismatch");
    return cyc;
}

}  // namespace

Cycle cycles_in_blowup(const Graph& h, const std::vector<std::pair<int, int>>& matching,
                       const Blowup& bw, int ell, bool odd, Seed seed) {
    require(!matching.empty(), Err::InvalidArgument, "cycles_in_blowup: empty matching");
    require(bw.reduced.n() == h.n(), Err::InvalidArgument,
            "cycles_in_blowup: blow-up built from a different template");
    int k = (int)matching.size();
    Bitset used(h.n());
    for (auto [x, y] : matching) {
        require(h.has_edge(x, y), Err::InvalidArgument, "cycles_in_blowup: not a matching edge");
        require(!used.test(x) && !used.test(y), Err::InvalidArgument,
                "cycles_in_blowup: matching edges share a vertex");
        used.set(x);
        used.set(y);
    }
    require(ell >= 2, Err::InvalidArgument, "cycles_in_blowup: ell too small");
    // the paper window is meaningful only for eps < 1/50; at larger eps the
    // effective ceiling is the per-pair capacity, enforced at sizing time
    if (bw.eps < 1.0 / 50)
        require((double)ell <= (1 - 50 * bw.eps) * k * bw.m, Err::InvalidArgument,
                "cycles_in_blowup: ell above the (1-50eps)km window");
    require(ell <= k * bw.m, Err::InvalidArgument, "cycles_in_blowup: ell exceeds km");

    std::string last = "cycles_in_blowup: no attempt ran";
    for (int attempt = 0; attempt < 6; ++attempt) {
        try {
            return attempt_assembly(h, matching, bw, ell, odd, seed.sub(attempt));
        } catch (const Error& e) {
            if (e.code == Err::PreconditionFailed || e.code == Err::InvalidArgument) throw;
            last = e.what();
        }
    }
    fail(Err::StageFailure, last);
}

}  // namespace rcl
