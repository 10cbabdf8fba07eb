#include <algorithm>

#include "bits.hpp"
#include "rwit/invariants.hpp"

namespace rwit {

namespace {

// Branch and bound maximum clique with a greedy colouring bound.
struct CliqueSolver {
    std::vector<detail::Bits> adj;
    int n;
    int best = 0;
    int stop_at;

    explicit CliqueSolver(const Graph& g, int stop)
        : adj(detail::adjacency_bits(g)), n(g.order()), stop_at(stop) {}

    void expand(const detail::Bits& cand, int depth) {
        if (best >= stop_at) return;
        if (!cand.any()) {
            best = std::max(best, depth);
            return;
        }
        // colour classes are independent sets; class index bounds the clique
        std::vector<int> verts, colors;
        detail::Bits uncolored = cand;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            detail::Bits avail = uncolored;
            while (avail.any()) {
                int v = avail.first();
                avail.reset(v);
                uncolored.reset(v);
                avail.and_not(adj[v]);
                verts.push_back(v);
                colors.push_back(color);
            }
        }
        detail::Bits remaining = cand;
        for (int idx = int(verts.size()) - 1; idx >= 0; --idx) {
            if (depth + colors[idx] <= best) return;
            int v = verts[idx];
            detail::Bits next = remaining;
            next &= adj[v];
            expand(next, depth + 1);
            if (best >= stop_at) return;
            remaining.reset(v);
        }
    }

    int run(const detail::Bits& cand, int depth) {
        expand(cand, depth);
        return best;
    }
};

int clique_size_within(const Graph& g, const detail::Bits& cand, int stop_at) {
    CliqueSolver solver(g, stop_at);
    return solver.run(cand, 0);
}

}  // namespace

int max_clique_size(const Graph& g, int stop_at) {
    if (g.order() == 0) return 0;
    detail::Bits all(g.order());
    all.set_all();
    return clique_size_within(g, all, stop_at);
}

VertexSet maximum_clique(const Graph& g) {
    int target = max_clique_size(g);
    VertexSet out;
    if (target == 0) return out;
    auto adj = detail::adjacency_bits(g);
    detail::Bits cand(g.order());
    cand.set_all();
    int have = 0;
    // lexicographically least optimum: force the smallest extendable vertex,
    // restricting later picks to larger indices
    for (int v = 0; v < g.order() && have < target; ++v) {
        if (!cand.test(v)) continue;
        detail::Bits rest = cand;
        rest &= adj[v];
        for (int w = 0; w <= v; ++w) rest.reset(w);
        int need = target - have - 1;
        if (clique_size_within(g, rest, need) >= need) {
            out.push_back(v);
            ++have;
            cand = rest;
        }
    }
    return out;
}

}  // namespace rwit
