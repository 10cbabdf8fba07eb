#include "rwit/smallgraphs.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "rwit/errors.hpp"

namespace rwit {

namespace {

// Depth-first search over vertex orderings, pruning against the best prefix.
// Appends one upper-triangle column per placed vertex, so partial strings
// are comparable against the incumbent.
struct Canonicalizer {
    const Graph& g;
    int n;
    long long total_bits;
    std::uint64_t best;
    std::vector<int> best_perm;
    std::vector<int> perm;
    std::vector<char> used;

    explicit Canonicalizer(const Graph& graph)
        : g(graph),
          n(graph.order()),
          total_bits(static_cast<long long>(n) * (n - 1) / 2),
          best(~std::uint64_t(0) >> (64 - (total_bits ? total_bits : 1))),
          perm(n, -1),
          used(n, 0) {
        if (total_bits == 0) best = 0;
        best_perm.resize(n);
        for (int i = 0; i < n; ++i) best_perm[i] = i;
    }

    void rec(int pos, std::uint64_t cur, long long bits) {
        if (pos == n) {
            if (cur <= best) {
                best = cur;
                best_perm = perm;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < pos; ++i) col = (col << 1) | (g.adjacent(perm[i], v) ? 1 : 0);
            std::uint64_t next = (cur << pos) | col;
            long long nb = bits + pos;
            if (nb > 0 && next > (best >> (total_bits - nb))) continue;
            perm[pos] = v;
            used[v] = 1;
            rec(pos + 1, next, nb);
            used[v] = 0;
        }
    }
};

std::uint64_t canonicalize(const Graph& g, std::vector<int>& perm_out) {
    if (g.order() > 11) throw PreconditionError("canonical_code supports orders up to 11");
    Canonicalizer c(g);
    c.rec(0, 0, 0);
    perm_out = c.best_perm;
    return c.best;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    std::vector<int> perm;
    return canonicalize(g, perm);
}

Graph canonical_form(const Graph& g) {
    std::vector<int> perm;
    canonicalize(g, perm);
    EdgeSet edges;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(perm[i], perm[j])) edges.emplace_back(i, j);
    return Graph(g.order(), edges);
}

namespace {

std::vector<Graph> build_level(const std::vector<Graph>& parents, int order) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> found;
    for (const Graph& parent : parents) {
        EdgeSet base = parent.edges();
        for (unsigned mask = 0; mask < (1u << (order - 1)); ++mask) {
            EdgeSet edges = base;
            for (int v = 0; v < order - 1; ++v)
                if ((mask >> v) & 1) edges.emplace_back(v, order - 1);
            Graph candidate(order, edges);
            std::vector<int> perm;
            std::uint64_t code = canonicalize(candidate, perm);
            if (seen.insert(code).second) {
                EdgeSet canon;
                for (int i = 0; i < order; ++i)
                    for (int j = i + 1; j < order; ++j)
                        if (candidate.adjacent(perm[i], perm[j])) canon.emplace_back(i, j);
                found.emplace_back(code, Graph(order, canon));
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

}  // namespace

const std::vector<Graph>& all_graphs(int order) {
    if (order < 1 || order > 11) throw PreconditionError("all_graphs supports orders 1..11");
    static std::map<int, std::vector<Graph>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    for (int k = 1; k <= order; ++k) {
        if (cache.count(k)) continue;
        if (k == 1)
            cache[k] = {Graph(1)};
        else
            cache[k] = build_level(cache[k - 1], k);
    }
    return cache[order];
}

std::vector<Graph> connected_graphs(int order) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(order))
        if (is_connected(g)) out.push_back(g);
    return out;
}

std::vector<Graph> connected_graphs_upto(int order) {
    std::vector<Graph> out;
    for (int k = 1; k <= order; ++k)
        for (Graph& g : connected_graphs(k)) out.push_back(std::move(g));
    return out;
}

}  // namespace rwit
