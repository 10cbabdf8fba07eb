#include <algorithm>
#include <queue>

#include "rwit/invariants.hpp"

namespace rwit {

namespace {

// General maximum matching via blossom shrinking, O(V^3).
struct Blossom {
    int n;
    std::vector<std::vector<int>> g;
    std::vector<int> match, p, base;
    std::vector<char> used, blossom;

    explicit Blossom(const Graph& graph) : n(graph.order()), g(n) {
        for (int v = 0; v < n; ++v) g[v] = graph.neighbors(v);
        match.assign(n, -1);
        p.assign(n, -1);
        base.assign(n, 0);
        used.assign(n, 0);
        blossom.assign(n, 0);
    }

    int lca(int a, int b) {
        std::vector<char> seen(n, 0);
        int cur = a;
        while (true) {
            cur = base[cur];
            seen[cur] = 1;
            if (match[cur] == -1) break;
            cur = p[match[cur]];
        }
        cur = b;
        while (true) {
            cur = base[cur];
            if (seen[cur]) return cur;
            cur = p[match[cur]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    int solve() {
        int res = 0;
        for (int v = 0; v < n; ++v)
            if (match[v] == -1)
                for (int to : g[v])
                    if (match[to] == -1) {
                        match[v] = to;
                        match[to] = v;
                        ++res;
                        break;
                    }
        for (int v = 0; v < n; ++v)
            if (match[v] == -1) {
                int u = find_path(v);
                if (u != -1) {
                    ++res;
                    while (u != -1) {
                        int pv = p[u], ppv = match[pv];
                        match[u] = pv;
                        match[pv] = u;
                        u = ppv;
                    }
                }
            }
        return res;
    }
};

}  // namespace

int matching_number(const Graph& g) {
    if (g.order() == 0) return 0;
    Blossom b(g);
    return b.solve();
}

EdgeSet maximum_matching(const Graph& g) {
    int target = matching_number(g);
    EdgeSet out;
    if (target == 0) return out;
    std::vector<char> removed(g.order(), 0);
    int have = 0;
    // greedy lexicographic forcing against the exact size oracle
    for (const Edge& e : g.edges()) {
        if (have == target) break;
        if (removed[e.a] || removed[e.b]) continue;
        removed[e.a] = removed[e.b] = 1;
        VertexSet rest;
        for (int v = 0; v < g.order(); ++v)
            if (!removed[v]) rest.push_back(v);
        if (have + 1 + matching_number(induced_subgraph(g, rest).graph) == target) {
            out.push_back(e);
            ++have;
        } else {
            removed[e.a] = removed[e.b] = 0;
        }
    }
    return out;
}

Rational fractional_matching_number(const Graph& g) {
    // The LP optimum is half the matching number of the bipartite double
    // cover; half-integrality makes this exact.
    int n = g.order();
    EdgeSet doubled;
    for (const Edge& e : g.edges()) {
        doubled.emplace_back(e.a, n + e.b);
        doubled.emplace_back(e.b, n + e.a);
    }
    Graph cover(2 * n, doubled);
    return Rational(matching_number(cover), 2);
}

}  // namespace rwit
