#include "rwit/families.hpp"

#include <algorithm>
#include <set>

#include "bits.hpp"
#include "rwit/errors.hpp"
#include "rwit/invariants.hpp"

namespace rwit {

std::string kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::path: return "path";
        case FamilyKind::clique: return "clique";
        case FamilyKind::star: return "star";
        case FamilyKind::biclique: return "biclique";
        case FamilyKind::hairy_clique: return "hairy-clique";
        case FamilyKind::triangle_clique: return "triangle-clique";
        case FamilyKind::spider: return "spider";
        case FamilyKind::friendship: return "friendship";
        case FamilyKind::general_broom: return "general-broom";
        case FamilyKind::general_hairy: return "general-hairy";
        case FamilyKind::general_star: return "general-star";
    }
    return "?";
}

std::optional<FamilyKind> kind_from_name(const std::string& name) {
    for (FamilyKind k :
         {FamilyKind::path, FamilyKind::clique, FamilyKind::star, FamilyKind::biclique,
          FamilyKind::hairy_clique, FamilyKind::triangle_clique, FamilyKind::spider,
          FamilyKind::friendship, FamilyKind::general_broom, FamilyKind::general_hairy,
          FamilyKind::general_star})
        if (kind_name(k) == name) return k;
    return std::nullopt;
}

namespace {
FamilySpec make_spec(FamilyKind kind, int n, int m = 0, int l = 0) {
    FamilySpec s;
    s.kind = kind;
    s.n = n;
    s.m = m;
    s.l = l;
    return s;
}
}  // namespace

FamilySpec FamilySpec::path(int n) { return make_spec(FamilyKind::path, n); }
FamilySpec FamilySpec::clique(int n) { return make_spec(FamilyKind::clique, n); }
FamilySpec FamilySpec::star(int n) { return make_spec(FamilyKind::star, n); }
FamilySpec FamilySpec::biclique(int n, int m) { return make_spec(FamilyKind::biclique, n, m); }
FamilySpec FamilySpec::hairy_clique(int n, int l) {
    return make_spec(FamilyKind::hairy_clique, n, 0, l);
}
FamilySpec FamilySpec::triangle_clique(int n) { return make_spec(FamilyKind::triangle_clique, n); }
FamilySpec FamilySpec::spider(int n, int l) { return make_spec(FamilyKind::spider, n, 0, l); }
FamilySpec FamilySpec::friendship(int n) { return make_spec(FamilyKind::friendship, n); }

FamilySpec FamilySpec::general_broom(Graph h, VertexSet x, int l) {
    FamilySpec s = make_spec(FamilyKind::general_broom, 1, 0, l);
    s.base = std::move(h);
    s.attach = std::move(x);
    return s;
}
FamilySpec FamilySpec::general_hairy(Graph h, VertexSet x, int n, int l) {
    FamilySpec s = make_spec(FamilyKind::general_hairy, n, 0, l);
    s.base = std::move(h);
    s.attach = std::move(x);
    return s;
}
FamilySpec FamilySpec::general_star(Graph h, VertexSet x, int n, int l) {
    FamilySpec s = make_spec(FamilyKind::general_star, n, 0, l);
    s.base = std::move(h);
    s.attach = std::move(x);
    return s;
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw PreconditionError(what);
}

void check_general(const FamilySpec& s) {
    require(s.base.has_value(), "general family needs a base graph");
    require(s.base->order() > 0, "base graph must be non-empty");
    require(is_connected(*s.base), "base graph must be connected");
    require(!s.attach.empty(), "attachment set must be non-empty");
    VertexSet x = make_vertex_set(s.attach);
    require(x == s.attach, "attachment set must be sorted and duplicate-free");
    require(x.front() >= 0 && x.back() < s.base->order(), "attachment set out of range");
    require(s.l >= 1, "broom length must be at least 1");
}

// One broom copy: base vertices first, then the l-1 interior path vertices
// running from the X-adjacent end towards the attachment endpoint, which is
// the caller-supplied vertex.
void add_broom(EdgeSet& edges, const Graph& h, const VertexSet& x, int l, int offset,
               int endpoint) {
    for (const Edge& e : h.edges()) edges.emplace_back(offset + e.a, offset + e.b);
    int hn = h.order();
    std::vector<int> path;
    for (int j = 0; j < l - 1; ++j) path.push_back(offset + hn + j);
    path.push_back(endpoint);
    for (int v : x) edges.emplace_back(v + offset, path.front());
    for (std::size_t j = 0; j + 1 < path.size(); ++j) edges.emplace_back(path[j], path[j + 1]);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    EdgeSet edges;
    switch (spec.kind) {
        case FamilyKind::path: {
            require(spec.n >= 1, "path needs n >= 1");
            for (int i = 0; i + 1 < spec.n; ++i) edges.emplace_back(i, i + 1);
            return Graph(spec.n, edges);
        }
        case FamilyKind::clique: {
            require(spec.n >= 1, "clique needs n >= 1");
            for (int i = 0; i < spec.n; ++i)
                for (int j = i + 1; j < spec.n; ++j) edges.emplace_back(i, j);
            return Graph(spec.n, edges);
        }
        case FamilyKind::star: {
            require(spec.n >= 1, "star needs n >= 1");
            for (int i = 1; i <= spec.n; ++i) edges.emplace_back(0, i);
            return Graph(spec.n + 1, edges);
        }
        case FamilyKind::biclique: {
            require(spec.n >= 1 && spec.m >= 1, "biclique needs n, m >= 1");
            for (int i = 0; i < spec.n; ++i)
                for (int j = 0; j < spec.m; ++j) edges.emplace_back(i, spec.n + j);
            return Graph(spec.n + spec.m, edges);
        }
        case FamilyKind::hairy_clique: {
            require(spec.n >= 1 && spec.l >= 1, "hairy clique needs n, l >= 1");
            for (int i = 0; i < spec.n; ++i)
                for (int j = i + 1; j < spec.n; ++j) edges.emplace_back(i, j);
            for (int i = 0; i < spec.n; ++i) {
                int prev = i;
                for (int j = 0; j < spec.l; ++j) {
                    int v = spec.n + i * spec.l + j;
                    edges.emplace_back(prev, v);
                    prev = v;
                }
            }
            return Graph(spec.n * (spec.l + 1), edges);
        }
        case FamilyKind::triangle_clique: {
            require(spec.n >= 1, "triangle clique needs n >= 1");
            for (int i = 0; i < spec.n; ++i)
                for (int j = i + 1; j < spec.n; ++j) edges.emplace_back(i, j);
            for (int i = 0; i < spec.n; ++i) {
                int a = spec.n + 2 * i, b = spec.n + 2 * i + 1;
                edges.emplace_back(i, a);
                edges.emplace_back(i, b);
                edges.emplace_back(a, b);
            }
            return Graph(3 * spec.n, edges);
        }
        case FamilyKind::spider: {
            require(spec.n >= 1 && spec.l >= 1, "spider needs n, l >= 1");
            for (int i = 0; i < spec.n; ++i) {
                int prev = 0;
                for (int j = 0; j < spec.l; ++j) {
                    int v = 1 + i * spec.l + j;
                    edges.emplace_back(prev, v);
                    prev = v;
                }
            }
            return Graph(spec.n * spec.l + 1, edges);
        }
        case FamilyKind::friendship: {
            require(spec.n >= 1, "friendship needs n >= 1");
            for (int i = 0; i < spec.n; ++i) {
                int a = 1 + 2 * i, b = 2 + 2 * i;
                edges.emplace_back(0, a);
                edges.emplace_back(0, b);
                edges.emplace_back(a, b);
            }
            return Graph(2 * spec.n + 1, edges);
        }
        case FamilyKind::general_broom: {
            check_general(spec);
            int hn = spec.base->order();
            int endpoint = hn + spec.l - 1;
            add_broom(edges, *spec.base, spec.attach, spec.l, 0, endpoint);
            return Graph(hn + spec.l, edges);
        }
        case FamilyKind::general_hairy: {
            check_general(spec);
            require(spec.n >= 1, "general hairy clique needs n >= 1");
            int hn = spec.base->order();
            int block = hn + spec.l - 1;
            for (int i = 0; i < spec.n; ++i)
                for (int j = i + 1; j < spec.n; ++j) edges.emplace_back(i, j);
            for (int i = 0; i < spec.n; ++i)
                add_broom(edges, *spec.base, spec.attach, spec.l, spec.n + i * block, i);
            return Graph(spec.n + spec.n * block, edges);
        }
        case FamilyKind::general_star: {
            check_general(spec);
            require(spec.n >= 1, "general star needs n >= 1");
            int hn = spec.base->order();
            int block = hn + spec.l - 1;
            for (int i = 0; i < spec.n; ++i)
                add_broom(edges, *spec.base, spec.attach, spec.l, 1 + i * block, 0);
            return Graph(1 + spec.n * block, edges);
        }
    }
    throw PreconditionError("unknown family kind");
}

namespace {

// Backtracking induced-subgraph search. Pattern vertices are mapped in BFS
// order per component so most slots have an already-mapped anchor neighbour;
// host candidates are tried in ascending order, which makes the first hit
// deterministic.
struct EmbeddingSearch {
    const Graph& host;
    const Graph& pat;
    std::vector<int> order;
    std::vector<int> map;
    std::vector<char> used;

    EmbeddingSearch(const Graph& host_, const Graph& pat_)
        : host(host_), pat(pat_), map(pat_.order(), -1), used(host_.order(), 0) {
        std::vector<char> seen(pat.order(), 0);
        for (int s = 0; s < pat.order(); ++s) {
            if (seen[s]) continue;
            std::vector<int> queue{s};
            seen[s] = 1;
            std::size_t head = 0;
            while (head < queue.size()) {
                int v = queue[head++];
                order.push_back(v);
                for (int w : pat.neighbors(v))
                    if (!seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
            }
        }
    }

    bool consistent(int pv, int hv) const {
        if (host.degree(hv) < pat.degree(pv)) return false;
        for (int pu : order) {
            if (map[pu] == -1) continue;
            if (pat.adjacent(pv, pu) != host.adjacent(hv, map[pu])) return false;
        }
        return true;
    }

    // cb(map) -> true keeps enumerating
    template <class F>
    bool enumerate(std::size_t slot, F&& cb) {
        if (slot == order.size()) return cb(map);
        int pv = order[slot];
        for (int hv = 0; hv < host.order(); ++hv) {
            if (used[hv] || !consistent(pv, hv)) continue;
            map[pv] = hv;
            used[hv] = 1;
            bool keep = enumerate(slot + 1, cb);
            map[pv] = -1;
            used[hv] = 0;
            if (!keep) return false;
        }
        return true;
    }
};

}  // namespace

std::optional<std::vector<int>> find_induced_embedding(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return std::nullopt;
    if (pattern.order() == 0) return std::vector<int>{};
    EmbeddingSearch search(host, pattern);
    std::optional<std::vector<int>> out;
    search.enumerate(0, [&](const std::vector<int>& map) {
        out = map;
        return false;
    });
    return out;
}

std::vector<VertexSet> induced_copies(const Graph& host, const Graph& pattern) {
    std::set<VertexSet> images;
    if (pattern.order() <= host.order() && pattern.order() > 0) {
        EmbeddingSearch search(host, pattern);
        search.enumerate(0, [&](const std::vector<int>& map) {
            images.insert(make_vertex_set(map));
            return true;
        });
    }
    return {images.begin(), images.end()};
}

std::vector<int> longest_induced_path(const Graph& g) {
    std::vector<int> best, cur;
    std::vector<char> on_path(g.order(), 0);
    auto extend = [&](auto&& self, int last) -> void {
        if (cur.size() > best.size()) best = cur;
        for (int w : g.neighbors(last)) {
            if (on_path[w]) continue;
            bool induced = true;
            for (std::size_t i = 0; i + 1 < cur.size(); ++i)
                if (g.adjacent(cur[i], w)) {
                    induced = false;
                    break;
                }
            if (!induced) continue;
            cur.push_back(w);
            on_path[w] = 1;
            self(self, w);
            on_path[w] = 0;
            cur.pop_back();
        }
    };
    for (int s = 0; s < g.order(); ++s) {
        cur = {s};
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        extend(extend, s);
    }
    return best;
}

InducedStar largest_induced_star(const Graph& g) {
    InducedStar best;
    for (int c = 0; c < g.order(); ++c) {
        VertexSet nbrs = g.neighbors(c);
        if (static_cast<int>(nbrs.size()) <= static_cast<int>(best.leaves.size())) continue;
        auto sub = induced_subgraph(g, nbrs);
        VertexSet mis = maximum_independent_set(sub.graph);
        if (static_cast<int>(mis.size()) > static_cast<int>(best.leaves.size())) {
            best.center = c;
            best.leaves.clear();
            for (int idx : mis) best.leaves.push_back(sub.to_parent[idx]);
        }
    }
    return best;
}

namespace {

std::optional<Witness> probe(const Graph& host, const FamilySpec& spec) {
    Graph pattern = generate(spec);
    if (pattern.order() > host.order()) return std::nullopt;
    auto emb = find_induced_embedding(host, pattern);
    if (!emb) return std::nullopt;
    return Witness{spec, *emb};
}

FamilySpec spec_for(FamilyKind kind, int n, int l) {
    switch (kind) {
        case FamilyKind::path: return FamilySpec::path(n);
        case FamilyKind::clique: return FamilySpec::clique(n);
        case FamilyKind::star: return FamilySpec::star(n);
        case FamilyKind::biclique: return FamilySpec::biclique(n, n);
        case FamilyKind::hairy_clique: return FamilySpec::hairy_clique(n, l);
        case FamilyKind::triangle_clique: return FamilySpec::triangle_clique(n);
        case FamilyKind::spider: return FamilySpec::spider(n, l);
        case FamilyKind::friendship: return FamilySpec::friendship(n);
        default: throw PreconditionError("max_family_parameter needs a single-parameter family");
    }
}

}  // namespace

FamilySearch max_family_parameter(const Graph& host, FamilyKind kind, int l) {
    FamilySearch out;

    // dedicated maximisers for the three structures the searches lean on
    if (kind == FamilyKind::path) {
        std::vector<int> seq = longest_induced_path(host);
        if (!seq.empty())
            out = {static_cast<int>(seq.size()),
                   Witness{FamilySpec::path(static_cast<int>(seq.size())), seq}};
        return out;
    }
    if (kind == FamilyKind::clique) {
        VertexSet cl = maximum_clique(host);
        if (!cl.empty())
            out = {static_cast<int>(cl.size()),
                   Witness{FamilySpec::clique(static_cast<int>(cl.size())),
                           std::vector<int>(cl.begin(), cl.end())}};
        return out;
    }
    if (kind == FamilyKind::star) {
        InducedStar st = largest_induced_star(host);
        if (st.center >= 0 && !st.leaves.empty()) {
            std::vector<int> emb{st.center};
            emb.insert(emb.end(), st.leaves.begin(), st.leaves.end());
            out = {static_cast<int>(st.leaves.size()),
                   Witness{FamilySpec::star(static_cast<int>(st.leaves.size())), emb}};
        }
        return out;
    }

    for (int n = 1;; ++n) {
        FamilySpec spec = spec_for(kind, n, l);
        if (generate(spec).order() > host.order()) break;
        auto w = probe(host, spec);
        if (!w) break;  // families nest, so the first miss is final
        out = {n, std::move(w)};
    }
    return out;
}

}  // namespace rwit
