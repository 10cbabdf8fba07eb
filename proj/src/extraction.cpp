#include "rwit/extraction.hpp"

#include <algorithm>
#include <sstream>

#include "rwit/errors.hpp"
#include "rwit/invariants.hpp"

namespace rwit {

namespace {

void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g)) throw PreconditionError(std::string(who) + " requires a connected graph");
}

void require_sorted(const VertexSet& vs, int order, const char* what) {
    VertexSet norm = make_vertex_set(vs);
    if (norm != vs) throw PreconditionError(std::string(what) + " must be sorted and duplicate-free");
    if (!vs.empty() && (vs.front() < 0 || vs.back() >= order))
        throw PreconditionError(std::string(what) + " is out of range");
}

bool contains_sorted(const VertexSet& vs, int v) {
    return std::binary_search(vs.begin(), vs.end(), v);
}

}  // namespace

bool verify_witness(const Graph& g, const Witness& w) {
    Graph pattern;
    try {
        pattern = generate(w.spec);
    } catch (const PreconditionError&) {
        return false;
    }
    if (static_cast<int>(w.embedding.size()) != pattern.order()) return false;
    std::vector<char> used(g.order(), 0);
    for (int hv : w.embedding) {
        if (hv < 0 || hv >= g.order() || used[hv]) return false;
        used[hv] = 1;
    }
    for (int u = 0; u < pattern.order(); ++u)
        for (int v = u + 1; v < pattern.order(); ++v)
            if (pattern.adjacent(u, v) != g.adjacent(w.embedding[u], w.embedding[v]))
                return false;
    return true;
}

VertexSet pendant_extension(const Graph& g, const VertexSet& subtree, const VertexSet& pivots) {
    require_connected(g, "pendant_extension");
    require_sorted(subtree, g.order(), "subtree");
    require_sorted(pivots, g.order(), "pivot set");
    for (int v : pivots)
        if (!contains_sorted(subtree, v))
            throw PreconditionError("pivot " + std::to_string(v) + " is not in the subtree");

    auto sub = induced_subgraph(g, subtree);
    if (!is_connected(sub.graph))
        throw PreconditionError("subtree does not induce a connected subgraph");

    std::vector<char> is_gcut(g.order(), 0), is_scut(g.order(), 0), in_tree(g.order(), 0);
    for (int v : cut_vertices(g)) is_gcut[v] = 1;
    for (int idx : cut_vertices(sub.graph)) is_scut[sub.to_parent[idx]] = 1;
    for (int v : subtree) in_tree[v] = 1;
    for (int v : pivots) {
        if (!is_gcut[v])
            throw PreconditionError("pivot " + std::to_string(v) + " is not a cut vertex of the graph");
        if (is_scut[v])
            throw PreconditionError("pivot " + std::to_string(v) + " is a cut vertex of the subtree");
    }

    VertexSet out;
    for (int v : pivots) {
        // components of g - v in order of smallest vertex; take the first
        // that avoids the subtree
        std::vector<char> visited(g.order(), 0);
        visited[v] = 1;
        int picked = -1;
        for (int s = 0; s < g.order() && picked == -1; ++s) {
            if (visited[s]) continue;
            std::vector<int> stack{s}, comp;
            visited[s] = 1;
            bool touches = false;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                comp.push_back(x);
                if (in_tree[x]) touches = true;
                for (int w : g.neighbors(x))
                    if (!visited[w]) {
                        visited[w] = 1;
                        stack.push_back(w);
                    }
            }
            if (touches) continue;
            for (int w : comp)
                if (g.adjacent(v, w) && (picked == -1 || w < picked)) picked = w;
        }
        if (picked == -1)
            throw PreconditionError("no component of g - " + std::to_string(v) +
                                    " avoids the subtree");
        out.push_back(picked);
    }
    VertexSet sorted = make_vertex_set(out);
    if (sorted.size() != out.size())
        throw InternalError("pendant extension produced duplicate vertices");
    return sorted;
}

Pruned prune_keep(const Graph& g, const VertexSet& protected_vertices) {
    require_connected(g, "prune_keep");
    require_sorted(protected_vertices, g.order(), "protected set");
    std::vector<char> keep(g.order(), 1), is_protected(g.order(), 0);
    for (int v : protected_vertices) is_protected[v] = 1;

    while (true) {
        VertexSet alive;
        for (int v = 0; v < g.order(); ++v)
            if (keep[v]) alive.push_back(v);
        auto sub = induced_subgraph(g, alive);
        // a connected result needs at least one vertex, so the last survivor
        // stays even when unprotected
        if (alive.size() == 1) return {std::move(sub.graph), std::move(sub.to_parent)};
        std::vector<char> is_cut(g.order(), 0);
        for (int idx : cut_vertices(sub.graph)) is_cut[sub.to_parent[idx]] = 1;
        int victim = -1;
        for (int v : alive)
            if (!is_protected[v] && !is_cut[v]) {
                victim = v;
                break;
            }
        if (victim == -1) return {std::move(sub.graph), std::move(sub.to_parent)};
        keep[victim] = 0;
    }
}

namespace {

void check_contraction(const Graph& g, const ContractionMap& cm, const Graph& q) {
    if (static_cast<int>(cm.contracted_of.size()) != g.order())
        throw PreconditionError("contraction map does not match the graph");
    // contracted images must be pairwise non-adjacent, i.e. the contracted
    // edges formed an induced matching
    VertexSet images;
    for (int v = 0; v < q.order(); ++v)
        if (cm.is_contracted(v)) images.push_back(v);
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (q.adjacent(images[i], images[j]))
                throw PreconditionError("contracted edges do not form an induced matching");
}

// one preimage vertex of a contracted image, picked toward an anchor vertex
// of g; non-contracted images pass through
int expand_vertex(const Graph& g, const ContractionMap& cm, int image, int anchor) {
    if (!cm.is_contracted(image)) return cm.expansion_of[image][0];
    Edge e = cm.contracted_edge_of.at(image);
    if (g.adjacent(e.a, anchor)) return e.a;
    if (g.adjacent(e.b, anchor)) return e.b;
    throw InternalError("no end of a contracted edge reaches its anchor");
}

}  // namespace

std::vector<int> expand_contracted_path(const Graph& g, const ContractionMap& cm,
                                        const std::vector<int>& path) {
    Graph q = contracted_graph(g, cm);
    check_contraction(g, cm, q);
    for (int v : path)
        if (v < 0 || v >= q.order()) throw PreconditionError("path vertex out of range");
    int len = static_cast<int>(path.size());
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            if (path[i] == path[j]) throw PreconditionError("path repeats a vertex");
            if (q.adjacent(path[i], path[j]) != (j == i + 1))
                throw PreconditionError("input is not an induced path of the contracted graph");
        }

    std::vector<int> out;
    for (int idx = 0; idx < len; ++idx) {
        int u = path[idx];
        if (!cm.is_contracted(u)) {
            out.push_back(cm.expansion_of[u][0]);
            continue;
        }
        // neighbours on an induced path are never contracted themselves
        Edge e = cm.contracted_edge_of.at(u);
        int prev = idx > 0 ? cm.sole_preimage(path[idx - 1]) : -1;
        int next = idx + 1 < len ? cm.sole_preimage(path[idx + 1]) : -1;
        if (prev >= 0 && next >= 0) {
            bool a_both = g.adjacent(e.a, prev) && g.adjacent(e.a, next);
            bool b_both = g.adjacent(e.b, prev) && g.adjacent(e.b, next);
            if (a_both) {
                out.push_back(e.a);
            } else if (b_both) {
                out.push_back(e.b);
            } else {
                int x = g.adjacent(e.a, prev) ? e.a : e.b;  // end toward prev
                int y = (x == e.a) ? e.b : e.a;
                if (!g.adjacent(x, prev) || !g.adjacent(y, next))
                    throw InternalError("contracted path vertex lost its neighbours");
                out.push_back(x);
                out.push_back(y);
            }
        } else if (prev >= 0 || next >= 0) {
            int nb = prev >= 0 ? prev : next;
            bool aa = g.adjacent(e.a, nb), bb = g.adjacent(e.b, nb);
            if (aa && bb) {
                out.push_back(e.a);  // cannot extend past the end, keep one
            } else {
                int adj_end = aa ? e.a : e.b;
                int other = aa ? e.b : e.a;
                if (prev >= 0) {
                    out.push_back(adj_end);
                    out.push_back(other);
                } else {
                    out.push_back(other);
                    out.push_back(adj_end);
                }
            }
        } else {
            out.push_back(e.a);
            out.push_back(e.b);
        }
    }

    int olen = static_cast<int>(out.size());
    if (olen < len) throw InternalError("path expansion shrank the path");
    for (int i = 0; i < olen; ++i)
        for (int j = i + 1; j < olen; ++j)
            if (g.adjacent(out[i], out[j]) != (j == i + 1))
                throw InternalError("path expansion is not an induced path");
    return out;
}

ColorQuad ColoredCompleteGraph::color(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= order || j >= order)
        throw PreconditionError("colour lookup needs two distinct pair indices");
    if (i < j) return colors[std::size_t(j) * (j - 1) / 2 + i];
    ColorQuad q = colors[std::size_t(i) * (i - 1) / 2 + j];
    std::swap(q.c, q.d);
    return q;
}

ColoredCompleteGraph color_matching_pairs(const Graph& g,
                                          const std::vector<std::pair<int, int>>& oriented) {
    std::vector<char> used(g.order(), 0);
    for (auto [x, y] : oriented) {
        if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || x == y)
            throw PreconditionError("oriented pair out of range");
        if (!g.adjacent(x, y)) throw PreconditionError("oriented pair is not an edge");
        if (used[x] || used[y]) throw PreconditionError("oriented pairs share a vertex");
        used[x] = used[y] = 1;
    }
    ColoredCompleteGraph h;
    h.order = static_cast<int>(oriented.size());
    h.colors.resize(std::size_t(h.order) * (h.order - 1) / 2);
    for (int j = 1; j < h.order; ++j)
        for (int i = 0; i < j; ++i) {
            auto [xi, yi] = oriented[i];
            auto [xj, yj] = oriented[j];
            ColorQuad q;
            q.a = g.adjacent(xi, xj);
            q.b = g.adjacent(yi, yj);
            q.c = g.adjacent(xi, yj);
            q.d = g.adjacent(yi, xj);
            h.colors[std::size_t(j) * (j - 1) / 2 + i] = q;
        }
    return h;
}

namespace {

// lexicographically least clique of exactly size k, if any
std::optional<VertexSet> lex_least_clique(const Graph& g, int k) {
    if (k == 0) return VertexSet{};
    if (max_clique_size(g, k) < k) return std::nullopt;
    VertexSet chosen, cand;
    for (int v = 0; v < g.order(); ++v) cand.push_back(v);
    while (static_cast<int>(chosen.size()) < k) {
        bool advanced = false;
        for (int v : cand) {
            VertexSet rest;
            for (int w : cand)
                if (w > v && g.adjacent(v, w)) rest.push_back(w);
            int need = k - static_cast<int>(chosen.size()) - 1;
            if (max_clique_size(induced_subgraph(g, rest).graph, need) >= need) {
                chosen.push_back(v);
                cand = rest;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw InternalError("clique forcing lost a feasible extension");
    }
    return chosen;
}

}  // namespace

std::optional<std::pair<ColorQuad, VertexSet>> monochromatic_clique(const ColoredCompleteGraph& h,
                                                                    int k) {
    if (k < 1) throw PreconditionError("clique size must be at least 1");
    if (k > h.order) return std::nullopt;
    if (k == 1) return std::make_pair(ColorQuad{}, VertexSet{0});
    for (int code = 0; code < 16; ++code) {
        EdgeSet edges;
        for (int j = 1; j < h.order; ++j)
            for (int i = 0; i < j; ++i)
                if (h.colors[std::size_t(j) * (j - 1) / 2 + i].code() == code)
                    edges.emplace_back(i, j);
        auto clique = lex_least_clique(Graph(h.order, edges), k);
        if (clique) {
            ColorQuad q{bool((code >> 3) & 1), bool((code >> 2) & 1), bool((code >> 1) & 1),
                        bool(code & 1)};
            return std::make_pair(q, *clique);
        }
    }
    return std::nullopt;
}

namespace {

// tips returned by pendant_extension touch the subtree in exactly one
// vertex; recover that pairing
std::vector<int> pair_tips(const Graph& q, const VertexSet& tree, const VertexSet& pivots,
                           const VertexSet& tips) {
    std::vector<int> tip_of(q.order(), -1);
    for (int w : tips) {
        int anchor = -1;
        for (int v : tree)
            if (q.adjacent(w, v)) {
                if (anchor != -1) throw InternalError("pendant tip touches two subtree vertices");
                anchor = v;
            }
        if (anchor == -1) throw InternalError("pendant tip misses the subtree");
        tip_of[anchor] = w;
    }
    std::vector<int> out;
    for (int v : pivots) {
        if (tip_of[v] == -1) throw InternalError("pivot received no pendant tip");
        out.push_back(tip_of[v]);
    }
    return out;
}

std::string count_detail(std::initializer_list<std::pair<const char*, int>> items) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, value] : items) {
        if (!first) os << ", ";
        os << name << " " << value;
        first = false;
    }
    return os.str();
}

}  // namespace

ExtractionOutcome expand_hairy(const Graph& g, const ContractionMap& cm, const Witness& hairy,
                               const VertexSet& contracted, int n) {
    if (hairy.spec.kind != FamilyKind::hairy_clique || hairy.spec.l != 1)
        throw PreconditionError("expand_hairy needs a hairy-clique witness of leg length 1");
    if (n < 1) throw PreconditionError("target parameter must be at least 1");
    int m = hairy.spec.n;
    Graph q = contracted_graph(g, cm);
    check_contraction(g, cm, q);
    if (!verify_witness(q, hairy))
        throw PreconditionError("witness does not embed in the contracted graph");
    require_sorted(contracted, q.order(), "contracted vertex set");
    std::vector<char> in_u(q.order(), 0);
    for (int v : contracted) {
        if (!cm.is_contracted(v)) throw PreconditionError("contracted set names an uncontracted vertex");
        in_u[v] = 1;
    }
    for (int i = 0; i < m; ++i)
        if (in_u[hairy.embedding[i]])
            throw PreconditionError("witness clique must avoid the contracted vertices");

    // split the pendant leaves: contracted leaves expand in place, by
    // whether both edge ends or just one see the clique vertex; leaves
    // outside the contracted set feed the pendant-extension route
    std::vector<int> t_idx, h_idx, out_idx;
    for (int i = 0; i < m; ++i) {
        int leaf = hairy.embedding[m + i];
        if (!in_u[leaf]) {
            out_idx.push_back(i);
            continue;
        }
        int v_pre = cm.sole_preimage(hairy.embedding[i]);
        Edge e = cm.contracted_edge_of.at(leaf);
        if (g.adjacent(e.a, v_pre) && g.adjacent(e.b, v_pre))
            t_idx.push_back(i);
        else
            h_idx.push_back(i);
    }
    int k = static_cast<int>(t_idx.size() + h_idx.size());

    auto build_pigeonhole = [&]() -> std::optional<Witness> {
        bool use_t = t_idx.size() >= h_idx.size();  // ties prefer the triangle form
        const std::vector<int>& whole = use_t ? t_idx : h_idx;
        int t = std::min(n, static_cast<int>(whole.size()));
        if (t == 0) return std::nullopt;
        std::vector<int> cls(whole.begin(), whole.begin() + t);
        std::vector<int> emb;
        for (int i : cls) emb.push_back(cm.sole_preimage(hairy.embedding[i]));
        for (int i : cls) {
            int v_pre = cm.sole_preimage(hairy.embedding[i]);
            Edge e = cm.contracted_edge_of.at(hairy.embedding[m + i]);
            if (use_t) {
                emb.push_back(e.a);
                emb.push_back(e.b);
            } else {
                int p1 = g.adjacent(e.a, v_pre) ? e.a : e.b;
                emb.push_back(p1);
                emb.push_back(p1 == e.a ? e.b : e.a);
            }
        }
        FamilySpec spec =
            use_t ? FamilySpec::triangle_clique(t) : FamilySpec::hairy_clique(t, 2);
        return Witness{spec, std::move(emb)};
    };

    auto build_lemma = [&]() -> std::optional<Witness> {
        int t = std::min(n, static_cast<int>(out_idx.size()));
        if (t == 0) return std::nullopt;
        std::vector<int> slots(out_idx.begin(), out_idx.begin() + t);
        VertexSet tree, pivots;
        for (int i : slots) {
            tree.push_back(hairy.embedding[i]);
            tree.push_back(hairy.embedding[m + i]);
            pivots.push_back(hairy.embedding[m + i]);
        }
        tree = make_vertex_set(tree);
        pivots = make_vertex_set(pivots);
        VertexSet tips;
        try {
            tips = pendant_extension(q, tree, pivots);
        } catch (const PreconditionError&) {
            return std::nullopt;
        }
        std::vector<int> tip_for = pair_tips(q, tree, pivots, tips);
        std::vector<int> emb;
        for (int i : slots) emb.push_back(cm.sole_preimage(hairy.embedding[i]));
        for (std::size_t slot = 0; slot < slots.size(); ++slot) {
            int i = slots[slot];
            int leaf_pre = cm.sole_preimage(hairy.embedding[m + i]);
            int leaf_img = hairy.embedding[m + i];
            // pivots were sorted; find the tip of this leaf
            auto at = std::lower_bound(pivots.begin(), pivots.end(), leaf_img) - pivots.begin();
            int tip = tip_for[at];
            emb.push_back(leaf_pre);
            emb.push_back(expand_vertex(g, cm, tip, leaf_pre));
        }
        return Witness{FamilySpec::hairy_clique(t, 2), std::move(emb)};
    };

    std::optional<Witness> result;
    if (k >= 2 * n) {
        result = build_pigeonhole();
    } else if (static_cast<int>(out_idx.size()) >= n) {
        result = build_lemma();
    } else {
        auto pig = build_pigeonhole();
        auto lem = build_lemma();
        result = pig;
        if (lem && (!result || lem->spec.n > result->spec.n)) result = lem;
    }
    if (!result)
        return ExtractionOutcome::fail(
            "expand-hairy", "no usable pendant leaves (" +
                                count_detail({{"triangle-type", int(t_idx.size())},
                                              {"path-type", int(h_idx.size())},
                                              {"outside", int(out_idx.size())}}) +
                                ")");
    if (!verify_witness(g, *result)) throw InternalError("hairy expansion failed verification");
    return ExtractionOutcome::succeed(std::move(*result));
}

ExtractionOutcome expand_star(const Graph& g, const ContractionMap& cm, const Witness& star,
                              const VertexSet& contracted, int n) {
    if (star.spec.kind != FamilyKind::star)
        throw PreconditionError("expand_star needs a star witness");
    if (n < 1) throw PreconditionError("target parameter must be at least 1");
    Graph q = contracted_graph(g, cm);
    check_contraction(g, cm, q);
    if (!verify_witness(q, star))
        throw PreconditionError("witness does not embed in the contracted graph");
    require_sorted(contracted, q.order(), "contracted vertex set");
    std::vector<char> in_u(q.order(), 0);
    for (int v : contracted) {
        if (!cm.is_contracted(v)) throw PreconditionError("contracted set names an uncontracted vertex");
        in_u[v] = 1;
    }

    int c = star.embedding[0];
    std::vector<int> leaves(star.embedding.begin() + 1, star.embedding.end());

    // spider legs out of star leaves: pendant-extend each leaf, then expand
    // any contracted tip toward its leaf
    auto build_legs = [&](int center_pre, const std::vector<int>& all_legs) -> std::optional<Witness> {
        int t = std::min(n, static_cast<int>(all_legs.size()));
        if (t == 0) return std::nullopt;
        std::vector<int> legs(all_legs.begin(), all_legs.begin() + t);
        VertexSet tree = make_vertex_set(legs);
        tree.push_back(c);
        tree = make_vertex_set(tree);
        VertexSet pivots = make_vertex_set(legs);
        VertexSet tips;
        try {
            tips = pendant_extension(q, tree, pivots);
        } catch (const PreconditionError&) {
            return std::nullopt;
        }
        std::vector<int> tip_for = pair_tips(q, tree, pivots, tips);
        std::vector<int> emb{center_pre};
        for (std::size_t slot = 0; slot < pivots.size(); ++slot) {
            int leaf_pre = cm.sole_preimage(pivots[slot]);
            emb.push_back(leaf_pre);
            emb.push_back(expand_vertex(g, cm, tip_for[slot], leaf_pre));
        }
        return Witness{FamilySpec::spider(t, 2), std::move(emb)};
    };

    std::optional<Witness> result;
    std::string detail;
    if (in_u[c]) {
        // pick the edge end that carries more leaves, ties to the lower end
        Edge ec = cm.contracted_edge_of.at(c);
        std::vector<int> la, lb;
        for (int leaf : leaves) {
            int pre = cm.sole_preimage(leaf);
            if (g.adjacent(ec.a, pre)) la.push_back(leaf);
            if (g.adjacent(ec.b, pre)) lb.push_back(leaf);
        }
        int x = la.size() >= lb.size() ? ec.a : ec.b;
        const std::vector<int>& mine = la.size() >= lb.size() ? la : lb;
        result = build_legs(x, mine);
        detail = count_detail({{"centre-end leaves", int(mine.size())}});
    } else {
        int cp = cm.sole_preimage(c);
        std::vector<int> outside, f_leaves, s_leaves;
        for (int leaf : leaves) {
            if (!in_u[leaf]) {
                outside.push_back(leaf);
                continue;
            }
            Edge e = cm.contracted_edge_of.at(leaf);
            if (g.adjacent(e.a, cp) && g.adjacent(e.b, cp))
                f_leaves.push_back(leaf);
            else
                s_leaves.push_back(leaf);
        }

        auto build_pigeonhole = [&]() -> std::optional<Witness> {
            bool use_f = f_leaves.size() >= s_leaves.size();  // ties prefer friendship
            const std::vector<int>& whole = use_f ? f_leaves : s_leaves;
            int t = std::min(n, static_cast<int>(whole.size()));
            if (t == 0) return std::nullopt;
            std::vector<int> cls(whole.begin(), whole.begin() + t);
            std::vector<int> emb{cp};
            for (int leaf : cls) {
                Edge e = cm.contracted_edge_of.at(leaf);
                if (use_f) {
                    emb.push_back(e.a);
                    emb.push_back(e.b);
                } else {
                    int p1 = g.adjacent(e.a, cp) ? e.a : e.b;
                    emb.push_back(p1);
                    emb.push_back(p1 == e.a ? e.b : e.a);
                }
            }
            FamilySpec spec = use_f ? FamilySpec::friendship(t) : FamilySpec::spider(t, 2);
            return Witness{spec, std::move(emb)};
        };

        int out_count = static_cast<int>(outside.size());
        int u_count = static_cast<int>(f_leaves.size() + s_leaves.size());
        if (out_count >= n) {
            result = build_legs(cp, outside);
        } else if (u_count >= 2 * n) {
            result = build_pigeonhole();
        } else {
            auto lem = build_legs(cp, outside);
            auto pig = build_pigeonhole();
            result = lem;
            if (pig && (!result || pig->spec.n > result->spec.n)) result = pig;
        }
        detail = count_detail({{"outside", out_count},
                               {"triangle-type", int(f_leaves.size())},
                               {"path-type", int(s_leaves.size())}});
    }

    if (!result) return ExtractionOutcome::fail("expand-star", "no usable leaves (" + detail + ")");
    if (!verify_witness(g, *result)) throw InternalError("star expansion failed verification");
    return ExtractionOutcome::succeed(std::move(*result));
}

ExtractionOutcome extract_path_clique_star(const Graph& g, int n) {
    require_connected(g, "extract_path_clique_star");
    if (n < 1) throw PreconditionError("target parameter must be at least 1");
    FamilySearch p = max_family_parameter(g, FamilyKind::path);
    FamilySearch c = max_family_parameter(g, FamilyKind::clique);
    FamilySearch s = max_family_parameter(g, FamilyKind::star);
    const FamilySearch* best = &p;
    if (c.n_max > best->n_max) best = &c;
    if (s.n_max > best->n_max) best = &s;
    if (best->n_max >= n && best->witness) {
        if (!verify_witness(g, *best->witness))
            throw InternalError("search witness failed verification");
        return ExtractionOutcome::succeed(*best->witness);
    }
    return ExtractionOutcome::fail(
        "path-clique-star-search",
        "largest parameters below target: " + count_detail({{"path", p.n_max},
                                                            {"clique", c.n_max},
                                                            {"star", s.n_max}}));
}

namespace {

std::vector<int> inverse_map(const std::vector<int>& to_parent, int parent_order) {
    std::vector<int> inv(parent_order, -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) inv[to_parent[i]] = static_cast<int>(i);
    return inv;
}

// Clique branch shared by both searches: a clique meets an independent set
// in at most one vertex, so stripping the protected vertices loses at most
// one; the survivors are cut vertices and each gets a pendant. cap limits
// how many survivors are kept.
Witness clique_to_hairy(const Graph& g, const VertexSet& clique,
                        const std::vector<char>& excluded, int cap) {
    VertexSet c0;
    for (int v : clique)
        if (!excluded[v] && static_cast<int>(c0.size()) < cap) c0.push_back(v);
    if (c0.empty()) throw PreconditionError("clique lies inside the protected set");
    VertexSet tips = pendant_extension(g, c0, c0);
    std::vector<int> tip_for = pair_tips(g, c0, c0, tips);
    std::vector<int> emb(c0.begin(), c0.end());
    emb.insert(emb.end(), tip_for.begin(), tip_for.end());
    return Witness{FamilySpec::hairy_clique(static_cast<int>(c0.size()), 1), std::move(emb)};
}

}  // namespace

ExtractionOutcome extract_independence_witness(const Graph& g, int n) {
    require_connected(g, "extract_independence_witness");
    if (n < 1) throw PreconditionError("target parameter must be at least 1");

    // delete non-cut vertices outside a maximum independent set, then look
    // for path / clique / star one size up; a clique turns into a pendant
    // clique since its surviving vertices are all cut vertices
    VertexSet u = maximum_independent_set(g);
    Pruned pr = prune_keep(g, u);
    std::vector<int> inv = inverse_map(pr.to_parent, g.order());
    std::vector<char> in_u(pr.graph.order(), 0);
    for (int v : u) in_u[inv[v]] = 1;

    ExtractionOutcome inner = extract_path_clique_star(pr.graph, n + 1);
    if (!inner.ok()) return inner;

    Witness w = *inner.witness;
    if (w.spec.kind == FamilyKind::clique) {
        // keep n clique vertices avoiding U; they are all cut vertices and
        // each sprouts a pendant
        try {
            w = clique_to_hairy(pr.graph, make_vertex_set(w.embedding), in_u, n);
        } catch (const PreconditionError& e) {
            return ExtractionOutcome::fail("pendant-extension", e.what());
        }
    }
    for (int& v : w.embedding) v = pr.to_parent[v];
    if (!verify_witness(g, w)) throw InternalError("independence witness failed verification");
    return ExtractionOutcome::succeed(std::move(w));
}

ExtractionOutcome extract_induced_matching_witness(const Graph& g, int n) {
    require_connected(g, "extract_induced_matching_witness");
    if (n < 1) throw PreconditionError("target parameter must be at least 1");

    EdgeSet m = maximum_induced_matching(g);
    if (m.empty()) {
        // connected and edgeless: a single vertex
        if (n <= 1 && g.order() >= 1)
            return ExtractionOutcome::succeed(Witness{FamilySpec::path(1), {0}});
        return ExtractionOutcome::fail("induced-matching", "host has no edges");
    }

    // delete non-cut vertices away from the matched pairs, then contract the
    // matching; the quotient keeps the all-cut-vertices property and the
    // contracted images form an independent set
    VertexSet vm;
    for (const Edge& e : m) {
        vm.push_back(e.a);
        vm.push_back(e.b);
    }
    vm = make_vertex_set(vm);
    Pruned pr = prune_keep(g, vm);
    std::vector<int> inv1 = inverse_map(pr.to_parent, g.order());
    EdgeSet mp;
    for (const Edge& e : m) mp.emplace_back(inv1[e.a], inv1[e.b]);
    mp = make_edge_set(mp);

    Contraction con = contract_matching(pr.graph, mp);
    const Graph& q = con.graph;
    VertexSet u;
    for (int v = 0; v < q.order(); ++v)
        if (con.map.is_contracted(v)) u.push_back(v);
    std::vector<char> in_u(q.order(), 0);
    for (int v : u) in_u[v] = 1;

    // largest of path / clique / star in the quotient decides the branch;
    // ties prefer path, then clique, then star
    FamilySearch p = max_family_parameter(q, FamilyKind::path);
    FamilySearch k = max_family_parameter(q, FamilyKind::clique);
    FamilySearch s = max_family_parameter(q, FamilyKind::star);
    int best = std::max({p.n_max, k.n_max, s.n_max});

    ExtractionOutcome out = ExtractionOutcome::fail("quotient-search", "empty quotient");
    if (p.n_max == best && p.witness) {
        std::vector<int> expanded = expand_contracted_path(pr.graph, con.map, p.witness->embedding);
        if (static_cast<int>(expanded.size()) >= n) {
            std::vector<int> trimmed(expanded.begin(), expanded.begin() + n);
            out = ExtractionOutcome::succeed(Witness{FamilySpec::path(n), std::move(trimmed)});
        } else {
            out = ExtractionOutcome::fail(
                "path-expansion", "expanded path has " + std::to_string(expanded.size()) +
                                      " vertices, target " + std::to_string(n));
        }
    } else if (k.n_max == best && k.witness) {
        // the quotient hairy clique keeps every available slot; the
        // pigeonhole inside expand_hairy narrows to n
        try {
            Witness hairy = clique_to_hairy(q, make_vertex_set(k.witness->embedding), in_u,
                                            q.order());
            out = expand_hairy(pr.graph, con.map, hairy, u, n);
        } catch (const PreconditionError& e) {
            out = ExtractionOutcome::fail("pendant-extension", e.what());
        }
    } else if (s.witness) {
        out = expand_star(pr.graph, con.map, *s.witness, u, n);
    }
    if (!out.ok()) return out;
    if (out.witness->spec.n < n)
        return ExtractionOutcome::fail(
            "expansion", "expanded witness parameter " + std::to_string(out.witness->spec.n) +
                             " below target " + std::to_string(n));

    Witness w = *out.witness;
    for (int& v : w.embedding) v = pr.to_parent[v];
    if (!verify_witness(g, w)) throw InternalError("induced matching witness failed verification");
    return ExtractionOutcome::succeed(std::move(w));
}

ExtractionOutcome extract_matching_witness(const Graph& g, int n, int r) {
    require_connected(g, "extract_matching_witness");
    if (n < 1) throw PreconditionError("target parameter must be at least 1");
    if (r < n) throw PreconditionError("r must be at least n");

    EdgeSet m = maximum_matching(g);
    std::vector<std::pair<int, int>> oriented;
    for (const Edge& e : m) oriented.emplace_back(e.a, e.b);
    ColoredCompleteGraph h = color_matching_pairs(g, oriented);

    auto mono = monochromatic_clique(h, 2 * r);
    if (!mono)
        return ExtractionOutcome::fail(
            "monochromatic-clique",
            "no monochromatic set of " + std::to_string(2 * r) + " pairs among " +
                std::to_string(m.size()) + " matched pairs");
    const auto& [quad, idx] = *mono;

    auto finish = [&](Witness w) {
        if (!verify_witness(g, w)) throw InternalError("matching witness failed verification");
        return ExtractionOutcome::succeed(std::move(w));
    };

    if (quad.a || quad.b) {
        VertexSet side;
        for (int i : idx) side.push_back(quad.a ? oriented[i].first : oriented[i].second);
        side = make_vertex_set(side);
        return finish(Witness{FamilySpec::clique(static_cast<int>(side.size())),
                              std::vector<int>(side.begin(), side.end())});
    }
    if (!quad.c && !quad.d) {
        // fully independent pairs: a large induced matching sits here, so the
        // induced-matching pipeline takes over; its clique-flavoured answers
        // contain the clique directly
        ExtractionOutcome rec = extract_induced_matching_witness(g, n);
        if (!rec.ok())
            return ExtractionOutcome::fail("induced-matching-recursion",
                                           rec.failure->stage + ": " + rec.failure->detail);
        Witness w = *rec.witness;
        if (w.spec.kind == FamilyKind::hairy_clique || w.spec.kind == FamilyKind::triangle_clique) {
            VertexSet clique(w.embedding.begin(), w.embedding.begin() + w.spec.n);
            clique = make_vertex_set(clique);
            w = Witness{FamilySpec::clique(w.spec.n),
                        std::vector<int>(clique.begin(), clique.end())};
        }
        return finish(std::move(w));
    }
    if (quad.c && quad.d) {
        VertexSet xs, ys;
        for (int i : idx) {
            xs.push_back(oriented[i].first);
            ys.push_back(oriented[i].second);
        }
        xs = make_vertex_set(xs);
        ys = make_vertex_set(ys);
        std::vector<int> emb(xs.begin(), xs.end());
        emb.insert(emb.end(), ys.begin(), ys.end());
        return finish(Witness{FamilySpec::biclique(static_cast<int>(xs.size()),
                                                   static_cast<int>(ys.size())),
                              std::move(emb)});
    }
    // one-way cross edges: first r pairs on one side, last r on the other
    VertexSet a_side, b_side;
    for (int t = 0; t < r; ++t) {
        int i = idx[t], j = idx[idx.size() - r + t];
        if (quad.c) {
            a_side.push_back(oriented[i].first);
            b_side.push_back(oriented[j].second);
        } else {
            a_side.push_back(oriented[i].second);
            b_side.push_back(oriented[j].first);
        }
    }
    a_side = make_vertex_set(a_side);
    b_side = make_vertex_set(b_side);
    std::vector<int> emb(a_side.begin(), a_side.end());
    emb.insert(emb.end(), b_side.begin(), b_side.end());
    return finish(Witness{FamilySpec::biclique(r, r), std::move(emb)});
}

}  // namespace rwit
