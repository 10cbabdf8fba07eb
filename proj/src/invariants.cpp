#include "rwit/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rwit/errors.hpp"
#include "rwit/families.hpp"

namespace rwit {

Rational::Rational(long long n, long long d) {
    if (d == 0) throw PreconditionError("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& x, const Rational& y) { return x.num * y.den < y.num * x.den; }
bool operator<=(const Rational& x, const Rational& y) { return x.num * y.den <= y.num * x.den; }

int independence_number(const Graph& g) { return max_clique_size(complement(g)); }

VertexSet maximum_independent_set(const Graph& g) { return maximum_clique(complement(g)); }

int vertex_cover_number(const Graph& g) { return g.order() - independence_number(g); }

namespace {

// Vertices of the conflict graph are the edges of g in lexicographic order;
// two edges conflict when they share a vertex or an edge joins them. Induced
// matchings of g are exactly the independent sets of the conflict graph.
Graph induced_matching_conflict(const Graph& g, EdgeSet& edge_list) {
    edge_list = g.edges();
    int m = static_cast<int>(edge_list.size());
    EdgeSet conflicts;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge& e = edge_list[i];
            const Edge& f = edge_list[j];
            bool clash = e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b ||
                         g.adjacent(e.a, f.a) || g.adjacent(e.a, f.b) ||
                         g.adjacent(e.b, f.a) || g.adjacent(e.b, f.b);
            if (clash) conflicts.emplace_back(i, j);
        }
    return Graph(m, conflicts);
}

}  // namespace

int induced_matching_number(const Graph& g) {
    EdgeSet edge_list;
    Graph conflict = induced_matching_conflict(g, edge_list);
    return independence_number(conflict);
}

EdgeSet maximum_induced_matching(const Graph& g) {
    EdgeSet edge_list;
    Graph conflict = induced_matching_conflict(g, edge_list);
    EdgeSet out;
    for (int idx : maximum_independent_set(conflict)) out.push_back(edge_list[idx]);
    return out;
}

FamilyMatching induced_family_matching(const Graph& g, const FamilyList& family) {
    if (family.empty()) throw PreconditionError("family list must be non-empty");
    for (const Graph& h : family) {
        if (h.order() == 0) throw PreconditionError("family members must be non-empty");
        if (!is_connected(h)) throw PreconditionError("family members must be connected");
    }

    // candidate placements: distinct induced copies of any family member
    std::set<VertexSet> images;
    for (const Graph& h : family)
        if (h.order() <= g.order())
            for (VertexSet& s : induced_copies(g, h)) images.insert(std::move(s));
    std::vector<VertexSet> placements(images.begin(), images.end());

    // placements clash when they intersect or an edge joins them; chosen
    // placements are then exactly the components of their union
    int p = static_cast<int>(placements.size());
    EdgeSet conflicts;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            bool clash = false;
            for (int u : placements[i]) {
                for (int v : placements[j])
                    if (u == v || g.adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                if (clash) break;
            }
            if (clash) conflicts.emplace_back(i, j);
        }
    Graph conflict(p, conflicts);

    FamilyMatching out;
    for (int idx : maximum_independent_set(conflict)) out.components.push_back(placements[idx]);
    out.count = static_cast<int>(out.components.size());
    return out;
}

int induced_family_matching_number(const Graph& g, const FamilyList& family) {
    return induced_family_matching(g, family).count;
}

}  // namespace rwit
