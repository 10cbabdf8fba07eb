#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rwit/graph.hpp"

namespace rwit {

// Parameterised graph families. Canonical vertex numbering (clique or centre
// vertices first, then attachment paths in order) is part of the contract:
//   path(n)            0-1-...-(n-1)
//   clique(n)          complete on 0..n-1
//   star(n)            centre 0, leaves 1..n
//   biclique(n, m)     parts 0..n-1 and n..n+m-1
//   hairy_clique(n,l)  clique 0..n-1; vertex i carries the path
//                      i - (n+il) - ... - (n+il+l-1), l edges long
//   triangle_clique(n) clique 0..n-1; vertex i carries triangle
//                      {i, n+2i, n+2i+1}
//   spider(n, l)       centre 0; leg i is 0 - (1+il) - ... - (1+il+l-1)
//   friendship(n)      centre 0; triangle i is {0, 1+2i, 2+2i}
// The general forms attach a copy of a base graph H through a broom: a path
// of l vertices whose first vertex is adjacent to every vertex of X in its
// copy of H and whose last vertex is the attachment endpoint.
enum class FamilyKind {
    path,
    clique,
    star,
    biclique,
    hairy_clique,
    triangle_clique,
    spider,
    friendship,
    general_broom,
    general_hairy,
    general_star,
};

std::string kind_name(FamilyKind kind);
std::optional<FamilyKind> kind_from_name(const std::string& name);

struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    int n = 0;  // main parameter
    int m = 0;  // biclique only: second part
    int l = 0;  // path or leg length where applicable
    std::optional<Graph> base;  // general forms: H
    VertexSet attach;           // general forms: X, non-empty subset of V(H)

    static FamilySpec path(int n);
    static FamilySpec clique(int n);
    static FamilySpec star(int n);
    static FamilySpec biclique(int n, int m);
    static FamilySpec hairy_clique(int n, int l);
    static FamilySpec triangle_clique(int n);
    static FamilySpec spider(int n, int l);
    static FamilySpec friendship(int n);
    static FamilySpec general_broom(Graph h, VertexSet x, int l);
    static FamilySpec general_hairy(Graph h, VertexSet x, int n, int l);
    static FamilySpec general_star(Graph h, VertexSet x, int n, int l);
};

Graph generate(const FamilySpec& spec);

// An embedding of generate(spec) into some host graph: embedding[p] is the
// host vertex carrying pattern vertex p.
struct Witness {
    FamilySpec spec;
    std::vector<int> embedding;
};

// First induced embedding of pattern in host under the deterministic search
// order, if one exists.
std::optional<std::vector<int>> find_induced_embedding(const Graph& host, const Graph& pattern);

// Distinct vertex sets S with host[S] isomorphic to pattern, sorted.
std::vector<VertexSet> induced_copies(const Graph& host, const Graph& pattern);

// Deterministic exact maximisers used by the extraction searches. The path
// result is a vertex sequence, the star result is centre plus leaves.
std::vector<int> longest_induced_path(const Graph& g);
struct InducedStar {
    int center = -1;
    VertexSet leaves;
};
InducedStar largest_induced_star(const Graph& g);

// Largest n with generate(kind, n) induced in host, exploiting monotone
// nesting of the single-parameter families. l is the fixed leg length for
// hairy_clique and spider; biclique searches balanced K_{n,n}.
struct FamilySearch {
    int n_max = 0;
    std::optional<Witness> witness;
};
FamilySearch max_family_parameter(const Graph& host, FamilyKind kind, int l = 0);

}  // namespace rwit
