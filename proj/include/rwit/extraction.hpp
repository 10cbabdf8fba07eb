#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rwit/families.hpp"
#include "rwit/graph.hpp"

namespace rwit {

// Per-pair adjacency pattern of two oriented matching edges (x_i, y_i),
// (x_j, y_j) with i < j: a = x_i x_j, b = y_i y_j, c = x_i y_j, d = y_i x_j.
struct ColorQuad {
    bool a = false, b = false, c = false, d = false;
    int code() const { return (a << 3) | (b << 2) | (c << 1) | int(d); }
    friend bool operator==(const ColorQuad&, const ColorQuad&) = default;
};

struct ColoredCompleteGraph {
    int order = 0;
    std::vector<ColorQuad> colors;  // pair (i, j), i < j, at j*(j-1)/2 + i
    ColorQuad color(int i, int j) const;
};

ColoredCompleteGraph color_matching_pairs(const Graph& g,
                                          const std::vector<std::pair<int, int>>& oriented);

// Smallest-colour-code monochromatic clique of the requested size, if any;
// the witness is the lexicographically least clique of that colour.
std::optional<std::pair<ColorQuad, VertexSet>> monochromatic_clique(
    const ColoredCompleteGraph& h, int k);

struct ExtractionFailure {
    std::string stage;
    std::string detail;
};

// Either a verified witness or a structured failure naming the stage that
// could not proceed.
struct ExtractionOutcome {
    std::optional<Witness> witness;
    std::optional<ExtractionFailure> failure;

    bool ok() const { return witness.has_value(); }
    static ExtractionOutcome succeed(Witness w) { return {std::move(w), std::nullopt}; }
    static ExtractionOutcome fail(std::string stage, std::string detail) {
        return {std::nullopt, ExtractionFailure{std::move(stage), std::move(detail)}};
    }
};

// For each pivot v_i (a cut vertex of g, inside the connected set `subtree`
// but not a cut vertex of its induced subgraph), picks the smallest
// neighbour of v_i inside the first subtree-avoiding component of g - v_i,
// components ordered by smallest vertex. The picked vertices are pairwise
// non-adjacent, each touches the subtree only at its own pivot, and the
// result is sorted.
VertexSet pendant_extension(const Graph& g, const VertexSet& subtree, const VertexSet& pivots);

// Repeatedly deletes the smallest-index unprotected non-cut vertex until
// every unprotected vertex is a cut vertex of what remains.
struct Pruned {
    Graph graph;
    std::vector<int> to_parent;  // new index -> index in g
};
Pruned prune_keep(const Graph& g, const VertexSet& protected_vertices);

// Expands an induced path of the contracted graph back into g. Contracted
// path vertices are replaced by one or both ends of their edge so the result
// is again an induced path, at least as long as the input.
std::vector<int> expand_contracted_path(const Graph& g, const ContractionMap& cm,
                                        const std::vector<int>& path);

// Turns a hairy-clique witness of the contracted graph (clique disjoint from
// the contracted vertex set) into a triangle-clique or length-2 hairy-clique
// witness of g, following the pendant-leaf split around the target n.
ExtractionOutcome expand_hairy(const Graph& g, const ContractionMap& cm, const Witness& hairy,
                               const VertexSet& contracted, int n);

// Same for a star witness of the contracted graph: spider or friendship.
ExtractionOutcome expand_star(const Graph& g, const ContractionMap& cm, const Witness& star,
                              const VertexSet& contracted, int n);

// Largest of induced path / clique / star with parameter >= n, preferring
// path, then clique, then star at equal size.
ExtractionOutcome extract_path_clique_star(const Graph& g, int n);

// Witness pipelines for connected hosts. Success is guaranteed above the
// theorems' thresholds; on smaller inputs they succeed exactly when every
// stage goes through and otherwise report the stage that stopped.
ExtractionOutcome extract_independence_witness(const Graph& g, int n);
ExtractionOutcome extract_induced_matching_witness(const Graph& g, int n);
ExtractionOutcome extract_matching_witness(const Graph& g, int n, int r);

// Direct re-check of a witness against the host adjacency; independent of
// the search code.
bool verify_witness(const Graph& g, const Witness& w);

}  // namespace rwit
