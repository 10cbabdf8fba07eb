#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rwit {

// Unordered vertex pair, stored with a <= b.
struct Edge {
    int a;
    int b;
    Edge(int u, int v);
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free vertex indices.
using VertexSet = std::vector<int>;
using EdgeSet = std::vector<Edge>;

VertexSet make_vertex_set(std::vector<int> vertices);
EdgeSet make_edge_set(EdgeSet edges);

// Finite simple undirected graph on vertices 0..order-1. Immutable after
// construction; adjacency is a packed bit matrix, one row per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, const EdgeSet& edges);

    int order() const { return order_; }
    bool adjacent(int u, int v) const {
        return (adj_[std::size_t(u) * words_ + std::size_t(v >> 6)] >> (v & 63)) & 1u;
    }
    int degree(int v) const;
    long long edge_count() const;
    EdgeSet edges() const;             // lexicographically sorted
    VertexSet neighbors(int v) const;  // ascending

    const std::uint64_t* row(int v) const { return adj_.data() + std::size_t(v) * words_; }
    int row_words() const { return words_; }

    bool operator==(const Graph&) const = default;

private:
    int order_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> adj_;

    void set_edge(int u, int v);
    friend Graph complement(const Graph&);
};

Graph complement(const Graph& g);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

// Vertices whose removal disconnects g. Requires g connected.
VertexSet cut_vertices(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // new index -> index in the parent graph
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

// Maps between a graph and the quotient produced by contracting a matching.
// Image vertices are numbered by ascending smallest preimage vertex.
struct ContractionMap {
    std::vector<int> contracted_of;              // original -> image
    std::vector<std::vector<int>> expansion_of;  // image -> 1 or 2 originals, sorted
    std::map<int, Edge> contracted_edge_of;      // image -> contracted edge, pairs only

    bool is_contracted(int image) const { return expansion_of[image].size() == 2; }
    int sole_preimage(int image) const;  // requires a 1-vertex preimage
};

struct Contraction {
    Graph graph;
    ContractionMap map;
};

// Contract each matching edge to a single vertex. matching must be a valid
// matching in g; the contracted images of the pairs are pairwise distinct.
Contraction contract_matching(const Graph& g, const EdgeSet& matching);

// Rebuilds the quotient graph described by cm (images adjacent iff some
// preimage pair is adjacent in g).
Graph contracted_graph(const Graph& g, const ContractionMap& cm);

std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {});

}  // namespace rwit
