#include "rwit/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "rwit/errors.hpp"

namespace rwit {

Edge::Edge(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {
    if (u == v) throw PreconditionError("edge endpoints must be distinct");
}

VertexSet make_vertex_set(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

EdgeSet make_edge_set(EdgeSet edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

Graph::Graph(int order) : order_(order), words_(order > 0 ? (order + 63) / 64 : 0) {
    if (order < 0) throw PreconditionError("graph order must be non-negative");
    adj_.assign(std::size_t(order_) * words_, 0);
}

Graph::Graph(int order, const EdgeSet& edges) : Graph(order) {
    for (const Edge& e : edges) {
        if (e.a < 0 || e.b >= order_)
            throw PreconditionError("edge endpoint out of range");
        set_edge(e.a, e.b);
    }
}

void Graph::set_edge(int u, int v) {
    adj_[std::size_t(u) * words_ + std::size_t(v >> 6)] |= std::uint64_t(1) << (v & 63);
    adj_[std::size_t(v) * words_ + std::size_t(u >> 6)] |= std::uint64_t(1) << (u & 63);
}

int Graph::degree(int v) const {
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < order_; ++v) total += degree(v);
    return total / 2;
}

EdgeSet Graph::edges() const {
    EdgeSet out;
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::neighbors(int v) const {
    VertexSet out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            int bit = std::countr_zero(bits);
            out.push_back(w * 64 + bit);
            bits &= bits - 1;
        }
    }
    return out;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.set_edge(u, v);
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return components(g).size() == 1;
}

VertexSet cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("cut_vertices requires a connected graph");
    int n = g.order();
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1), root_children(n, 0);
    std::vector<char> cut(n, 0);
    std::vector<std::vector<int>> nbr(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.neighbors(v);

    // iterative lowpoint DFS from vertex 0
    int counter = 0;
    std::vector<std::pair<int, std::size_t>> stack;  // (vertex, next neighbor slot)
    num[0] = low[0] = counter++;
    stack.emplace_back(0, 0);
    while (!stack.empty()) {
        auto& [v, slot] = stack.back();
        if (slot < nbr[v].size()) {
            int w = nbr[v][slot++];
            if (num[w] == -1) {
                parent[w] = v;
                if (v == 0) ++root_children[0];
                num[w] = low[w] = counter++;
                stack.emplace_back(w, 0);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], num[w]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back().first;
                low[p] = std::min(low[p], low[v]);
                if (p != 0 && low[v] >= num[p]) cut[p] = 1;
            }
        }
    }
    if (root_children[0] > 1) cut[0] = 1;

    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    VertexSet vs = make_vertex_set(vertices);
    if (!vs.empty() && (vs.front() < 0 || vs.back() >= g.order()))
        throw PreconditionError("induced_subgraph vertex out of range");
    EdgeSet edges;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) edges.emplace_back(int(i), int(j));
    return {Graph(static_cast<int>(vs.size()), edges), std::move(vs)};
}

int ContractionMap::sole_preimage(int image) const {
    if (expansion_of[image].size() != 1)
        throw PreconditionError("image vertex has a contracted preimage");
    return expansion_of[image][0];
}

Contraction contract_matching(const Graph& g, const EdgeSet& matching) {
    int n = g.order();
    std::vector<int> partner(n, -1);
    for (const Edge& e : matching) {
        if (e.a < 0 || e.b >= n) throw PreconditionError("matching edge out of range");
        if (!g.adjacent(e.a, e.b)) throw PreconditionError("matching pair is not an edge");
        if (partner[e.a] != -1 || partner[e.b] != -1)
            throw PreconditionError("matching edges share a vertex");
        partner[e.a] = e.b;
        partner[e.b] = e.a;
    }

    // representative of each image: the smaller endpoint of a pair, the
    // vertex itself otherwise; images numbered by ascending representative
    std::vector<int> reps;
    for (int v = 0; v < n; ++v)
        if (partner[v] == -1 || partner[v] > v) reps.push_back(v);

    ContractionMap cm;
    cm.contracted_of.assign(n, -1);
    cm.expansion_of.resize(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        int v = reps[i];
        cm.contracted_of[v] = int(i);
        cm.expansion_of[i].push_back(v);
        if (partner[v] != -1) {
            cm.contracted_of[partner[v]] = int(i);
            cm.expansion_of[i].push_back(partner[v]);
            cm.contracted_edge_of.emplace(int(i), Edge(v, partner[v]));
        }
    }

    Graph out = contracted_graph(g, cm);
    return {std::move(out), std::move(cm)};
}

Graph contracted_graph(const Graph& g, const ContractionMap& cm) {
    EdgeSet edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            int iu = cm.contracted_of[u], iv = cm.contracted_of[v];
            if (iu != iv) edges.emplace_back(iu, iv);
        }
    return Graph(static_cast<int>(cm.expansion_of.size()), make_edge_set(edges));
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (v < static_cast<int>(labels.size()) && !labels[v].empty())
            out << " [label=\"" << labels[v] << "\"]";
        out << ";\n";
    }
    for (const Edge& e : g.edges()) out << "  " << e.a << " -- " << e.b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace rwit
