#pragma once

#include <climits>
#include <string>
#include <vector>

#include "rwit/graph.hpp"

namespace rwit {

// Exact rational value. Denominator stays positive; values produced by the
// fractional matching solver have denominator 1 or 2.
struct Rational {
    long long num = 0;
    long long den = 1;
    Rational() = default;
    Rational(long long n, long long d);
    friend bool operator==(const Rational&, const Rational&) = default;
    std::string str() const;
};
bool operator<(const Rational& x, const Rational& y);
bool operator<=(const Rational& x, const Rational& y);

// Non-empty list of connected pattern graphs.
using FamilyList = std::vector<Graph>;

// All optimizers are exact. The *_number functions return just the value;
// the witness functions return the lexicographically least optimum under
// the sorted-vertex (resp. sorted-edge) encoding.
int independence_number(const Graph& g);
VertexSet maximum_independent_set(const Graph& g);

int matching_number(const Graph& g);
EdgeSet maximum_matching(const Graph& g);

int induced_matching_number(const Graph& g);
EdgeSet maximum_induced_matching(const Graph& g);

int vertex_cover_number(const Graph& g);

Rational fractional_matching_number(const Graph& g);

struct FamilyMatching {
    int count = 0;
    std::vector<VertexSet> components;  // pairwise disjoint, non-adjacent
};
// Largest number of components of an induced subgraph whose components are
// each isomorphic to a member of the family.
FamilyMatching induced_family_matching(const Graph& g, const FamilyList& family);
int induced_family_matching_number(const Graph& g, const FamilyList& family);

// Exact maximum clique; stop_at short-circuits the search once a clique of
// that size is known to exist.
int max_clique_size(const Graph& g, int stop_at = INT_MAX);
VertexSet maximum_clique(const Graph& g);

}  // namespace rwit
