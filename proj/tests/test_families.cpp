#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "rwit/errors.hpp"
#include "rwit/families.hpp"
#include "rwit/graph.hpp"
#include "rwit/smallgraphs.hpp"

using namespace rwit;

TEST_CASE("generated family orders follow the closed forms") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(generate(FamilySpec::path(n)).order() == n);
        CHECK(generate(FamilySpec::clique(n)).order() == n);
        CHECK(generate(FamilySpec::star(n)).order() == n + 1);
        for (int l = 1; l <= 3; ++l) {
            CHECK(generate(FamilySpec::hairy_clique(n, l)).order() == n * (l + 1));
            CHECK(generate(FamilySpec::spider(n, l)).order() == n * l + 1);
        }
        CHECK(generate(FamilySpec::triangle_clique(n)).order() == 3 * n);
        CHECK(generate(FamilySpec::friendship(n)).order() == 2 * n + 1);
        CHECK(generate(FamilySpec::biclique(n, n)).order() == 2 * n);
    }
}

TEST_CASE("family generators build the expected small graphs") {
    // one hair on each end of an edge is just P_4
    Graph h21 = generate(FamilySpec::hairy_clique(2, 1));
    CHECK(canonical_form(h21) == canonical_form(generate(FamilySpec::path(4))));

    // length-1 legs collapse the spider to a star
    CHECK(generate(FamilySpec::spider(3, 1)) == generate(FamilySpec::star(3)));

    // a single shared triangle
    CHECK(canonical_form(generate(FamilySpec::friendship(1))) ==
          canonical_form(generate(FamilySpec::clique(3))));

    // K_1,1 is an edge
    CHECK(generate(FamilySpec::star(1)) == generate(FamilySpec::clique(2)));
}

TEST_CASE("triangle clique structure") {
    Graph t2 = generate(FamilySpec::triangle_clique(2));
    CHECK(t2.order() == 6);
    CHECK(t2.edge_count() == 7);
    CHECK(t2.adjacent(0, 1));
    CHECK(t2.adjacent(0, 2));
    CHECK(t2.adjacent(0, 3));
    CHECK(t2.adjacent(2, 3));
    CHECK(t2.adjacent(1, 4));
    CHECK(t2.adjacent(4, 5));
    CHECK_FALSE(t2.adjacent(1, 2));
}

TEST_CASE("generalized brooms attach a path to a vertex subset") {
    // broom over K_2 joined at both vertices with one path vertex: a triangle
    Graph broom = generate(FamilySpec::general_broom(generate(FamilySpec::clique(2)), {0, 1}, 1));
    CHECK(canonical_form(broom) == canonical_form(generate(FamilySpec::clique(3))));

    // a broom over K_1 is a path
    Graph tail = generate(FamilySpec::general_broom(Graph(1), {0}, 3));
    CHECK(canonical_form(tail) == canonical_form(generate(FamilySpec::path(4))));
}

TEST_CASE("induced embeddings are found exactly when the oracle finds one") {
    std::vector<FamilySpec> patterns = {
        FamilySpec::path(3),         FamilySpec::path(4),     FamilySpec::clique(3),
        FamilySpec::star(3),         FamilySpec::spider(2, 2), FamilySpec::hairy_clique(2, 1),
        FamilySpec::triangle_clique(1)};
    for (const Graph& host : connected_graphs_upto(5)) {
        for (const FamilySpec& spec : patterns) {
            Graph pat = generate(spec);
            auto emb = find_induced_embedding(host, pat);
            bool expect = oracles::contains_induced(host, pat);
            CHECK(emb.has_value() == expect);
            if (emb) {
                // embedding realizes the pattern exactly
                for (int i = 0; i < pat.order(); ++i)
                    for (int j = i + 1; j < pat.order(); ++j)
                        CHECK(pat.adjacent(i, j) == host.adjacent((*emb)[i], (*emb)[j]));
            }
        }
    }
}

TEST_CASE("longest induced path on hand-checked hosts") {
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    FamilySearch fs = max_family_parameter(c5, FamilyKind::path);
    CHECK(fs.n_max == 4);
    REQUIRE(fs.witness.has_value());
    CHECK(fs.witness->spec.n == 4);

    CHECK(max_family_parameter(generate(FamilySpec::clique(5)), FamilyKind::path).n_max == 2);
    CHECK(max_family_parameter(generate(FamilySpec::path(7)), FamilyKind::path).n_max == 7);
}

TEST_CASE("largest induced star on hand-checked hosts") {
    // C_4 holds K_1,2 centered anywhere; lex-least center is 0
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    FamilySearch fs = max_family_parameter(c4, FamilyKind::star);
    CHECK(fs.n_max == 2);
    REQUIRE(fs.witness.has_value());
    CHECK(fs.witness->embedding[0] == 0);
    CHECK(fs.witness->embedding[1] == 1);
    CHECK(fs.witness->embedding[2] == 3);

    CHECK(max_family_parameter(generate(FamilySpec::star(6)), FamilyKind::star).n_max == 6);
    // K_4 has no induced K_1,2: every two neighbors are adjacent
    CHECK(max_family_parameter(generate(FamilySpec::clique(4)), FamilyKind::star).n_max == 1);
}

TEST_CASE("maximum family parameter agrees with embedding search on small hosts") {
    for (const Graph& host : connected_graphs_upto(5)) {
        for (FamilyKind kind : {FamilyKind::path, FamilyKind::clique, FamilyKind::star}) {
            FamilySearch fs = max_family_parameter(host, kind);
            // reported parameter is achievable...
            if (fs.n_max > 0) {
                REQUIRE(fs.witness.has_value());
                Witness w = *fs.witness;
                Graph pat = generate(w.spec);
                for (int i = 0; i < pat.order(); ++i)
                    for (int j = i + 1; j < pat.order(); ++j)
                        CHECK(pat.adjacent(i, j) == host.adjacent(w.embedding[i], w.embedding[j]));
            }
            // ...and one more is not
            FamilySpec next = kind == FamilyKind::path    ? FamilySpec::path(fs.n_max + 1)
                              : kind == FamilyKind::clique ? FamilySpec::clique(fs.n_max + 1)
                                                           : FamilySpec::star(fs.n_max + 1);
            CHECK_FALSE(oracles::contains_induced(host, generate(next)));
        }
    }
}

TEST_CASE("distinct induced copies are enumerated without repeats") {
    Graph p4 = generate(FamilySpec::path(4));
    // P_4 holds two induced P_3 copies: {0,1,2} and {1,2,3}
    auto copies = induced_copies(p4, generate(FamilySpec::path(3)));
    REQUIRE(copies.size() == 2);
    CHECK(copies[0] == VertexSet{0, 1, 2});
    CHECK(copies[1] == VertexSet{1, 2, 3});

    Graph k4 = generate(FamilySpec::clique(4));
    // four induced triangles in K_4
    CHECK(induced_copies(k4, generate(FamilySpec::clique(3))).size() == 4);
}

TEST_CASE("family generators validate parameters") {
    CHECK_THROWS_AS(generate(FamilySpec::path(0)), PreconditionError);
    CHECK_THROWS_AS(generate(FamilySpec::hairy_clique(2, 0)), PreconditionError);
    CHECK_THROWS_AS(generate(FamilySpec::biclique(0, 3)), PreconditionError);
}
