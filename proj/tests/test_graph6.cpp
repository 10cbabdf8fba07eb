#include <string>

#include "doctest.h"
#include "rwit/errors.hpp"
#include "rwit/graph6.hpp"
#include "rwit/smallgraphs.hpp"

using namespace rwit;

TEST_CASE("graph6 golden decodings") {
    Graph k3 = parse_graph6("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.adjacent(0, 1));
    CHECK(k3.adjacent(0, 2));
    CHECK(k3.adjacent(1, 2));

    Graph two = parse_graph6("A?");
    CHECK(two.order() == 2);
    CHECK(two.edge_count() == 0);

    Graph p3 = parse_graph6("Bg");
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));

    Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);
}

TEST_CASE("graph6 golden encodings") {
    CHECK(write_graph6(parse_graph6("Bw")) == "Bw");
    CHECK(write_graph6(Graph(1)) == "@");
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(write_graph6(p3) == "Bg");
}

TEST_CASE("graph6 optional header prefix is stripped") {
    Graph g = parse_graph6(">>graph6<<Bw");
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("graph6 long-form order encoding") {
    // 63 vertices switches to the '~' + 3 sextet form
    Graph g(63);
    std::string s = write_graph6(g);
    REQUIRE(s.size() >= 4);
    CHECK(s[0] == '~');
    CHECK(s[1] != '~');
    Graph back = parse_graph6(s);
    CHECK(back.order() == 63);
    CHECK(back.edge_count() == 0);
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    // character below the printable range
    CHECK_THROWS_AS(parse_graph6(std::string(1, ' ')), ParseError);
    // truncated adjacency section for a 3-vertex graph
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);
    // trailing garbage after the adjacency bits
    CHECK_THROWS_AS(parse_graph6("Bw!"), ParseError);
    // '~~' (orders beyond 258047) is unsupported
    CHECK_THROWS_AS(parse_graph6("~~?????"), ParseError);

    try {
        parse_graph6("Bw!");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}

TEST_CASE("graph6 rejects nonzero padding bits") {
    // K_1,2 on 3 vertices uses 3 adjacency bits; the low 3 bits of the
    // single payload character must be zero
    CHECK_THROWS_AS(parse_graph6("Bq"), ParseError);
}

TEST_CASE("graph6 round trip is byte-identical on all graphs up to 6 vertices") {
    for (int order = 1; order <= 6; ++order) {
        for (const Graph& g : all_graphs(order)) {
            std::string s = write_graph6(g);
            Graph back = parse_graph6(s);
            CHECK(back == g);
            CHECK(write_graph6(back) == s);
        }
    }
}
