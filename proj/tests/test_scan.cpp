#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "rwit/errors.hpp"
#include "rwit/families.hpp"
#include "rwit/graph6.hpp"
#include "rwit/scan.hpp"
#include "rwit/smallgraphs.hpp"

using namespace rwit;
using nlohmann::json;

namespace {

std::vector<GraphLine> catalogue_lines(int max_order) {
    std::vector<GraphLine> lines;
    int no = 1;
    for (const Graph& g : connected_graphs_upto(max_order))
        lines.push_back({"catalogue", no++, write_graph6(g)});
    return lines;
}

}  // namespace

TEST_CASE("theorem names round trip") {
    for (TheoremSelector t : {TheoremSelector::independence, TheoremSelector::induced_matching,
                              TheoremSelector::matching}) {
        auto back = theorem_from_name(theorem_name(t));
        REQUIRE(back.has_value());
        CHECK(*back == t);
    }
    CHECK_FALSE(theorem_from_name("nonsense").has_value());
    CHECK(theorem_name(TheoremSelector::induced_matching) == "induced-matching");
}

TEST_CASE("theorem target lists match the statements") {
    auto kinds = [](TheoremSelector t, int n) {
        std::vector<FamilyKind> ks;
        for (const FamilySpec& s : theorem_targets(t, n)) ks.push_back(s.kind);
        return ks;
    };
    CHECK(kinds(TheoremSelector::independence, 3) ==
          std::vector<FamilyKind>{FamilyKind::path, FamilyKind::hairy_clique, FamilyKind::star});
    CHECK(kinds(TheoremSelector::induced_matching, 3) ==
          std::vector<FamilyKind>{FamilyKind::path, FamilyKind::hairy_clique,
                                  FamilyKind::triangle_clique, FamilyKind::spider,
                                  FamilyKind::friendship});
    CHECK(kinds(TheoremSelector::matching, 3) ==
          std::vector<FamilyKind>{FamilyKind::path, FamilyKind::clique, FamilyKind::biclique,
                                  FamilyKind::spider, FamilyKind::friendship});
}

TEST_CASE("structure-free classification on hand-checked hosts") {
    // K_5 has no induced P_3, no H_3^2, T_3, S_3^2 or F_3
    CHECK(structure_free(generate(FamilySpec::clique(5)), TheoremSelector::induced_matching, 3));
    // P_9 contains P_3
    CHECK_FALSE(structure_free(generate(FamilySpec::path(9)), TheoremSelector::induced_matching, 3));
    // K_5 contains K_3, so it is not matching-structure-free
    CHECK_FALSE(structure_free(generate(FamilySpec::clique(5)), TheoremSelector::matching, 3));

    CHECK(relevant_parameter(generate(FamilySpec::clique(5)), TheoremSelector::independence) == 1);
    CHECK(relevant_parameter(generate(FamilySpec::path(7)), TheoremSelector::induced_matching) == 2);
    CHECK(relevant_parameter(generate(FamilySpec::clique(6)), TheoremSelector::matching) == 3);
}

TEST_CASE("invariant scan finds no violations on the small catalogue") {
    ScanConfig config;
    config.theorem = TheoremSelector::induced_matching;
    config.n = 2;
    std::vector<GraphLine> lines = catalogue_lines(5);
    json report = scan_invariants(lines, config);
    CHECK(report.at("kind") == "invariant-scan");
    CHECK(report.at("schema_version") == 1);
    CHECK(report.at("connected") == 31);
    CHECK(report.at("disconnected_skipped") == 0);
    CHECK(report.at("violations").empty());
}

TEST_CASE("invariant scan skips disconnected graphs and reports parse failures") {
    std::vector<GraphLine> lines = {
        {"stream", 1, write_graph6(generate(FamilySpec::path(3)))},
        {"stream", 2, "A?"},       // two isolated vertices: disconnected
        {"stream", 3, "not-g6!"},  // malformed
        {"stream", 4, write_graph6(generate(FamilySpec::clique(4)))},
    };
    ScanConfig config;
    json report = scan_invariants(lines, config);
    CHECK(report.at("connected") == 2);
    CHECK(report.at("disconnected_skipped") == 1);
    REQUIRE(report.at("parse_errors").size() == 1);
    const json& err = report.at("parse_errors")[0];
    CHECK(err.at("file") == "stream");
    CHECK(err.at("line") == 3);
}

TEST_CASE("scan reports are byte-identical across job counts") {
    std::vector<GraphLine> lines = catalogue_lines(6);
    ScanConfig one;
    one.jobs = 1;
    one.theorem = TheoremSelector::induced_matching;
    one.n = 3;
    ScanConfig eight = one;
    eight.jobs = 8;

    CHECK(report_to_string(scan_invariants(lines, one)) ==
          report_to_string(scan_invariants(lines, eight)));
    CHECK(report_to_string(empirical_threshold(lines, one)) ==
          report_to_string(empirical_threshold(lines, eight)));
}

TEST_CASE("threshold scan reproduces the clique extremal family at six vertices") {
    std::vector<GraphLine> lines = catalogue_lines(6);
    ScanConfig config;
    config.theorem = TheoremSelector::induced_matching;
    config.n = 3;
    json report = empirical_threshold(lines, config);
    CHECK(report.at("kind") == "threshold-scan");
    CHECK(report.at("empirical_threshold") == 2);
    std::vector<std::string> extremal = report.at("extremal");
    std::vector<std::string> want;
    for (int k = 2; k <= 6; ++k) want.push_back(write_graph6(generate(FamilySpec::clique(k))));
    CHECK(extremal == want);
}

TEST_CASE("threshold is one when every graph contains a target") {
    // all connected graphs on >= 2 vertices contain P_2 at n = 2
    std::vector<GraphLine> lines = catalogue_lines(4);
    ScanConfig config;
    config.theorem = TheoremSelector::induced_matching;
    config.n = 2;
    json report = empirical_threshold(lines, config);
    // K_1 is structure-free with induced matching number 0
    CHECK(report.at("empirical_threshold") == 1);
}

TEST_CASE("run_extraction wraps pipeline outcomes as JSON") {
    Graph h41 = generate(FamilySpec::hairy_clique(4, 1));
    json ok = run_extraction(h41, TheoremSelector::independence, 2, 2);
    CHECK(ok.at("ok") == true);
    CHECK(ok.at("theorem") == "independence");
    CHECK(ok.at("witness").at("family").at("kind") == "path");

    json fail = run_extraction(generate(FamilySpec::clique(9)), TheoremSelector::independence, 3, 3);
    CHECK(fail.at("ok") == false);
    CHECK(fail.at("failure").at("stage") == "path-clique-star-search");

    json mat = run_extraction(generate(FamilySpec::clique(12)), TheoremSelector::matching, 3, 3);
    CHECK(mat.at("ok") == true);
    CHECK(mat.at("r") == 3);
}

TEST_CASE("witness JSON round trips for every family kind") {
    std::vector<Witness> ws = {
        {FamilySpec::path(3), {0, 1, 2}},
        {FamilySpec::clique(4), {0, 1, 2, 3}},
        {FamilySpec::star(2), {0, 1, 2}},
        {FamilySpec::biclique(2, 3), {0, 1, 2, 3, 4}},
        {FamilySpec::hairy_clique(2, 2), {0, 1, 2, 3, 4, 5}},
        {FamilySpec::triangle_clique(2), {0, 1, 2, 3, 4, 5}},
        {FamilySpec::spider(2, 2), {0, 1, 2, 3, 4}},
        {FamilySpec::friendship(2), {0, 1, 2, 3, 4}},
        {FamilySpec::general_broom(generate(FamilySpec::clique(3)), {0, 1}, 2),
         {0, 1, 2, 3, 4}},
    };
    for (const Witness& w : ws) {
        Witness back = witness_from_json(witness_to_json(w));
        CHECK(back.spec.kind == w.spec.kind);
        CHECK(back.spec.n == w.spec.n);
        CHECK(back.spec.m == w.spec.m);
        CHECK(back.spec.l == w.spec.l);
        CHECK(back.embedding == w.embedding);
        CHECK(generate(back.spec) == generate(w.spec));
    }
    CHECK_THROWS_AS(witness_from_json(json{{"family", {{"kind", "unknown"}, {"n", 2}}},
                                          {"parameter", 2},
                                          {"embedding", {0, 1}}}),
                    ParseError);
}

TEST_CASE("read_graph_lines reports missing files and numbers lines from one") {
    CHECK_THROWS_AS(read_graph_lines({"/nonexistent/zzz.g6"}), PreconditionError);

    std::string path = "test_scan_tmp.g6";
    {
        std::ofstream out(path);
        out << "Bw\n\nBg\n";
    }
    auto lines = read_graph_lines({path});
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].line == 1);
    CHECK(lines[0].text == "Bw");
    CHECK(lines[1].line == 3);
    CHECK(lines[1].text == "Bg");
    std::remove(path.c_str());
}

TEST_CASE("scan configuration is validated") {
    ScanConfig config;
    config.n = 1;
    CHECK_THROWS_AS(scan_invariants(std::vector<GraphLine>{}, config), PreconditionError);
    config.n = 2;
    config.jobs = 0;
    CHECK_THROWS_AS(empirical_threshold(std::vector<GraphLine>{}, config), PreconditionError);
    config.jobs = 1;
    config.inputs.clear();
    CHECK_THROWS_AS(scan_invariants(config), PreconditionError);
}
