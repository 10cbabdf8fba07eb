#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rwit/errors.hpp"
#include "rwit/families.hpp"
#include "rwit/graph.hpp"
#include "rwit/graph6.hpp"
#include "rwit/scan.hpp"
#include "rwit/smallgraphs.hpp"

namespace {

void emit(const std::string& output, const std::string& text) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw rwit::PreconditionError("cannot open output file: " + output);
    out << text;
}

int cmd_generate(const std::string& family, int n, int l, int m, const std::string& format) {
    auto kind = rwit::kind_from_name(family);
    if (!kind) {
        std::cerr << "unknown family: " << family << "\n";
        return 1;
    }
    rwit::FamilySpec spec;
    switch (*kind) {
        case rwit::FamilyKind::path: spec = rwit::FamilySpec::path(n); break;
        case rwit::FamilyKind::clique: spec = rwit::FamilySpec::clique(n); break;
        case rwit::FamilyKind::star: spec = rwit::FamilySpec::star(n); break;
        case rwit::FamilyKind::biclique: spec = rwit::FamilySpec::biclique(n, m > 0 ? m : n); break;
        case rwit::FamilyKind::hairy_clique: spec = rwit::FamilySpec::hairy_clique(n, l); break;
        case rwit::FamilyKind::triangle_clique: spec = rwit::FamilySpec::triangle_clique(n); break;
        case rwit::FamilyKind::spider: spec = rwit::FamilySpec::spider(n, l); break;
        case rwit::FamilyKind::friendship: spec = rwit::FamilySpec::friendship(n); break;
        default:
            std::cerr << "family " << family << " needs a base graph and is not available here\n";
            return 1;
    }
    rwit::Graph g = rwit::generate(spec);
    if (format == "dot")
        std::cout << rwit::to_dot(g);
    else
        std::cout << rwit::write_graph6(g) << "\n";
    return 0;
}

int cmd_extract(const std::string& input, rwit::TheoremSelector theorem, int n, int r,
                const std::string& output) {
    std::string out_text;
    for (const rwit::GraphLine& gl : rwit::read_graph_lines({input})) {
        rwit::Graph g;
        try {
            g = rwit::parse_graph6(gl.text);
        } catch (const rwit::ParseError& e) {
            std::cerr << gl.file << ":" << gl.line << ": " << e.what() << "\n";
            return 1;
        }
        out_text += rwit::run_extraction(g, theorem, n, r).dump() + "\n";
    }
    emit(output, out_text);
    return 0;
}

int cmd_verify(const std::string& input, const std::string& witness_path) {
    std::vector<rwit::GraphLine> lines = rwit::read_graph_lines({input});
    if (lines.empty()) throw rwit::PreconditionError("input has no graphs: " + input);
    rwit::Graph g = rwit::parse_graph6(lines.front().text);
    std::ifstream wf(witness_path);
    if (!wf) throw rwit::PreconditionError("cannot open witness file: " + witness_path);
    rwit::Witness w = rwit::witness_from_json(nlohmann::json::parse(wf));
    bool ok = rwit::verify_witness(g, w);
    std::cout << (ok ? "valid" : "invalid") << "\n";
    return ok ? 0 : 2;
}

int cmd_enumerate(int order, bool all, bool upto) {
    std::string out;
    int lo = upto ? 1 : order;
    for (int k = lo; k <= order; ++k)
        for (const rwit::Graph& g : all ? rwit::all_graphs(k) : rwit::connected_graphs(k))
            out += rwit::write_graph6(g) + "\n";
    std::cout << out;
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"witness extraction and exhaustive scans for structure in connected graphs"};
    app.require_subcommand(1);

    std::string family, format = "graph6", theorem_str = "induced-matching";
    std::string input, witness_path, output;
    std::vector<std::string> inputs;
    int n = 2, l = 1, m = 0, r = 0, jobs = 1, order = 5;
    bool per_graph = false, all = false, upto = false;

    CLI::App* gen = app.add_subcommand("generate", "print one family member");
    gen->add_option("--family", family, "family kind (path, clique, star, biclique, hairy-clique, triangle-clique, spider, friendship)")->required();
    gen->add_option("--n", n, "main parameter")->required();
    gen->add_option("--l", l, "leg length where applicable (default 1)");
    gen->add_option("--m", m, "second biclique part (defaults to n)");
    gen->add_option("--format", format)->check(CLI::IsMember({"graph6", "dot"}));

    CLI::App* inv = app.add_subcommand("invariants", "invariant scan over a graph6 stream");
    inv->add_option("--input", inputs, "graph6 files, one graph per line")->required();
    inv->add_option("--jobs", jobs, "worker count");
    inv->add_option("--output", output, "report file (default stdout)");
    inv->add_flag("--per-graph", per_graph, "include per-graph records");

    CLI::App* ext = app.add_subcommand("extract", "run a witness pipeline on each input graph");
    ext->add_option("--theorem", theorem_str)
        ->check(CLI::IsMember({"independence", "induced-matching", "matching"}))
        ->required();
    ext->add_option("--n", n, "target parameter")->required();
    ext->add_option("--r", r, "matching-pipeline size parameter (defaults to n)");
    ext->add_option("--input", input, "graph6 file, one graph per line")->required();
    ext->add_option("--output", output, "JSONL output (default stdout)");

    CLI::App* ver = app.add_subcommand("verify", "re-check a witness against a host graph");
    ver->add_option("--input", input, "graph6 file; the first graph is the host")->required();
    ver->add_option("--witness", witness_path, "witness JSON file")->required();

    CLI::App* scn = app.add_subcommand("scan", "empirical threshold hunt over a graph6 stream");
    scn->add_option("--theorem", theorem_str)
        ->check(CLI::IsMember({"independence", "induced-matching", "matching"}))
        ->required();
    scn->add_option("--n", n, "structure parameter")->required();
    scn->add_option("--input", inputs, "graph6 files, one graph per line")->required();
    scn->add_option("--jobs", jobs, "worker count");
    scn->add_option("--output", output, "report file (default stdout)");
    scn->add_flag("--per-graph", per_graph, "include per-graph records");

    CLI::App* enu = app.add_subcommand("enumerate", "print small graphs up to isomorphism");
    enu->add_option("--order", order, "vertex count")->required();
    enu->add_flag("--all", all, "include disconnected graphs");
    enu->add_flag("--upto", upto, "all orders from 1 up to --order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    if (app.got_subcommand(gen)) return cmd_generate(family, n, l, m, format);

    if (app.got_subcommand(inv)) {
        rwit::ScanConfig cfg;
        cfg.inputs = inputs;
        cfg.jobs = jobs;
        cfg.per_graph = per_graph;
        emit(output, rwit::report_to_string(rwit::scan_invariants(cfg)));
        return 0;
    }

    auto theorem = rwit::theorem_from_name(theorem_str);

    if (app.got_subcommand(ext)) {
        if (!theorem) return 1;
        return cmd_extract(input, *theorem, n, r > 0 ? r : n, output);
    }

    if (app.got_subcommand(ver)) return cmd_verify(input, witness_path);

    if (app.got_subcommand(scn)) {
        if (!theorem) return 1;
        rwit::ScanConfig cfg;
        cfg.inputs = inputs;
        cfg.theorem = *theorem;
        cfg.n = n;
        cfg.jobs = jobs;
        cfg.per_graph = per_graph;
        emit(output, rwit::report_to_string(rwit::empirical_threshold(cfg)));
        return 0;
    }

    if (app.got_subcommand(enu)) return cmd_enumerate(order, all, upto);

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rwit::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const rwit::PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const rwit::InternalError& e) {
        std::cerr << "internal soundness failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
