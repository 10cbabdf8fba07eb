#include "rwit/scan.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <utility>

#include "parallel.hpp"
#include "rwit/errors.hpp"
#include "rwit/graph6.hpp"
#include "rwit/invariants.hpp"

namespace rwit {

using nlohmann::json;

std::string theorem_name(TheoremSelector theorem) {
    switch (theorem) {
        case TheoremSelector::independence: return "independence";
        case TheoremSelector::induced_matching: return "induced-matching";
        case TheoremSelector::matching: return "matching";
    }
    return "?";
}

std::optional<TheoremSelector> theorem_from_name(const std::string& name) {
    for (TheoremSelector t : {TheoremSelector::independence, TheoremSelector::induced_matching,
                              TheoremSelector::matching})
        if (theorem_name(t) == name) return t;
    return std::nullopt;
}

std::vector<FamilySpec> theorem_targets(TheoremSelector theorem, int n) {
    switch (theorem) {
        case TheoremSelector::independence:
            return {FamilySpec::path(n), FamilySpec::hairy_clique(n, 1), FamilySpec::star(n)};
        case TheoremSelector::induced_matching:
            return {FamilySpec::path(n), FamilySpec::hairy_clique(n, 2),
                    FamilySpec::triangle_clique(n), FamilySpec::spider(n, 2),
                    FamilySpec::friendship(n)};
        case TheoremSelector::matching:
            return {FamilySpec::path(n), FamilySpec::clique(n), FamilySpec::biclique(n, n),
                    FamilySpec::spider(n, 2), FamilySpec::friendship(n)};
    }
    return {};
}

namespace {

bool structure_free_against(const Graph& g, const std::vector<Graph>& patterns) {
    for (const Graph& p : patterns)
        if (p.order() <= g.order() && find_induced_embedding(g, p)) return false;
    return true;
}

std::vector<Graph> target_patterns(TheoremSelector theorem, int n) {
    std::vector<Graph> out;
    for (const FamilySpec& spec : theorem_targets(theorem, n)) out.push_back(generate(spec));
    return out;
}

}  // namespace

bool structure_free(const Graph& g, TheoremSelector theorem, int n) {
    return structure_free_against(g, target_patterns(theorem, n));
}

int relevant_parameter(const Graph& g, TheoremSelector theorem) {
    switch (theorem) {
        case TheoremSelector::independence: return independence_number(g);
        case TheoremSelector::induced_matching: return induced_matching_number(g);
        case TheoremSelector::matching: return matching_number(g);
    }
    return 0;
}

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

void check_config(const ScanConfig& config, bool need_inputs) {
    if (need_inputs && config.inputs.empty())
        throw PreconditionError("scan needs at least one input file");
    if (config.n < 2) throw PreconditionError("scan parameter n must be at least 2");
    if (config.jobs < 1) throw PreconditionError("worker count must be at least 1");
}

struct ParsedStream {
    struct Entry {
        const GraphLine* line;
        Graph graph;
        std::string g6;  // canonical re-encoding
    };
    std::vector<Entry> connected;
    int disconnected = 0;
    int lines_read = 0;
    json parse_errors = json::array();
};

ParsedStream parse_stream(const std::vector<GraphLine>& lines) {
    ParsedStream out;
    for (const GraphLine& gl : lines) {
        ++out.lines_read;
        try {
            Graph g = parse_graph6(gl.text);
            if (!is_connected(g)) {
                ++out.disconnected;
                continue;
            }
            std::string g6 = write_graph6(g);
            out.connected.push_back({&gl, std::move(g), std::move(g6)});
        } catch (const ParseError& e) {
            out.parse_errors.push_back(
                {{"file", gl.file}, {"line", gl.line}, {"message", e.what()}});
        }
    }
    return out;
}

json counts_block(const ParsedStream& ps, const std::vector<std::string>& inputs) {
    json j;
    j["inputs"] = inputs;
    j["lines_read"] = ps.lines_read;
    j["connected"] = static_cast<int>(ps.connected.size());
    j["disconnected_skipped"] = ps.disconnected;
    j["parse_errors"] = ps.parse_errors;
    return j;
}

json int_distribution(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    json out = json::array();
    for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        out.push_back({values[i], static_cast<int>(j - i)});
        i = j;
    }
    return out;
}

void rethrow_worker_errors(const std::vector<std::string>& errors) {
    for (const std::string& e : errors)
        if (!e.empty()) throw InternalError("scan worker failed: " + e);
}

}  // namespace

std::vector<GraphLine> read_graph_lines(const std::vector<std::string>& paths) {
    std::vector<GraphLine> out;
    for (const std::string& path : paths) {
        std::ifstream in(path);
        if (!in) throw PreconditionError("cannot open input file: " + path);
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            std::string text = trimmed(raw);
            if (text.empty()) continue;
            out.push_back({path, number, std::move(text)});
        }
    }
    return out;
}

json scan_invariants(const ScanConfig& config) {
    check_config(config, true);
    return scan_invariants(read_graph_lines(config.inputs), config);
}

json scan_invariants(const std::vector<GraphLine>& lines, const ScanConfig& config) {
    check_config(config, false);
    ParsedStream ps = parse_stream(lines);
    int count = static_cast<int>(ps.connected.size());

    struct Row {
        int alpha = 0, mat = 0, imat = 0, beta = 0;
        Rational frac;
        std::vector<std::string> broken;
    };
    std::vector<Row> rows(count);
    std::vector<std::string> errors(count);
    detail::parallel_for(count, config.jobs, [&](int i) {
        try {
            const Graph& g = ps.connected[i].graph;
            Row& r = rows[i];
            r.alpha = independence_number(g);
            r.mat = matching_number(g);
            r.imat = induced_matching_number(g);
            r.beta = vertex_cover_number(g);
            r.frac = fractional_matching_number(g);
            if (!(r.imat <= r.mat)) r.broken.push_back("induced-matching <= matching");
            if (!(Rational(r.mat, 1) <= r.frac)) r.broken.push_back("matching <= fractional");
            if (!(r.frac <= Rational(3LL * r.mat, 2)))
                r.broken.push_back("fractional <= 3/2 matching");
            if (!(r.mat <= r.beta)) r.broken.push_back("matching <= vertex-cover");
            if (!(r.beta <= 2 * r.mat)) r.broken.push_back("vertex-cover <= 2 matching");
            if (r.beta != g.order() - r.alpha)
                r.broken.push_back("vertex-cover = order - independence");
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    rethrow_worker_errors(errors);

    json report = counts_block(ps, config.inputs);
    report["schema_version"] = 1;
    report["kind"] = "invariant-scan";

    json violations = json::array();
    std::vector<int> alphas, mats, imats, betas;
    std::vector<std::pair<long long, std::string>> fracs;  // (2*value, label)
    for (int i = 0; i < count; ++i) {
        const Row& r = rows[i];
        alphas.push_back(r.alpha);
        mats.push_back(r.mat);
        imats.push_back(r.imat);
        betas.push_back(r.beta);
        fracs.emplace_back(2 * r.frac.num / r.frac.den, r.frac.str());
        for (const std::string& chain : r.broken)
            violations.push_back({{"graph", ps.connected[i].g6}, {"chain", chain}});
    }
    std::sort(fracs.begin(), fracs.end());
    json frac_dist = json::array();
    for (std::size_t i = 0; i < fracs.size();) {
        std::size_t j = i;
        while (j < fracs.size() && fracs[j].first == fracs[i].first) ++j;
        frac_dist.push_back({fracs[i].second, static_cast<int>(j - i)});
        i = j;
    }

    report["violations"] = violations;
    report["violation_count"] = static_cast<int>(violations.size());
    report["distributions"] = {{"independence", int_distribution(alphas)},
                               {"matching", int_distribution(mats)},
                               {"induced_matching", int_distribution(imats)},
                               {"vertex_cover", int_distribution(betas)},
                               {"fractional_matching", frac_dist}};
    if (config.per_graph) {
        json per = json::array();
        for (int i = 0; i < count; ++i) {
            const Row& r = rows[i];
            per.push_back({{"graph", ps.connected[i].g6},
                           {"order", ps.connected[i].graph.order()},
                           {"independence", r.alpha},
                           {"matching", r.mat},
                           {"induced_matching", r.imat},
                           {"vertex_cover", r.beta},
                           {"fractional_matching", r.frac.str()},
                           {"violations", r.broken}});
        }
        report["per_graph"] = per;
    }
    return report;
}

json empirical_threshold(const ScanConfig& config) {
    check_config(config, true);
    return empirical_threshold(read_graph_lines(config.inputs), config);
}

json empirical_threshold(const std::vector<GraphLine>& lines, const ScanConfig& config) {
    check_config(config, false);
    ParsedStream ps = parse_stream(lines);
    int count = static_cast<int>(ps.connected.size());
    std::vector<Graph> patterns = target_patterns(config.theorem, config.n);

    struct Row {
        int param = 0;
        bool free = false;
    };
    std::vector<Row> rows(count);
    std::vector<std::string> errors(count);
    detail::parallel_for(count, config.jobs, [&](int i) {
        try {
            const Graph& g = ps.connected[i].graph;
            rows[i].free = structure_free_against(g, patterns);
            rows[i].param = relevant_parameter(g, config.theorem);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    rethrow_worker_errors(errors);

    std::vector<int> free_params, cont_params;
    for (const Row& r : rows) (r.free ? free_params : cont_params).push_back(r.param);
    int max_free = 0;
    for (int p : free_params) max_free = std::max(max_free, p);
    int threshold = free_params.empty() ? 1 : 1 + max_free;

    // extremal graphs: structure-free at the maximum parameter, re-verified
    std::vector<std::pair<std::pair<int, std::string>, const Graph*>> extremal;
    if (!free_params.empty())
        for (int i = 0; i < count; ++i)
            if (rows[i].free && rows[i].param == max_free)
                extremal.push_back(
                    {{ps.connected[i].graph.order(), ps.connected[i].g6}, &ps.connected[i].graph});
    std::sort(extremal.begin(), extremal.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    json extremal_list = json::array();
    for (const auto& [key, gp] : extremal) {
        Graph check = parse_graph6(key.second);
        if (!structure_free_against(check, patterns))
            throw InternalError("extremal graph failed structure-free re-verification: " +
                                key.second);
        extremal_list.push_back(key.second);
    }

    json report = counts_block(ps, config.inputs);
    report["schema_version"] = 1;
    report["kind"] = "threshold-scan";
    report["theorem"] = theorem_name(config.theorem);
    report["n"] = config.n;
    report["structure_free"] = static_cast<int>(free_params.size());
    report["containing"] = static_cast<int>(cont_params.size());
    report["empirical_threshold"] = threshold;
    report["extremal"] = extremal_list;
    report["histogram"] = {{"structure_free", int_distribution(free_params)},
                           {"containing", int_distribution(cont_params)}};
    if (config.per_graph) {
        json per = json::array();
        for (int i = 0; i < count; ++i)
            per.push_back({{"graph", ps.connected[i].g6},
                           {"parameter", rows[i].param},
                           {"structure_free", rows[i].free}});
        report["per_graph"] = per;
    }
    return report;
}

json run_extraction(const Graph& g, TheoremSelector theorem, int n, int r) {
    ExtractionOutcome out = ExtractionOutcome::fail("unreached", "");
    switch (theorem) {
        case TheoremSelector::independence: out = extract_independence_witness(g, n); break;
        case TheoremSelector::induced_matching: out = extract_induced_matching_witness(g, n); break;
        case TheoremSelector::matching: out = extract_matching_witness(g, n, r); break;
    }
    json report{{"graph", write_graph6(g)}, {"theorem", theorem_name(theorem)}, {"n", n}};
    if (theorem == TheoremSelector::matching) report["r"] = r;
    if (out.ok()) {
        if (!verify_witness(g, *out.witness))
            throw InternalError("extracted witness failed final verification");
        report["ok"] = true;
        report["witness"] = witness_to_json(*out.witness);
    } else {
        report["ok"] = false;
        report["failure"] = {{"stage", out.failure->stage}, {"detail", out.failure->detail}};
    }
    return report;
}

json witness_to_json(const Witness& w) {
    json fam{{"kind", kind_name(w.spec.kind)}, {"n", w.spec.n}};
    switch (w.spec.kind) {
        case FamilyKind::biclique: fam["m"] = w.spec.m; break;
        case FamilyKind::hairy_clique:
        case FamilyKind::spider: fam["l"] = w.spec.l; break;
        case FamilyKind::general_broom:
        case FamilyKind::general_hairy:
        case FamilyKind::general_star:
            fam["l"] = w.spec.l;
            fam["base"] = write_graph6(*w.spec.base);
            fam["attach"] = w.spec.attach;
            break;
        default: break;
    }
    return {{"family", fam}, {"parameter", w.spec.n}, {"embedding", w.embedding}};
}

Witness witness_from_json(const json& j) {
    const json& fam = j.at("family");
    std::string kind_str = fam.at("kind").get<std::string>();
    auto kind = kind_from_name(kind_str);
    if (!kind) throw ParseError("unknown family kind: " + kind_str, 0);
    int n = fam.at("n").get<int>();
    FamilySpec spec;
    switch (*kind) {
        case FamilyKind::path: spec = FamilySpec::path(n); break;
        case FamilyKind::clique: spec = FamilySpec::clique(n); break;
        case FamilyKind::star: spec = FamilySpec::star(n); break;
        case FamilyKind::biclique: spec = FamilySpec::biclique(n, fam.at("m").get<int>()); break;
        case FamilyKind::hairy_clique:
            spec = FamilySpec::hairy_clique(n, fam.at("l").get<int>());
            break;
        case FamilyKind::triangle_clique: spec = FamilySpec::triangle_clique(n); break;
        case FamilyKind::spider: spec = FamilySpec::spider(n, fam.at("l").get<int>()); break;
        case FamilyKind::friendship: spec = FamilySpec::friendship(n); break;
        case FamilyKind::general_broom:
            spec = FamilySpec::general_broom(parse_graph6(fam.at("base").get<std::string>()),
                                            fam.at("attach").get<VertexSet>(),
                                            fam.at("l").get<int>());
            break;
        case FamilyKind::general_hairy:
            spec = FamilySpec::general_hairy(parse_graph6(fam.at("base").get<std::string>()),
                                            fam.at("attach").get<VertexSet>(), n,
                                            fam.at("l").get<int>());
            break;
        case FamilyKind::general_star:
            spec = FamilySpec::general_star(parse_graph6(fam.at("base").get<std::string>()),
                                           fam.at("attach").get<VertexSet>(), n,
                                           fam.at("l").get<int>());
            break;
    }
    return {std::move(spec), j.at("embedding").get<std::vector<int>>()};
}

std::string report_to_string(const json& report) { return report.dump(2) + "\n"; }

}  // namespace rwit
