#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rwit/extraction.hpp"
#include "rwit/families.hpp"
#include "rwit/graph.hpp"

namespace rwit {

enum class TheoremSelector { independence, induced_matching, matching };

std::string theorem_name(TheoremSelector theorem);
std::optional<TheoremSelector> theorem_from_name(const std::string& name);

// Structures a theorem guarantees at parameter n, and the parameter it
// bounds (independence, induced matching or matching number).
std::vector<FamilySpec> theorem_targets(TheoremSelector theorem, int n);
bool structure_free(const Graph& g, TheoremSelector theorem, int n);
int relevant_parameter(const Graph& g, TheoremSelector theorem);

struct ScanConfig {
    std::vector<std::string> inputs;  // graph6 files, one graph per line
    TheoremSelector theorem = TheoremSelector::induced_matching;
    int n = 2;
    int jobs = 1;
    bool per_graph = false;  // include per-graph records in reports
};

// One graph6 line with its origin, for error reporting.
struct GraphLine {
    std::string file;
    int line = 0;
    std::string text;
};

std::vector<GraphLine> read_graph_lines(const std::vector<std::string>& paths);

// Invariant scan: computes the five invariants for every connected graph in
// the stream and checks the two sandwich chains and the Gallai identity.
// Reports are deterministic for a fixed stream regardless of jobs.
nlohmann::json scan_invariants(const ScanConfig& config);
nlohmann::json scan_invariants(const std::vector<GraphLine>& lines, const ScanConfig& config);

// Threshold hunt: splits the stream by whether each connected graph contains
// one of the theorem's targets at parameter n; the empirical threshold is
// 1 + the largest relevant parameter among structure-free graphs (1 when
// none are structure-free). Extremal graphs are re-verified before listing.
nlohmann::json empirical_threshold(const ScanConfig& config);
nlohmann::json empirical_threshold(const std::vector<GraphLine>& lines, const ScanConfig& config);

// One pipeline run wrapped as a report object; re-verifies any witness.
nlohmann::json run_extraction(const Graph& g, TheoremSelector theorem, int n, int r);

nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

// Canonical serialisation used for report files (sorted keys, two-space
// indent, trailing newline), the byte-identical determinism contract.
std::string report_to_string(const nlohmann::json& report);

}  // namespace rwit
