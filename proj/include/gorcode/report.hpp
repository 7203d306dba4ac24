#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gorcode/census.hpp"
#include "gorcode/code.hpp"
#include "gorcode/decomp.hpp"

namespace gorcode {

struct Timings {
    double points_ms = 0;
    double schur_ms = 0;
    double graph_ms = 0;
    double decompose_ms = 0;
    double total_ms = 0;
};

/// Everything the analyze command reports about one code. For self-dual
/// inputs the two Schur-square dimensions are required to agree; a mismatch
/// aborts the analysis with an internal error rather than emitting a report.
struct AnalysisReport {
    std::string input_path;
    std::size_t n = 0;
    std::size_t k = 0;
    unsigned q = 0;
    bool self_dual = false;
    PointSet points;
    std::size_t schur2_dim_rank = 0;
    std::optional<std::size_t> schur2_dim_graph; // 2k - nb, self-dual only
    std::size_t nb = 0;
    std::optional<std::size_t> gd;            // nb - 1, self-dual only
    std::optional<std::size_t> failure_count; // gd + 1
    Decomposition decomposition;
    GorensteinReport gorenstein;
    std::optional<ConnectedSet> connected_set; // present when nb == 1
    Timings timings;
};

AnalysisReport analyze(const Code& c, const std::string& input_path = "");

/// 0 when arithmetically Gorenstein, 1 when not, 2 when the geometric
/// verdict does not apply (proportional columns or non-self-dual input).
int exit_code(const AnalysisReport& report);

nlohmann::json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

nlohmann::json to_json(const Code& c, const Decomposition& d);
std::string to_text(const Decomposition& d);

nlohmann::json to_json(const CensusTable& table);

nlohmann::json to_json(const PointSet& points);

nlohmann::json to_json(const SelfAssociationResult& result);

} // namespace gorcode
