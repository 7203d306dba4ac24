#include "gorcode/report.hpp"

#include <chrono>
#include <sstream>

namespace gorcode {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

nlohmann::json one_based(const std::vector<std::size_t>& indices) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i : indices) {
        out.push_back(i + 1);
    }
    return out;
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::gorenstein:
        return "gorenstein";
    case Verdict::not_gorenstein:
        return "not_gorenstein";
    case Verdict::inapplicable:
        return "inapplicable";
    }
    return "inapplicable";
}

nlohmann::json gorenstein_json(const GorensteinReport& g) {
    return {
        {"self_dual", g.self_dual},
        {"distinct_points", g.distinct_points},
        {"indecomposable", g.indecomposable},
        {"verdict", verdict_name(g.verdict)},
    };
}

nlohmann::json connected_set_json(const ConnectedSet& y) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [k, l] : y.pairs) {
        pairs.push_back({k + 1, l + 1});
    }
    return {{"pairs", pairs}, {"witness_rows", one_based(y.witness_rows)}};
}

nlohmann::json matrix_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(m.at(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

AnalysisReport analyze(const Code& c, const std::string& input_path) {
    const auto total_start = Clock::now();
    AnalysisReport report;
    report.input_path = input_path;
    report.n = c.n();
    report.k = c.k();
    report.q = c.field()->q();
    report.self_dual = is_self_dual(c);

    auto start = Clock::now();
    report.points = column_points(c);
    report.timings.points_ms = ms_since(start);

    start = Clock::now();
    report.schur2_dim_rank = schur_power(c, 2).k();
    report.timings.schur_ms = ms_since(start);

    start = Clock::now();
    report.nb = count_blocks(c);
    report.timings.graph_ms = ms_since(start);

    start = Clock::now();
    report.decomposition = decompose(c);
    report.timings.decompose_ms = ms_since(start);

    if (report.self_dual) {
        const std::size_t via_graph = 2 * c.k() - report.nb;
        if (via_graph != report.schur2_dim_rank) {
            throw Error(Errc::internal,
                        "Schur square dimension mismatch: rank " + std::to_string(report.schur2_dim_rank) +
                            " vs 2k - nb = " + std::to_string(via_graph));
        }
        report.schur2_dim_graph = via_graph;
        report.gd = report.nb - 1;
        report.failure_count = report.nb; // gd + 1
        report.gorenstein = is_arithmetically_gorenstein(c);
    } else {
        report.gorenstein.self_dual = false;
        report.gorenstein.distinct_points = report.points.distinct();
        report.gorenstein.indecomposable = report.nb == 1;
        report.gorenstein.applicable = false;
        report.gorenstein.verdict = Verdict::inapplicable;
    }

    if (report.nb == 1) {
        const auto sets = find_connected_sets(c.systematic().a_part);
        if (sets.size() == 1) {
            report.connected_set = sets.front();
        }
    }

    report.timings.total_ms = ms_since(total_start);
    return report;
}

int exit_code(const AnalysisReport& report) {
    switch (report.gorenstein.verdict) {
    case Verdict::gorenstein:
        return 0;
    case Verdict::not_gorenstein:
        return 1;
    case Verdict::inapplicable:
        return 2;
    }
    return 2;
}

nlohmann::json to_json(const PointSet& points) {
    nlohmann::json point_list = nlohmann::json::array();
    for (const auto& p : points.points) {
        nlohmann::json coords = nlohmann::json::array();
        for (Elem e : p) {
            coords.push_back(e);
        }
        point_list.push_back(std::move(coords));
    }
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : points.classes) {
        classes.push_back(one_based(cls));
    }
    return {{"points", point_list}, {"multiplicities", points.multiplicities}, {"classes", classes}};
}

nlohmann::json to_json(const AnalysisReport& report) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& block : report.decomposition.blocks) {
        blocks.push_back({
            {"rows", one_based(block.rows)},
            {"columns", one_based(block.columns)},
            {"n", block.code.n()},
            {"k", block.code.k()},
        });
    }
    nlohmann::json out{
        {"input", {{"path", report.input_path}, {"n", report.n}, {"k", report.k}, {"q", report.q}}},
        {"self_dual", report.self_dual},
        {"distinct_points", report.points.distinct()},
        {"column_classes", to_json(report.points)["classes"]},
        {"schur2_dim_rank", report.schur2_dim_rank},
        {"schur2_dim_graph", report.schur2_dim_graph ? nlohmann::json(*report.schur2_dim_graph) : nlohmann::json()},
        {"nb", report.nb},
        {"gd", report.gd ? nlohmann::json(*report.gd) : nlohmann::json()},
        {"failure_count", report.failure_count ? nlohmann::json(*report.failure_count) : nlohmann::json()},
        {"blocks", blocks},
        {"gorenstein", gorenstein_json(report.gorenstein)},
        {"connected_set", report.connected_set ? connected_set_json(*report.connected_set) : nlohmann::json()},
        {"timings_ms",
         {{"points", report.timings.points_ms},
          {"schur", report.timings.schur_ms},
          {"graph", report.timings.graph_ms},
          {"decompose", report.timings.decompose_ms},
          {"total", report.timings.total_ms}}},
    };
    return out;
}

std::string to_text(const AnalysisReport& report) {
    std::ostringstream out;
    out << "input: " << (report.input_path.empty() ? "<memory>" : report.input_path) << "  (n=" << report.n
        << ", k=" << report.k << ", q=" << report.q << ")\n";
    out << "self-dual: " << (report.self_dual ? "yes" : "no") << "\n";
    out << "distinct points: " << report.points.distinct() << " of " << report.n << " columns\n";
    out << "schur square dimension: " << report.schur2_dim_rank << " (rank)";
    if (report.schur2_dim_graph) {
        out << " = " << *report.schur2_dim_graph << " (2k - nb)";
    }
    out << "\n";
    out << "blocks: nb=" << report.nb;
    if (report.gd) {
        out << ", gd=" << *report.gd << ", fails by m=" << *report.failure_count << " on quadrics";
    }
    out << "\n";
    for (std::size_t b = 0; b < report.decomposition.blocks.size(); ++b) {
        const auto& block = report.decomposition.blocks[b];
        out << "  block " << b + 1 << ": k=" << block.code.k() << ", n=" << block.code.n() << ", columns";
        for (std::size_t c : block.columns) {
            out << ' ' << c + 1;
        }
        out << "\n";
    }
    if (report.connected_set) {
        out << "connected set:";
        for (const auto& [k, l] : report.connected_set->pairs) {
            out << " {" << k + 1 << "," << l + 1 << "}";
        }
        out << "\n";
    }
    out << "verdict: ";
    switch (report.gorenstein.verdict) {
    case Verdict::gorenstein:
        out << "points are arithmetically Gorenstein";
        break;
    case Verdict::not_gorenstein:
        out << "points are not arithmetically Gorenstein (defect " << *report.gd << ")";
        break;
    case Verdict::inapplicable:
        out << "geometric verdict inapplicable";
        if (!report.self_dual) {
            out << " (code is not self-dual)";
        } else {
            out << " (proportional columns: " << report.points.distinct() << " < " << report.n << " points)";
        }
        break;
    }
    out << "\n";
    return out.str();
}

nlohmann::json to_json(const Code& c, const Decomposition& d) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& block : d.blocks) {
        blocks.push_back({
            {"rows", one_based(block.rows)},
            {"columns", one_based(block.columns)},
            {"generator", matrix_json(block.code.generator())},
        });
    }
    nlohmann::json gorenstein;
    if (is_self_dual(c)) {
        gorenstein = gorenstein_json(is_arithmetically_gorenstein(c));
    } else {
        GorensteinReport g;
        g.self_dual = false;
        try {
            g.distinct_points = column_points(c).distinct();
        } catch (const Error&) {
            g.distinct_points = 0;
        }
        g.indecomposable = d.nb == 1;
        g.verdict = Verdict::inapplicable;
        gorenstein = gorenstein_json(g);
    }
    return {
        {"nb", d.nb},
        {"gd", d.gd ? nlohmann::json(*d.gd) : nlohmann::json()},
        {"blocks", blocks},
        {"gorenstein", gorenstein},
    };
}

std::string to_text(const Decomposition& d) {
    std::ostringstream out;
    out << "nb=" << d.nb;
    if (d.gd) {
        out << ", gd=" << *d.gd;
    } else {
        out << ", gd=n/a (not self-dual)";
    }
    out << "\n";
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        const auto& block = d.blocks[b];
        out << "block " << b + 1 << ": k=" << block.code.k() << ", n=" << block.code.n() << ", columns";
        for (std::size_t col : block.columns) {
            out << ' ' << col + 1;
        }
        out << "\n";
        const auto& g = block.code.generator();
        for (std::size_t i = 0; i < g.rows(); ++i) {
            out << "  ";
            for (std::size_t j = 0; j < g.cols(); ++j) {
                if (j > 0) {
                    out << ' ';
                }
                out << g.at(i, j);
            }
            out << "\n";
        }
    }
    return out.str();
}

nlohmann::json to_json(const CensusTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json enumeration;
        if (row.enum_self_dual) {
            enumeration = {
                {"G", row.enum_self_dual->get_str()},
                {"C", row.enum_indecomposable->get_str()},
                {"agrees", *row.enumeration_agrees},
            };
        }
        rows.push_back({
            {"n", row.n},
            {"G", row.self_dual_count.get_str()},
            {"C", row.indecomposable_count.get_str()},
            {"ratio", row.ratio.get_str()},
            {"ratio_decimal", row.ratio.get_d()},
            {"provenance", row.provenance},
            {"consistent", row.counts_consistent},
            {"enumeration", enumeration},
        });
    }
    return {{"q", table.q}, {"rows", rows}};
}

nlohmann::json to_json(const SelfAssociationResult& result) {
    const char* status = result.status == SelfAssociation::certified        ? "certified"
                         : result.status == SelfAssociation::undecided      ? "undecided"
                                                                            : "not_self_associated";
    nlohmann::json diagonal;
    if (result.status == SelfAssociation::certified) {
        diagonal = nlohmann::json::array();
        for (Elem e : result.diagonal) {
            diagonal.push_back(e);
        }
    }
    return {{"status", status}, {"diagonal", diagonal}, {"verified", result.verified}};
}

} // namespace gorcode
