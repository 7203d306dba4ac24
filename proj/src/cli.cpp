#include "gorcode/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gorcode/io.hpp"
#include "gorcode/report.hpp"

namespace gorcode {

namespace {

int cmd_analyze(const std::string& path, bool json, const std::string& dot_path) {
    const Code code = read_code_file(path);
    if (!is_self_dual(code)) {
        std::cerr << "warning: " << path << " is not self-dual; gd and the Gorenstein verdict do not apply\n";
    }
    const AnalysisReport report = analyze(code, path);
    if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) {
            throw Error(Errc::parse_error, "cannot write '" + dot_path + "'");
        }
        dot << to_dot(build_block_graph(code));
    }
    if (json) {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        std::cout << to_text(report);
    }
    return exit_code(report);
}

int cmd_decompose(const std::string& path, bool json) {
    const Code code = read_code_file(path);
    const Decomposition d = decompose(code);
    if (json) {
        std::cout << to_json(code, d).dump(2) << "\n";
    } else {
        std::cout << to_text(d);
    }
    return 0;
}

int cmd_census(std::size_t n_max, unsigned q, bool verify, bool json) {
    const CensusTable table = census_report(n_max, q, verify);
    if (json) {
        std::cout << to_json(table).dump(2) << "\n";
    } else {
        std::cout << to_csv(table);
        for (const auto& row : table.rows) {
            if (!row.counts_consistent) {
                std::cerr << "warning: counts at n=" << row.n << " violate 0 <= C <= G"
                          << " (mass formula outside its validity domain)\n";
            }
            if (row.enumeration_agrees && !*row.enumeration_agrees) {
                std::cerr << "warning: enumeration disagrees with the formulas at n=" << row.n << ": found G="
                          << row.enum_self_dual->get_str() << ", C=" << row.enum_indecomposable->get_str() << "\n";
            }
        }
    }
    return 0;
}

int cmd_enumerate(std::size_t n, unsigned q, bool classify, bool json) {
    mpz_class total = 0;
    mpz_class indecomposable = 0;
    std::map<std::size_t, mpz_class> nb_histogram;
    enumerate_self_dual(n, q, [&](const Code& c) {
        ++total;
        if (classify) {
            const std::size_t nb = count_blocks(c);
            nb_histogram[nb] += 1;
            if (nb == 1) {
                ++indecomposable;
            }
        }
    });
    const mpz_class formula_g = count_self_dual(n, q);
    const mpz_class formula_c = n >= 2 ? count_indecomposable_recursive(n, q) : 0;
    if (json) {
        nlohmann::json histogram;
        if (classify) {
            histogram = nlohmann::json::object();
            for (const auto& [nb, count] : nb_histogram) {
                histogram[std::to_string(nb)] = count.get_str();
            }
        }
        nlohmann::json out{
            {"n", n},
            {"q", q},
            {"candidates", gaussian_binomial(n, n / 2, q).get_str()},
            {"total", total.get_str()},
            {"formula_G", formula_g.get_str()},
            {"agrees_G", total == formula_g},
            {"indecomposable", classify ? nlohmann::json(indecomposable.get_str()) : nlohmann::json()},
            {"formula_C", formula_c.get_str()},
            {"agrees_C", classify ? nlohmann::json(indecomposable == formula_c) : nlohmann::json()},
            {"nb_histogram", histogram},
        };
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "self-dual codes of length " << n << " over GF(" << q << "): " << total.get_str()
                  << " (formula: " << formula_g.get_str() << ")\n";
        if (classify) {
            std::cout << "indecomposable: " << indecomposable.get_str() << " (formula: " << formula_c.get_str()
                      << ")\n";
            for (const auto& [nb, count] : nb_histogram) {
                std::cout << "  nb=" << nb << ": " << count.get_str() << "\n";
            }
        }
    }
    return 0;
}

int cmd_selfassoc(const std::string& path, bool json) {
    const Code code = read_code_file(path);
    const SelfAssociationResult result = self_association_certificate(code.generator());
    if (json) {
        std::cout << to_json(result).dump(2) << "\n";
    } else {
        switch (result.status) {
        case SelfAssociation::certified: {
            std::cout << "self-associated; diagonal:";
            for (Elem e : result.diagonal) {
                std::cout << ' ' << e;
            }
            std::cout << (result.verified ? " (verified)" : "") << "\n";
            break;
        }
        case SelfAssociation::not_self_associated:
            std::cout << "not self-associated (search was exhaustive)\n";
            break;
        case SelfAssociation::undecided:
            std::cout << "undecided: solution space exceeds the search bound\n";
            break;
        }
    }
    return 0;
}

int cmd_random(std::size_t n, unsigned q, std::uint64_t seed, std::size_t max_blocks) {
    const RandomSelfDual sample = random_self_dual(n, q, seed, max_blocks);
    std::cerr << "blocks: " << sample.true_nb << "\n";
    std::cout << format_code_text(sample.code);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"self-dual code analyzer: Gorenstein verdicts, block decompositions, exact censuses", "gorcode"};
    app.require_subcommand(1);

    std::string path;
    std::string dot_path;
    bool json = false;
    bool classify = false;
    bool verify_enumeration = false;
    std::size_t n = 0;
    std::size_t n_max = 0;
    unsigned q = 2;
    std::uint64_t seed = 0;
    std::size_t max_blocks = 0;

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for one code file");
    analyze_cmd->add_option("path", path, "code file in the matrix text format")->required();
    analyze_cmd->add_flag("--json", json, "emit JSON");
    analyze_cmd->add_option("--dot", dot_path, "write the block graph in DOT format");

    auto* decompose_cmd = app.add_subcommand("decompose", "indecomposable blocks of a code");
    decompose_cmd->add_option("path", path, "code file")->required();
    decompose_cmd->add_flag("--json", json, "emit JSON");

    auto* census_cmd = app.add_subcommand("census", "exact counts of (indecomposable) self-dual codes");
    census_cmd->add_option("--q", q, "field order")->required();
    census_cmd->add_option("--max", n_max, "largest length")->required();
    census_cmd->add_flag("--verify-enumeration", verify_enumeration, "cross-check small lengths exhaustively");
    census_cmd->add_flag("--json", json, "emit JSON");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "exhaustively list self-dual codes");
    enumerate_cmd->add_option("--n", n, "length")->required();
    enumerate_cmd->add_option("--q", q, "field order")->required();
    enumerate_cmd->add_flag("--classify", classify, "count blocks per code");
    enumerate_cmd->add_flag("--json", json, "emit JSON");

    auto* selfassoc_cmd = app.add_subcommand("selfassoc", "search for a self-association certificate");
    selfassoc_cmd->add_option("path", path, "code file")->required();
    selfassoc_cmd->add_flag("--json", json, "emit JSON");

    auto* random_cmd = app.add_subcommand("random", "sample a random self-dual code with known block count");
    random_cmd->add_option("--n", n, "length")->required();
    random_cmd->add_option("--q", q, "field order")->required();
    random_cmd->add_option("--seed", seed, "RNG seed");
    random_cmd->add_option("--max-blocks", max_blocks, "cap on the number of blocks (default n/2)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (analyze_cmd->parsed()) {
            return cmd_analyze(path, json, dot_path);
        }
        if (decompose_cmd->parsed()) {
            return cmd_decompose(path, json);
        }
        if (census_cmd->parsed()) {
            return cmd_census(n_max, q, verify_enumeration, json);
        }
        if (enumerate_cmd->parsed()) {
            return cmd_enumerate(n, q, classify, json);
        }
        if (selfassoc_cmd->parsed()) {
            return cmd_selfassoc(path, json);
        }
        if (random_cmd->parsed()) {
            return cmd_random(n, q, seed, max_blocks);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what();
        if (e.line() > 0) {
            std::cerr << " (line " << e.line() << ", column " << e.column() << ")";
        }
        std::cerr << "\n";
        return e.code() == Errc::internal ? 4 : 3;
    }
    return 0;
}

} // namespace gorcode
