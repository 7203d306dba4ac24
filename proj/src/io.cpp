#include "gorcode/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace gorcode {

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::size_t line_no = 1;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            tokens.push_back({line.substr(start, i - start), line_no, start + 1});
        }
        if (!tokens.empty()) {
            lines.push_back(std::move(tokens));
        }
        ++line_no;
    }
    return lines;
}

unsigned parse_unsigned(const Token& token, const std::string& what) {
    unsigned value = 0;
    if (token.text.empty() || token.text.size() > 9) {
        throw Error(Errc::parse_error, "invalid " + what + " '" + token.text + "'", token.line, token.column);
    }
    for (char c : token.text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw Error(Errc::parse_error, "invalid " + what + " '" + token.text + "'", token.line, token.column);
        }
        value = value * 10 + static_cast<unsigned>(c - '0');
    }
    return value;
}

FieldPtr parse_field(const Token& token) {
    const auto caret = token.text.find('^');
    if (caret == std::string::npos) {
        const unsigned q = parse_unsigned(token, "field order");
        if (!is_prime(q)) {
            std::string hint;
            try {
                FieldPtr f = make_field_of_order(q);
                hint = "; write " + std::to_string(f->p()) + "^" + std::to_string(f->m()) + " for an extension field";
            } catch (const Error&) {
            }
            throw Error(Errc::parse_error, "plain field order must be prime" + hint, token.line, token.column);
        }
        return make_field(q, 1);
    }
    Token base{token.text.substr(0, caret), token.line, token.column};
    Token exponent{token.text.substr(caret + 1), token.line, token.column + caret + 1};
    const unsigned p = parse_unsigned(base, "field characteristic");
    const unsigned m = parse_unsigned(exponent, "extension degree");
    try {
        return make_field(p, m);
    } catch (const Error& e) {
        throw Error(Errc::parse_error, std::string("bad field: ") + e.what(), token.line, token.column);
    }
}

} // namespace

Code parse_code_text(const std::string& text, const std::string& source_name) {
    const auto lines = tokenize_lines(text);
    if (lines.empty()) {
        throw Error(Errc::parse_error, source_name + ": empty input", 1, 1);
    }
    const auto& header = lines.front();
    if (header.size() != 3) {
        throw Error(Errc::parse_error, "header must be 'q k n'", header.front().line, header.front().column);
    }
    FieldPtr field = parse_field(header[0]);
    const unsigned k = parse_unsigned(header[1], "dimension");
    const unsigned n = parse_unsigned(header[2], "length");
    if (k == 0 || n == 0 || k > n) {
        throw Error(Errc::parse_error, "need 1 <= k <= n", header[1].line, header[1].column);
    }
    if (lines.size() != 1 + k) {
        const auto& at = lines.size() > 1 ? lines[1].front() : header.front();
        throw Error(Errc::parse_error,
                    "expected " + std::to_string(k) + " generator rows, found " + std::to_string(lines.size() - 1),
                    at.line, at.column);
    }

    Matrix g(field, k, n);
    for (unsigned i = 0; i < k; ++i) {
        const auto& row = lines[1 + i];
        if (row.size() != n) {
            throw Error(Errc::parse_error,
                        "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n),
                        row.front().line, row.front().column);
        }
        for (unsigned j = 0; j < n; ++j) {
            const unsigned value = parse_unsigned(row[j], "entry");
            if (value >= field->q()) {
                throw Error(Errc::parse_error,
                            "entry " + std::to_string(value) + " outside [0, " + std::to_string(field->q()) + ")",
                            row[j].line, row[j].column);
            }
            g.at(i, j) = static_cast<Elem>(value);
        }
    }
    return Code::from_generator(std::move(g));
}

Code read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::parse_error, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_code_text(buffer.str(), path);
}

std::string format_code_text(const Code& c) {
    const Field& f = *c.field();
    std::ostringstream out;
    if (f.m() == 1) {
        out << f.p();
    } else {
        out << f.p() << '^' << f.m();
    }
    out << ' ' << c.k() << ' ' << c.n() << '\n';
    for (std::size_t i = 0; i < c.k(); ++i) {
        for (std::size_t j = 0; j < c.n(); ++j) {
            if (j > 0) {
                out << ' ';
            }
            out << c.generator().at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::string to_dot(const BlockGraph& graph) {
    std::ostringstream out;
    out << "graph blocks {\n";
    for (const auto& [i, j] : graph.edges) {
        out << "  " << graph.source_permutation[i] + 1 << " -- "
            << graph.source_permutation[graph.k_left + j] + 1 << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace gorcode
