#include "gorcode/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gorcode {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

void require_self_dual(const Code& c) {
    if (!is_self_dual(c)) {
        throw Error(Errc::not_self_dual, "operation requires a self-dual code");
    }
}

BlockGraph graph_from_a_part(const Matrix& a, std::vector<std::size_t> permutation) {
    BlockGraph g;
    g.k_left = a.rows();
    g.m_right = a.cols();
    g.source_permutation = std::move(permutation);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) != 0) {
                g.edges.emplace_back(i, j);
            }
        }
    }
    return g;
}

// Vertices 0..k-1 are rows, k..k+m-1 are columns of A.
std::vector<std::size_t> component_roots(const BlockGraph& g, UnionFind& uf) {
    for (const auto& [i, j] : g.edges) {
        uf.unite(i, g.k_left + j);
    }
    std::vector<std::size_t> roots;
    for (std::size_t v = 0; v < g.k_left + g.m_right; ++v) {
        const std::size_t r = uf.find(v);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
            roots.push_back(r);
        }
    }
    return roots;
}

} // namespace

std::vector<std::vector<std::size_t>> BlockGraph::left_adjacency() const {
    std::vector<std::vector<std::size_t>> adj(k_left);
    for (const auto& [i, j] : edges) {
        adj[i].push_back(j);
    }
    return adj;
}

std::vector<std::vector<std::size_t>> BlockGraph::right_adjacency() const {
    std::vector<std::vector<std::size_t>> adj(m_right);
    for (const auto& [i, j] : edges) {
        adj[j].push_back(i);
    }
    return adj;
}

BlockGraph build_block_graph(const Code& c) {
    const SystematicForm& sys = c.systematic();
    return graph_from_a_part(sys.a_part, sys.permutation);
}

std::size_t count_blocks(const Code& c) {
    const BlockGraph g = build_block_graph(c);
    UnionFind uf(g.k_left + g.m_right);
    return component_roots(g, uf).size();
}

Decomposition decompose(const Code& c) {
    const SystematicForm& sys = c.systematic();
    const BlockGraph g = build_block_graph(c);
    UnionFind uf(g.k_left + g.m_right);
    const std::vector<std::size_t> roots = component_roots(g, uf);

    Decomposition result;
    result.nb = roots.size();
    for (std::size_t root : roots) {
        std::vector<std::size_t> rows;
        std::vector<std::size_t> systematic_columns;
        for (std::size_t v = 0; v < g.k_left + g.m_right; ++v) {
            if (uf.find(v) != root) {
                continue;
            }
            if (v < g.k_left) {
                rows.push_back(v);
            }
            systematic_columns.push_back(v);
        }
        // Original coordinates, ascending; the block generator's columns are
        // rearranged to match this order.
        std::vector<std::size_t> original(systematic_columns.size());
        std::vector<std::size_t> order(systematic_columns.size());
        for (std::size_t t = 0; t < systematic_columns.size(); ++t) {
            original[t] = sys.permutation[systematic_columns[t]];
        }
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return original[a] < original[b]; });

        std::vector<std::size_t> columns;
        Matrix gen(c.field(), rows.size(), systematic_columns.size());
        for (std::size_t out_col = 0; out_col < order.size(); ++out_col) {
            const std::size_t sys_col = systematic_columns[order[out_col]];
            columns.push_back(original[order[out_col]]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const std::size_t row = rows[r];
                gen.at(r, out_col) = sys_col < g.k_left
                                         ? static_cast<Elem>(sys_col == row ? 1 : 0)
                                         : sys.a_part.at(row, sys_col - g.k_left);
            }
        }
        Code block_code = rows.empty() ? Code::zero_code(c.field(), gen.cols())
                                       : Code::from_generator(std::move(gen));
        if (!rows.empty() && count_blocks(block_code) != 1) {
            throw Error(Errc::internal, "extracted block is not indecomposable");
        }
        result.blocks.push_back(Block{std::move(rows), std::move(columns), std::move(block_code)});
    }

    std::sort(result.blocks.begin(), result.blocks.end(),
              [](const Block& a, const Block& b) { return a.columns.front() < b.columns.front(); });
    if (is_self_dual(c)) {
        result.gd = result.nb - 1;
    }
    return result;
}

std::size_t schur_square_dimension(const Code& c, bool cross_validate) {
    require_self_dual(c);
    const std::size_t via_graph = 2 * c.k() - count_blocks(c);
    if (cross_validate) {
        const std::size_t via_rank = schur_power(c, 2).k();
        if (via_rank != via_graph) {
            throw Error(Errc::internal,
                        "Schur square dimension mismatch: rank " + std::to_string(via_rank) +
                            " vs graph " + std::to_string(via_graph));
        }
    }
    return via_graph;
}

std::size_t gorenstein_defect(const Code& c) {
    require_self_dual(c);
    return count_blocks(c) - 1;
}

GorensteinReport is_arithmetically_gorenstein(const Code& c) {
    require_self_dual(c);
    GorensteinReport report;
    report.self_dual = true;
    report.distinct_points = column_points(c).distinct();
    report.indecomposable = count_blocks(c) == 1;
    report.gd = count_blocks(c) - 1;
    report.applicable = report.distinct_points == c.n();
    if (!report.applicable) {
        report.verdict = Verdict::inapplicable;
    } else {
        report.verdict = report.indecomposable ? Verdict::gorenstein : Verdict::not_gorenstein;
    }
    return report;
}

bool ConnectedSet::covers(std::size_t m) const {
    std::vector<bool> seen(m, false);
    for (const auto& [k, l] : pairs) {
        if (k < m) {
            seen[k] = true;
        }
        if (l < m) {
            seen[l] = true;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<ConnectedSet> find_connected_sets(const Matrix& a_part) {
    std::vector<std::size_t> identity(a_part.rows() + a_part.cols());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    const BlockGraph g = graph_from_a_part(a_part, std::move(identity));
    const auto left = g.left_adjacency();
    const auto right = g.right_adjacency();
    const std::size_t total = g.k_left + g.m_right;

    std::vector<bool> visited(total, false);
    std::vector<ConnectedSet> sets;

    for (std::size_t start = 0; start < total; ++start) {
        if (visited[start]) {
            continue;
        }
        // Walk the component depth-first from its lowest-index vertex,
        // appending the parent again on each backtrack. In a bipartite graph
        // the walk alternates sides, so column vertices sit two steps apart.
        std::vector<std::size_t> walk;
        std::vector<std::pair<std::size_t, std::size_t>> stack; // (vertex, next neighbor index)
        visited[start] = true;
        walk.push_back(start);
        stack.emplace_back(start, 0);
        const auto neighbors = [&](std::size_t v) -> std::vector<std::size_t> {
            if (v < g.k_left) {
                std::vector<std::size_t> out = left[v];
                for (std::size_t& w : out) {
                    w += g.k_left;
                }
                std::sort(out.begin(), out.end());
                return out;
            }
            std::vector<std::size_t> out = right[v - g.k_left];
            std::sort(out.begin(), out.end());
            return out;
        };
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            const auto nbrs = neighbors(v);
            std::size_t chosen = total;
            while (next < nbrs.size()) {
                if (!visited[nbrs[next]]) {
                    chosen = nbrs[next];
                    break;
                }
                ++next;
            }
            if (chosen == total) {
                stack.pop_back();
                if (!stack.empty()) {
                    walk.push_back(stack.back().first);
                }
                continue;
            }
            visited[chosen] = true;
            walk.push_back(chosen);
            stack.emplace_back(chosen, 0);
        }

        ConnectedSet y;
        std::vector<std::size_t> column_positions;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            if (walk[i] >= g.k_left) {
                column_positions.push_back(i);
            }
        }
        for (std::size_t t = 0; t + 1 < column_positions.size(); ++t) {
            const std::size_t i = column_positions[t];
            if (column_positions[t + 1] != i + 2) {
                throw Error(Errc::internal, "walk does not alternate sides");
            }
            const std::size_t k = walk[i] - g.k_left;
            const std::size_t l = walk[i + 2] - g.k_left;
            if (k == l) {
                continue; // backtrack through a leaf row; no new pair
            }
            const auto pair = std::minmax(k, l);
            const std::pair<std::size_t, std::size_t> candidate{pair.first, pair.second};
            if (std::find(y.pairs.begin(), y.pairs.end(), candidate) == y.pairs.end()) {
                y.pairs.push_back(candidate);
                y.witness_rows.push_back(walk[i + 1]);
            }
        }
        if (y.pairs.empty() && !column_positions.empty()) {
            // Component with a single distinct column: the spanning walk
            // col-row-col yields the degenerate pair {k, k}, which still
            // covers that column.
            const std::size_t k = walk[column_positions.front()] - g.k_left;
            const auto rows = right[k];
            if (!rows.empty()) {
                y.pairs.emplace_back(k, k);
                y.witness_rows.push_back(rows.front());
            }
        }
        sets.push_back(std::move(y));
    }
    return sets;
}

bool check_connected_set(const Matrix& a_part, const ConnectedSet& y) {
    const std::size_t m = a_part.cols();
    for (const auto& [k, l] : y.pairs) {
        if (k >= m || l >= m) {
            throw Error(Errc::index_out_of_range, "pair index outside the columns of A");
        }
        bool supported = false;
        for (std::size_t r = 0; r < a_part.rows() && !supported; ++r) {
            supported = a_part.at(r, k) != 0 && a_part.at(r, l) != 0;
        }
        if (!supported) {
            return false;
        }
    }
    if (y.pairs.size() <= 1) {
        return true;
    }
    // A split Y = Y1 u Y2 with no shared index exists exactly when the
    // pair-intersection graph is disconnected.
    UnionFind uf(y.pairs.size());
    std::vector<std::vector<std::size_t>> pairs_with_index(m);
    for (std::size_t t = 0; t < y.pairs.size(); ++t) {
        pairs_with_index[y.pairs[t].first].push_back(t);
        pairs_with_index[y.pairs[t].second].push_back(t);
    }
    for (const auto& group : pairs_with_index) {
        for (std::size_t t = 1; t < group.size(); ++t) {
            uf.unite(group[0], group[t]);
        }
    }
    const std::size_t root = uf.find(0);
    for (std::size_t t = 1; t < y.pairs.size(); ++t) {
        if (uf.find(t) != root) {
            return false;
        }
    }
    return true;
}

bool kernel_span_check(const ConnectedSet& y, std::size_t m, const FieldPtr& field) {
    if (m == 0) {
        return true;
    }
    Matrix differences(field, y.pairs.size(), m);
    for (std::size_t t = 0; t < y.pairs.size(); ++t) {
        const auto& [k, l] = y.pairs[t];
        if (k >= m || l >= m) {
            throw Error(Errc::index_out_of_range, "pair index outside [m]");
        }
        if (k == l) {
            continue;
        }
        differences.at(t, k) = 1;
        differences.at(t, l) = field->neg(1);
    }
    return rank(differences) == m - 1;
}

bool column_weight_check(const Code& c) {
    if (!is_self_dual(c) || count_blocks(c) != 1) {
        throw Error(Errc::hypothesis_unmet, "requires a self-dual code with irreducible symmetrization");
    }
    const Matrix& a = c.systematic().a_part;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        std::size_t weight = 0;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (a.at(i, j) != 0) {
                ++weight;
            }
        }
        if (weight < 2) {
            return false;
        }
    }
    return true;
}

SelfAssociationResult self_association_certificate(const Matrix& g) {
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    if (n != 2 * k) {
        throw Error(Errc::shape_error, "self-association needs n = 2k");
    }
    if (rank(g) < k) {
        throw Error(Errc::rank_deficient, "matrix must have full row rank");
    }
    const Field& f = *g.field();
    for (std::size_t j = 0; j < n; ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < k; ++i) {
            nonzero = nonzero || g.at(i, j) != 0;
        }
        if (!nonzero) {
            throw Error(Errc::zero_column, "column " + std::to_string(j + 1) + " is zero");
        }
    }

    const auto gram_with = [&](const std::vector<Elem>& d) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i; j < k; ++j) {
                Elem acc = 0;
                for (std::size_t t = 0; t < n; ++t) {
                    acc = f.add(acc, f.mul(f.mul(g.at(i, t), g.at(j, t)), d[t]));
                }
                if (acc != 0) {
                    return false;
                }
            }
        }
        return true;
    };

    SelfAssociationResult result;
    const std::vector<Elem> ones(n, 1);
    if (gram_with(ones)) {
        result.status = SelfAssociation::certified;
        result.diagonal = ones;
        result.verified = true;
        return result;
    }

    // d must annihilate every product of two generator rows, so the solution
    // space is the dual of the Schur square.
    const Code code = Code::from_generator(g);
    const Matrix square = schur_power(code, 2).generator();
    const Matrix solution_basis = kernel(square);
    const std::size_t s = solution_basis.rows();

    std::uint64_t space = 1;
    for (std::size_t i = 0; i < s; ++i) {
        space *= f.q();
        if (space > kSelfAssociationSearchBound) {
            result.status = SelfAssociation::undecided;
            return result;
        }
    }

    std::vector<Elem> coeffs(s, 0);
    std::vector<Elem> d(n, 0);
    for (std::uint64_t counter = 0; counter < space; ++counter) {
        std::uint64_t v = counter;
        for (std::size_t i = 0; i < s; ++i) {
            coeffs[i] = static_cast<Elem>(v % f.q());
            v /= f.q();
        }
        std::fill(d.begin(), d.end(), 0);
        for (std::size_t i = 0; i < s; ++i) {
            if (coeffs[i] == 0) {
                continue;
            }
            for (std::size_t t = 0; t < n; ++t) {
                d[t] = f.add(d[t], f.mul(coeffs[i], solution_basis.at(i, t)));
            }
        }
        if (std::any_of(d.begin(), d.end(), [](Elem e) { return e == 0; })) {
            continue;
        }
        if (!gram_with(d)) {
            throw Error(Errc::internal, "candidate diagonal failed direct verification");
        }
        result.status = SelfAssociation::certified;
        result.diagonal = d;
        result.verified = true;
        return result;
    }
    result.status = SelfAssociation::not_self_associated;
    return result;
}

} // namespace gorcode
