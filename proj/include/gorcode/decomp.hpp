#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gorcode/code.hpp"

namespace gorcode {

/// Bipartite graph on the zero-one support of the A-part of the systematic
/// generator (Id | A): k row vertices on the left, n-k column vertices on
/// the right, an edge (i, j) whenever A[i][j] != 0.
struct BlockGraph {
    std::size_t k_left = 0;
    std::size_t m_right = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> source_permutation; // systematic position -> original column

    std::vector<std::vector<std::size_t>> left_adjacency() const;
    std::vector<std::vector<std::size_t>> right_adjacency() const;
};

BlockGraph build_block_graph(const Code& c);

/// Number of connected components of the block graph; equals the number of
/// indecomposable blocks of the code.
std::size_t count_blocks(const Code& c);

struct Block {
    std::vector<std::size_t> rows;    // generator row indices
    std::vector<std::size_t> columns; // original column indices, ascending
    Code code;                        // generator restricted to those columns
};

struct Decomposition {
    std::size_t nb = 0;
    std::optional<std::size_t> gd; // nb - 1 when the input is self-dual
    std::vector<Block> blocks;
};

/// Splits the code into its indecomposable blocks. Every block is checked
/// to be indecomposable itself, and self-dual blocks arise exactly when the
/// input is self-dual.
Decomposition decompose(const Code& c);

/// 2k - nb for a self-dual code; with cross_validate the rank-based Schur
/// square dimension is computed as well and a mismatch raises an internal
/// error. Errors: not_self_dual.
std::size_t schur_square_dimension(const Code& c, bool cross_validate = false);

/// nb - 1. Errors: not_self_dual.
std::size_t gorenstein_defect(const Code& c);

enum class Verdict { gorenstein, not_gorenstein, inapplicable };

struct GorensteinReport {
    bool self_dual = false;
    std::size_t distinct_points = 0;
    bool indecomposable = false;
    bool applicable = false; // distinct_points == n == 2k
    std::size_t gd = 0;      // code-level defect, meaningful when self_dual
    Verdict verdict = Verdict::inapplicable;
};

/// Combines the block count with the point count: the point set is
/// arithmetically Gorenstein iff the code is indecomposable, with the
/// geometric reading gated on all columns being distinct points.
/// Errors: not_self_dual.
GorensteinReport is_arithmetically_gorenstein(const Code& c);

/// Family of unordered column-index pairs, each contained in the support of
/// a witness row, whose pair-intersection graph is connected.
struct ConnectedSet {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> witness_rows; // one per pair

    bool covers(std::size_t m) const;
};

/// One connected set per component of the bipartite support graph of A,
/// derived from a deterministic depth-first spanning walk (lowest-index
/// start, neighbors in increasing order, backtracking edges kept). When the
/// graph is connected the single returned set covers every column of A.
std::vector<ConnectedSet> find_connected_sets(const Matrix& a_part);

/// True iff every pair lies in some row support and the pairs cannot be
/// split into two nonempty families sharing no index (checked as
/// connectivity of the pair-intersection graph). Errors: index_out_of_range.
bool check_connected_set(const Matrix& a_part, const ConnectedSet& y);

/// True iff the vectors e_k - e_l over the given field, one per pair, span
/// a space of dimension m - 1, i.e. the kernel of x_1 + ... + x_m.
bool kernel_span_check(const ConnectedSet& y, std::size_t m, const FieldPtr& field);

/// For a self-dual code with irreducible symmetrization, every column of A
/// has at least two nonzero entries; false signals an internal
/// inconsistency. Errors: hypothesis_unmet.
bool column_weight_check(const Code& c);

enum class SelfAssociation { certified, not_self_associated, undecided };

struct SelfAssociationResult {
    SelfAssociation status = SelfAssociation::undecided;
    std::vector<Elem> diagonal; // n nonzero entries when certified
    bool verified = false;      // G diag(d) G^T = 0 re-checked by multiplication
};

/// Searches for a nonsingular diagonal D with G D G^T = 0. The solutions
/// form the dual of the Schur square, which is enumerated exhaustively up
/// to 2^20 elements; beyond that the result is `undecided`.
/// Errors: shape_error (n != 2k), rank_deficient, zero_column.
SelfAssociationResult self_association_certificate(const Matrix& g);

/// Search cap for the certificate enumeration.
inline constexpr std::uint64_t kSelfAssociationSearchBound = 1u << 20;

} // namespace gorcode
