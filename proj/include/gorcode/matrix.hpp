#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "gorcode/field.hpp"

namespace gorcode {

/// Dense row-major matrix of field elements. Matrices are immutable values:
/// every operation returns a fresh matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldPtr field, std::size_t n);
    static Matrix from_rows(FieldPtr field, std::initializer_list<std::initializer_list<unsigned>> rows);
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows, std::size_t cols);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    Matrix transposed() const;
    bool is_zero() const;

    bool operator==(const Matrix& other) const;

private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots; // strictly increasing column indices
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form with deterministic pivoting: the topmost
/// unprocessed row with a nonzero entry in the leftmost unresolved column.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space {v : M v = 0}, one vector per row,
/// cols - rank rows in total. Every returned row is verified against M.
Matrix kernel(const Matrix& m);

/// (Id | A) plus the column permutation that was applied to reach it.
/// permutation[i] is the original column now at systematic position i, so
/// pivot columns come first (greedy leftmost) followed by the remaining
/// columns in increasing order.
struct SystematicForm {
    std::size_t k = 0;
    Matrix a_part; // k x (n - k)
    std::vector<std::size_t> permutation;

    std::size_t n() const { return permutation.size(); }
    /// Rebuilds a full k x n matrix with columns moved back to their
    /// original positions; row-space-equal to the source matrix.
    Matrix reassemble() const;
};

/// Errors: rank_deficient when rank < rows.
SystematicForm systematic_form(const Matrix& m);

/// True iff both matrices span the same row space (RREFs agree after
/// dropping zero rows). Errors: shape_mismatch on field/column mismatch.
bool row_space_equal(const Matrix& a, const Matrix& b);

/// True iff every row of `inner` lies in the row space of `outer`.
bool row_space_contains(const Matrix& outer, const Matrix& inner);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix stack_rows(const Matrix& top, const Matrix& bottom);

} // namespace gorcode
