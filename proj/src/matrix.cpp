#include "gorcode/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace gorcode {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (!a.field() || !b.field() || !a.field()->same_as(*b.field())) {
        throw Error(Errc::shape_mismatch, "matrices over different fields");
    }
}

} // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, std::initializer_list<std::initializer_list<unsigned>> rows) {
    std::vector<std::vector<Elem>> converted;
    std::size_t cols = 0;
    for (const auto& r : rows) {
        std::vector<Elem> row;
        for (unsigned v : r) {
            row.push_back(static_cast<Elem>(v));
        }
        cols = row.size();
        converted.push_back(std::move(row));
    }
    return from_rows(std::move(field), converted, cols);
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw Error(Errc::shape_mismatch, "ragged row lengths");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const Elem v = rows[i][j];
            if (v >= m.field()->q()) {
                throw Error(Errc::shape_mismatch, "entry out of field range");
            }
            m.at(i, j) = v;
        }
    }
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t.at(j, i) = at(i, j);
        }
    }
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_ &&
           field_ && other.field_ && field_->same_as(*other.field_);
}

RrefResult rref(const Matrix& m) {
    const Field& f = *m.field();
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < r.rows() && r.at(sel, col) == 0) {
            ++sel;
        }
        if (sel == r.rows()) {
            continue;
        }
        if (sel != pivot_row) {
            for (std::size_t j = 0; j < r.cols(); ++j) {
                std::swap(r.at(sel, j), r.at(pivot_row, j));
            }
        }
        const Elem scale = f.inv(r.at(pivot_row, col));
        if (scale != 1) {
            for (std::size_t j = col; j < r.cols(); ++j) {
                r.at(pivot_row, j) = f.mul(r.at(pivot_row, j), scale);
            }
        }
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pivot_row || r.at(i, col) == 0) {
                continue;
            }
            const Elem factor = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) {
                r.at(i, j) = f.sub(r.at(i, j), f.mul(factor, r.at(pivot_row, j)));
            }
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    return rref(m).pivots.size();
}

Matrix kernel(const Matrix& m) {
    const Field& f = *m.field();
    const RrefResult red = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : red.pivots) {
        is_pivot[p] = true;
    }

    Matrix basis(m.field(), n - red.rank(), n);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) {
            continue;
        }
        basis.at(out, free_col) = 1;
        for (std::size_t r = 0; r < red.rank(); ++r) {
            basis.at(out, red.pivots[r]) = f.neg(red.reduced.at(r, free_col));
        }
        ++out;
    }

    // Contract check: M v = 0 for every basis row.
    for (std::size_t b = 0; b < basis.rows(); ++b) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Elem acc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                acc = f.add(acc, f.mul(m.at(i, j), basis.at(b, j)));
            }
            if (acc != 0) {
                throw Error(Errc::internal, "kernel basis verification failed");
            }
        }
    }
    return basis;
}

Matrix SystematicForm::reassemble() const {
    const std::size_t n_cols = permutation.size();
    Matrix out(a_part.field(), k, n_cols);
    for (std::size_t i = 0; i < k; ++i) {
        out.at(i, permutation[i]) = 1;
        for (std::size_t j = 0; j < n_cols - k; ++j) {
            out.at(i, permutation[k + j]) = a_part.at(i, j);
        }
    }
    return out;
}

SystematicForm systematic_form(const Matrix& m) {
    const RrefResult red = rref(m);
    if (red.rank() < m.rows()) {
        throw Error(Errc::rank_deficient, "matrix does not have full row rank");
    }
    const std::size_t k = m.rows();
    const std::size_t n = m.cols();

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : red.pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::size_t> permutation = red.pivots;
    for (std::size_t j = 0; j < n; ++j) {
        if (!is_pivot[j]) {
            permutation.push_back(j);
        }
    }

    Matrix a(m.field(), k, n - k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n - k; ++j) {
            a.at(i, j) = red.reduced.at(i, permutation[k + j]);
        }
    }
    return {k, std::move(a), std::move(permutation)};
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) {
        throw Error(Errc::shape_mismatch, "row spaces live in different ambient dimensions");
    }
    const RrefResult ra = rref(a);
    const RrefResult rb = rref(b);
    if (ra.rank() != rb.rank()) {
        return false;
    }
    for (std::size_t i = 0; i < ra.rank(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (ra.reduced.at(i, j) != rb.reduced.at(i, j)) {
                return false;
            }
        }
    }
    return true;
}

bool row_space_contains(const Matrix& outer, const Matrix& inner) {
    require_same_field(outer, inner);
    if (outer.cols() != inner.cols()) {
        throw Error(Errc::shape_mismatch, "row spaces live in different ambient dimensions");
    }
    return rank(stack_rows(outer, inner)) == rank(outer);
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) {
        throw Error(Errc::shape_mismatch, "inner dimensions disagree");
    }
    const Field& f = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const Elem left = a.at(i, t);
            if (left == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out.at(i, j) = f.add(out.at(i, j), f.mul(left, b.at(t, j)));
            }
        }
    }
    return out;
}

Matrix stack_rows(const Matrix& top, const Matrix& bottom) {
    require_same_field(top, bottom);
    if (top.cols() != bottom.cols()) {
        throw Error(Errc::shape_mismatch, "stacked matrices must share column count");
    }
    Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i) {
        for (std::size_t j = 0; j < top.cols(); ++j) {
            out.at(i, j) = top.at(i, j);
        }
    }
    for (std::size_t i = 0; i < bottom.rows(); ++i) {
        for (std::size_t j = 0; j < bottom.cols(); ++j) {
            out.at(top.rows() + i, j) = bottom.at(i, j);
        }
    }
    return out;
}

} // namespace gorcode
