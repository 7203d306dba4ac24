#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gorcode/matrix.hpp"

namespace gorcode {

/// An (n, k) linear code given by a full-row-rank generator matrix. The
/// systematic form is computed once at construction and cached. Codes with
/// k = 0 (including the length-0 code) are explicit degenerate values with
/// an empty generator; they carry no systematic form.
class Code {
public:
    static Code from_generator(Matrix generator);
    static Code zero_code(FieldPtr field, std::size_t n);
    static Code zero_length(FieldPtr field) { return zero_code(std::move(field), 0); }

    const FieldPtr& field() const { return generator_.field(); }
    std::size_t n() const { return generator_.cols(); }
    std::size_t k() const { return generator_.rows(); }
    bool degenerate() const { return k() == 0; }

    const Matrix& generator() const { return generator_; }
    const SystematicForm& systematic() const;

private:
    explicit Code(Matrix generator) : generator_(std::move(generator)) {}

    Matrix generator_;
    std::optional<SystematicForm> systematic_;
};

/// The dual code, generated by a kernel basis of the generator matrix.
/// dual of the full space is the explicit zero code.
Code dual(const Code& c);

/// n = 2k and G G^T = 0, which together force C = C-perp.
bool is_self_dual(const Code& c);

/// Span of all componentwise products of generator rows of c1 and c2.
/// The zero span (degenerate inputs only) comes back as the zero code.
Code schur_product(const Code& c1, const Code& c2);

/// d-th Schur power, d >= 1; d = 1 returns the code itself.
Code schur_power(const Code& c, unsigned d);

/// Block-diagonal direct sum; length-0 summands act as identity.
Code direct_sum(const Code& c1, const Code& c2);

/// Columns of the generator matrix viewed as projective points.
struct PointSet {
    std::vector<std::vector<Elem>> points;          // distinct normalized representatives
    std::vector<std::size_t> multiplicities;        // per distinct point
    std::vector<std::vector<std::size_t>> classes;  // proportionality classes of column indices
    std::vector<std::vector<Elem>> column_reps;     // normalized representative per column

    std::size_t distinct() const { return points.size(); }
};

/// Groups columns by proportionality; representatives are scaled so the
/// first nonzero coordinate is 1. Errors: zero_column (with index).
PointSet column_points(const Code& c);

/// Evaluates every degree-`degree` monomial in k variables at the given
/// representatives (one coordinate per representative, multiplicity kept)
/// and returns the image code, zero rows dropped. Monomials are ordered by
/// graded-lex on exponent vectors for reproducibility.
Code evaluation_code(FieldPtr field, const std::vector<std::vector<Elem>>& representatives, unsigned degree);

/// True iff the degree-d evaluation code of the column points and the d-th
/// Schur power have equal dimension. Requires all columns distinct as
/// projective points (errors: proportional_columns).
bool veronese_dimension_check(const Code& c, unsigned d);

/// Code with generator columns rearranged: new column j is old column perm[j].
Code permute_columns(const Code& c, const std::vector<std::size_t>& perm);

/// Code with column j scaled by scalars[j] (all nonzero).
Code scale_columns(const Code& c, const std::vector<Elem>& scalars);

} // namespace gorcode
