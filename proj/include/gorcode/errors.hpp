#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gorcode {

enum class Errc {
    not_prime,
    too_large,
    degree_zero,
    division_by_zero,
    shape_mismatch,
    rank_deficient,
    spec_mismatch,
    zero_column,
    proportional_columns,
    not_self_dual,
    hypothesis_unmet,
    index_out_of_range,
    odd_length,
    inexact_division,
    non_integer_result,
    empty_pool,
    shape_error,
    parse_error,
    internal,
};

/// Library-wide exception. `code()` identifies the failed precondition or
/// invariant; parse errors also carry a 1-based line/column.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Error(Errc code, const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(message), code_(code), line_(line), column_(column) {}

    Errc code() const { return code_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    Errc code_;
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

} // namespace gorcode
