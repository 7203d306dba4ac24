#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gorcode/code.hpp"

namespace gorcode {

/// Number of k-dimensional subspaces of GF(q)^n, which is also the number
/// of k x n reduced row echelon forms of full rank.
mpz_class gaussian_binomial(std::size_t n, std::size_t k, unsigned q);

/// Mass formula: prod_{i=1}^{n/2-1} (q^i + 1), doubled for odd q; 1 for
/// n = 0. The formula is evaluated as written for every even n; for
/// q = 3 (mod 4) it overcounts at n = 2 (mod 4), which census_report
/// surfaces via the enumeration cross-check instead of patching silently.
/// Errors: odd_length.
mpz_class count_self_dual(std::size_t n, unsigned q);

/// Indecomposable count obtained by solving
///   n G_n = sum_{t=1}^{n/2} binom(n, 2t) 2t C_{2t} G_{n-2t}
/// for C_n; the division by n is asserted exact.
/// Errors: odd_length, inexact_division.
mpz_class count_indecomposable_recursive(std::size_t n, unsigned q);

/// Indecomposable count from the alternating sum over partitions of n,
///   C_n = n! sum (-1)^{p-1} (p-1)! prod_j G_j^{p_j} / ((j!)^{p_j} p_j!),
/// restricted to even parts since G vanishes on odd lengths; the result is
/// asserted integral. Errors: odd_length, non_integer_result.
mpz_class count_indecomposable_partition(std::size_t n, unsigned q);

/// Cap on the number of RREF candidates an enumeration may visit.
inline constexpr unsigned long kEnumerationBound = 10'000'000;

/// Visits every self-dual code of length n over GF(q), one call per code,
/// by enumerating all k = n/2 dimensional subspaces through their unique
/// RREF generators and filtering on G G^T = 0.
/// Errors: odd_length; too_large when the Gaussian binomial exceeds the
/// enumeration bound.
void enumerate_self_dual(std::size_t n, unsigned q, const std::function<void(const Code&)>& fn);

struct RandomSelfDual {
    Code code;
    std::size_t true_nb = 0; // number of indecomposable blocks drawn
};

/// Direct sum of randomly chosen small indecomposable self-dual codes (from
/// the enumeration pool at lengths <= 8), followed by a random coordinate
/// permutation and column scalings with lambda^2 = 1. The block count used
/// in construction is returned as ground truth.
/// Errors: empty_pool when n cannot be assembled within max_blocks.
RandomSelfDual random_self_dual(std::size_t n, unsigned q, std::uint64_t seed, std::size_t max_blocks);

struct CensusRow {
    std::size_t n = 0;
    mpz_class self_dual_count;
    mpz_class indecomposable_count;
    mpq_class ratio;
    std::string provenance;
    bool counts_consistent = true; // 0 <= C <= G
    std::optional<mpz_class> enum_self_dual;
    std::optional<mpz_class> enum_indecomposable;
    std::optional<bool> enumeration_agrees;
};

struct CensusTable {
    unsigned q = 0;
    std::vector<CensusRow> rows;
};

/// Table of (G, C, C/G) for even n up to n_max. Counts distinct codes
/// (subspaces), not equivalence classes. With verify_enumeration, rows whose
/// candidate count fits the enumeration bound are cross-checked exhaustively
/// and disagreements are flagged in the row.
CensusTable census_report(std::size_t n_max, unsigned q, bool verify_enumeration = false);

/// CSV serialization: header plus one `n,G,C,ratio,provenance` line per row.
std::string to_csv(const CensusTable& table);

} // namespace gorcode
