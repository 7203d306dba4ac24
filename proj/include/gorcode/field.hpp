#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gorcode/errors.hpp"

namespace gorcode {

/// Canonical integer encoding of a field element: the coefficient vector of
/// the residue polynomial read as a base-p number, so 0 <= value < q. The
/// encoding is bijective, 0 is the additive and 1 the multiplicative identity.
using Elem = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^m) for q = p^m <= 2^16. Multiplication and
/// inversion are backed by log/antilog tables built once at construction;
/// addition works digit-wise in base p. Immutable after construction and
/// safe to share across threads.
class Field {
public:
    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    unsigned q() const { return q_; }

    /// Modulus polynomial, coefficients low-degree-first, length m+1, monic.
    /// For m = 1 the placeholder polynomial x, i.e. {0, 1}.
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;

    /// All x with x*x == 1; {1} in characteristic 2, {1, q-1 encoding of -1} otherwise.
    std::vector<Elem> square_roots_of_unity() const;

    bool same_as(const Field& other) const { return p_ == other.p_ && m_ == other.m_; }

private:
    friend FieldPtr make_field(unsigned p, unsigned m);

    Field() = default;

    unsigned p_ = 0;
    unsigned m_ = 0;
    unsigned q_ = 0;
    std::vector<Elem> modulus_;
    std::vector<Elem> exp_; // exp_[i] = g^i for a fixed generator g, i in [0, q-1)
    std::vector<Elem> log_; // inverse of exp_; log_[0] is unused
};

/// Builds GF(p^m) using the lexicographically least monic irreducible modulus
/// of degree m over GF(p), coefficients compared low-degree-first.
/// Errors: not_prime, degree_zero, too_large (p^m > 2^16).
FieldPtr make_field(unsigned p, unsigned m = 1);

/// Factors a prime-power order q into (p, m) and builds the field.
/// Errors: not_prime if q is not a prime power.
FieldPtr make_field_of_order(unsigned q);

bool is_prime(unsigned n);

} // namespace gorcode
