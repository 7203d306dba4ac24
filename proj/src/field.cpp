#include "gorcode/field.hpp"

#include <algorithm>

namespace gorcode {

namespace {

// Residue polynomials over GF(p), coefficients low-degree-first, no trailing
// zeros maintained by callers where it matters.

using Poly = std::vector<unsigned>;

Poly decode(unsigned value, unsigned p, unsigned m) {
    Poly digits(m, 0);
    for (unsigned i = 0; i < m; ++i) {
        digits[i] = value % p;
        value /= p;
    }
    return digits;
}

unsigned encode(const Poly& digits, unsigned p) {
    unsigned value = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        value = value * p + digits[i];
    }
    return value;
}

// Multiply a*b and reduce modulo the monic `modulus` (degree m), all mod p.
Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, unsigned p) {
    const std::size_t m = modulus.size() - 1;
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
    }
    // Long division by the monic modulus, keeping only the remainder.
    for (std::size_t d = prod.size(); d-- > m;) {
        unsigned c = prod[d];
        if (c == 0) {
            continue;
        }
        prod[d] = 0;
        for (std::size_t i = 0; i < m; ++i) {
            prod[d - m + i] = (prod[d - m + i] + c * (p - modulus[i] % p)) % p;
        }
    }
    prod.resize(m);
    return prod;
}

bool is_zero_poly(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

// Remainder of `a` divided by monic `d`, both over GF(p).
Poly poly_rem(Poly a, const Poly& d, unsigned p) {
    const std::size_t deg_d = d.size() - 1;
    while (a.size() > deg_d) {
        unsigned lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - d.size();
            for (std::size_t i = 0; i < d.size(); ++i) {
                a[shift + i] = (a[shift + i] + lead * (p - d[i] % p)) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& candidate, unsigned p) {
    const std::size_t deg = candidate.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        unsigned long long count = 1;
        for (std::size_t i = 0; i < d; ++i) {
            count *= p;
        }
        for (unsigned long long idx = 0; idx < count; ++idx) {
            Poly divisor(d + 1, 0);
            unsigned long long v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<unsigned>(v % p);
                v /= p;
            }
            divisor[d] = 1;
            if (is_zero_poly(poly_rem(candidate, divisor, p))) {
                return false;
            }
        }
    }
    return true;
}

// Least monic irreducible of degree m, coefficient tuples (c0,...,c_{m-1})
// compared lexicographically with c0 most significant.
Poly least_irreducible(unsigned p, unsigned m) {
    unsigned long long total = 1;
    for (unsigned i = 0; i < m; ++i) {
        total *= p;
    }
    for (unsigned long long idx = 0; idx < total; ++idx) {
        Poly candidate(m + 1, 0);
        unsigned long long v = idx;
        for (unsigned j = m; j-- > 0;) {
            candidate[j] = static_cast<unsigned>(v % p);
            v /= p;
        }
        candidate[m] = 1;
        if (is_irreducible(candidate, p)) {
            return candidate;
        }
    }
    throw Error(Errc::internal, "no irreducible polynomial found");
}

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> factors;
    for (unsigned d = 2; static_cast<unsigned long long>(d) * d <= n; ++d) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        factors.push_back(n);
    }
    return factors;
}

} // namespace

bool is_prime(unsigned n) {
    if (n < 2) {
        return false;
    }
    for (unsigned d = 2; static_cast<unsigned long long>(d) * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

FieldPtr make_field(unsigned p, unsigned m) {
    if (!is_prime(p)) {
        throw Error(Errc::not_prime, "field characteristic must be prime, got " + std::to_string(p));
    }
    if (m == 0) {
        throw Error(Errc::degree_zero, "extension degree must be at least 1");
    }
    unsigned long long q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > (1ull << 16)) {
            throw Error(Errc::too_large, "field order exceeds 2^16");
        }
    }

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->m_ = m;
    field->q_ = static_cast<unsigned>(q);

    if (m == 1) {
        field->modulus_ = {0, 1};
    } else {
        Poly mod = least_irreducible(p, m);
        field->modulus_.assign(mod.begin(), mod.end());
    }

    Poly modulus(field->modulus_.begin(), field->modulus_.end());
    auto mul_direct = [&](unsigned a, unsigned b) {
        return encode(mul_mod(decode(a, p, m), decode(b, p, m), modulus, p), p);
    };

    // Find a generator of the multiplicative group, then fill the tables.
    const unsigned order = field->q_ - 1;
    const auto factors = prime_factors(order);
    unsigned generator = 1;
    for (unsigned cand = 1; cand < field->q_; ++cand) {
        bool ok = true;
        for (unsigned r : factors) {
            unsigned e = order / r;
            unsigned acc = 1, base = cand;
            while (e > 0) {
                if (e & 1) {
                    acc = mul_direct(acc, base);
                }
                base = mul_direct(base, base);
                e >>= 1;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            generator = cand;
            break;
        }
    }

    field->exp_.resize(order);
    field->log_.assign(field->q_, 0);
    unsigned acc = 1;
    for (unsigned i = 0; i < order; ++i) {
        field->exp_[i] = static_cast<Elem>(acc);
        field->log_[acc] = static_cast<Elem>(i);
        acc = mul_direct(acc, generator);
    }
    if (acc != 1) {
        throw Error(Errc::internal, "generator order mismatch");
    }
    return field;
}

FieldPtr make_field_of_order(unsigned q) {
    if (q < 2) {
        throw Error(Errc::not_prime, "field order must be at least 2");
    }
    unsigned p = q;
    for (unsigned d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned m = 0;
    unsigned rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) {
        throw Error(Errc::not_prime, std::to_string(q) + " is not a prime power");
    }
    return make_field(p, m);
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) {
        return static_cast<Elem>(a ^ b);
    }
    if (m_ == 1) {
        return static_cast<Elem>((static_cast<unsigned>(a) + b) % p_);
    }
    unsigned out = 0;
    unsigned mult = 1;
    unsigned x = a;
    unsigned y = b;
    for (unsigned i = 0; i < m_; ++i) {
        out += ((x % p_) + (y % p_)) % p_ * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::neg(Elem a) const {
    if (p_ == 2) {
        return a;
    }
    if (m_ == 1) {
        return static_cast<Elem>((p_ - a) % p_);
    }
    unsigned out = 0;
    unsigned mult = 1;
    unsigned x = a;
    for (unsigned i = 0; i < m_; ++i) {
        out += ((p_ - x % p_) % p_) * mult;
        x /= p_;
        mult *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::sub(Elem a, Elem b) const {
    return add(a, neg(b));
}

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) {
        return 0;
    }
    const unsigned order = q_ - 1;
    return exp_[(static_cast<unsigned>(log_[a]) + log_[b]) % order];
}

Elem Field::inv(Elem a) const {
    if (a == 0) {
        throw Error(Errc::division_by_zero, "inverse of zero");
    }
    const unsigned order = q_ - 1;
    return exp_[(order - log_[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (a == 0) {
        return e == 0 ? Elem{1} : Elem{0};
    }
    const unsigned order = q_ - 1;
    const std::uint64_t reduced = (static_cast<std::uint64_t>(log_[a]) * (e % order)) % order;
    return exp_[reduced];
}

std::vector<Elem> Field::square_roots_of_unity() const {
    std::vector<Elem> roots{1};
    if (p_ != 2) {
        roots.push_back(neg(1));
    }
    return roots;
}

} // namespace gorcode
