#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gorcode/field.hpp"
#include "support/fixtures.hpp"

using namespace gorcode;
using gorcode::testing::thrown_code;

namespace {

// Test-side oracle: multiply two residue polynomials (base-p digit vectors)
// and reduce by the modulus, independent of the table-backed path.
Elem mul_by_polynomials(const Field& f, Elem a, Elem b) {
    const unsigned p = f.p();
    const unsigned m = f.m();
    std::vector<unsigned> da(m), db(m), prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i) {
        da[i] = a % p;
        a = static_cast<Elem>(a / p);
        db[i] = b % p;
        b = static_cast<Elem>(b / p);
    }
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j < m; ++j) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    for (std::size_t d = prod.size(); d-- > m;) {
        const unsigned c = prod[d];
        if (c == 0) {
            continue;
        }
        prod[d] = 0;
        for (unsigned i = 0; i < m; ++i) {
            prod[d - m + i] = (prod[d - m + i] + c * (p - f.modulus()[i] % p)) % p;
        }
    }
    unsigned value = 0;
    for (unsigned i = m; i-- > 0;) {
        value = value * p + prod[i];
    }
    return static_cast<Elem>(value);
}

// A quadratic over GF(2) is reducible iff it has a root in GF(2).
bool poly_has_root_in_gf2(const std::vector<Elem>& mod) {
    auto eval = [&](unsigned x) {
        unsigned acc = 0, pw = 1;
        for (Elem c : mod) {
            acc = (acc + c * pw) % 2;
            pw = pw * x;
        }
        return acc;
    };
    return eval(0) == 0 || eval(1) == 0;
}

} // namespace

TEST_CASE("make_field examples") {
    auto f2 = make_field(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->modulus() == std::vector<Elem>{0, 1});

    auto f4 = make_field(2, 2);
    CHECK(f4->q() == 4);
    // x^2 + x + 1, the only monic irreducible quadratic over GF(2).
    CHECK(f4->modulus() == std::vector<Elem>{1, 1, 1});
    CHECK(!poly_has_root_in_gf2(f4->modulus()));

    CHECK(thrown_code([] { make_field(4, 1); }) == Errc::not_prime);
    CHECK(thrown_code([] { make_field(2, 0); }) == Errc::degree_zero);
    CHECK(thrown_code([] { make_field(2, 17); }) == Errc::too_large);
    CHECK(make_field(2, 16)->q() == 65536);
}

TEST_CASE("lexicographically least moduli for small extensions") {
    // Frozen from an independent computer-algebra enumeration of monic
    // irreducibles, lowest coefficient tuple (c0, c1, ...) first.
    CHECK(make_field(2, 3)->modulus() == std::vector<Elem>{1, 0, 1, 1});  // x^3+x^2+1
    CHECK(make_field(2, 4)->modulus() == std::vector<Elem>{1, 0, 0, 1, 1});
    CHECK(make_field(3, 2)->modulus() == std::vector<Elem>{1, 0, 1});     // x^2+1
    CHECK(make_field(3, 3)->modulus() == std::vector<Elem>{1, 0, 2, 1});
    CHECK(make_field(5, 2)->modulus() == std::vector<Elem>{1, 1, 1});
}

TEST_CASE("make_field_of_order") {
    CHECK(make_field_of_order(9)->p() == 3);
    CHECK(make_field_of_order(9)->m() == 2);
    CHECK(make_field_of_order(5)->m() == 1);
    CHECK(thrown_code([] { make_field_of_order(6); }) == Errc::not_prime);
    CHECK(thrown_code([] { make_field_of_order(12); }) == Errc::not_prime);
}

TEST_CASE("arithmetic examples") {
    auto f2 = make_field(2);
    CHECK(f2->add(1, 1) == 0);

    auto f3 = make_field(3);
    CHECK(f3->inv(2) == 2); // 2*2 = 4 = 1 mod 3

    auto f4 = make_field(2, 2);
    // x encodes as 2; x*x = x + 1 under x^2 + x + 1, which encodes as 3.
    CHECK(f4->mul(2, 2) == 3);
    CHECK(f4->mul(2, 2) == mul_by_polynomials(*f4, 2, 2));

    CHECK(thrown_code([&] { f3->inv(0); }) == Errc::division_by_zero);
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
    for (unsigned q = 2; q <= 64; ++q) {
        FieldPtr f;
        try {
            f = make_field_of_order(q);
        } catch (const Error&) {
            continue; // not a prime power
        }
        CAPTURE(q);
        for (unsigned a = 0; a < q; ++a) {
            CHECK(f->add(static_cast<Elem>(a), 0) == a);
            CHECK(f->mul(static_cast<Elem>(a), 1) == a);
            CHECK(f->add(static_cast<Elem>(a), f->neg(static_cast<Elem>(a))) == 0);
            if (a != 0) {
                CHECK(f->mul(static_cast<Elem>(a), f->inv(static_cast<Elem>(a))) == 1);
                CHECK(f->inv(f->inv(static_cast<Elem>(a))) == a);
            }
            for (unsigned b = 0; b < q; ++b) {
                const Elem ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
                CHECK(f->add(ea, eb) == f->add(eb, ea));
                CHECK(f->mul(ea, eb) == f->mul(eb, ea));
                CHECK(f->mul(ea, eb) == mul_by_polynomials(*f, ea, eb));
                for (unsigned c = 0; c < q; ++c) {
                    const Elem ec = static_cast<Elem>(c);
                    REQUIRE(f->add(f->add(ea, eb), ec) == f->add(ea, f->add(eb, ec)));
                    REQUIRE(f->mul(f->mul(ea, eb), ec) == f->mul(ea, f->mul(eb, ec)));
                    REQUIRE(f->mul(ea, f->add(eb, ec)) == f->add(f->mul(ea, eb), f->mul(ea, ec)));
                }
            }
        }
    }
}

TEST_CASE("Frobenius endomorphism: (a+b)^p = a^p + b^p") {
    for (unsigned q : {2u, 3u, 4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
        auto f = make_field_of_order(q);
        CAPTURE(q);
        for (unsigned a = 0; a < q; ++a) {
            for (unsigned b = 0; b < q; ++b) {
                const Elem lhs = f->pow(f->add(static_cast<Elem>(a), static_cast<Elem>(b)), f->p());
                const Elem rhs = f->add(f->pow(static_cast<Elem>(a), f->p()), f->pow(static_cast<Elem>(b), f->p()));
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("square roots of unity") {
    CHECK(make_field(2)->square_roots_of_unity() == std::vector<Elem>{1});
    CHECK(make_field(2, 2)->square_roots_of_unity() == std::vector<Elem>{1});
    CHECK(make_field(5)->square_roots_of_unity() == std::vector<Elem>{1, 4});
    auto f5 = make_field(5);
    for (Elem u : f5->square_roots_of_unity()) {
        CHECK(f5->mul(u, u) == 1);
    }
}
