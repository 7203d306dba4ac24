#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gorcode/code.hpp"
#include "support/fixtures.hpp"

using namespace gorcode;
using gorcode::testing::hamming8;
using gorcode::testing::hamming8_doubled;
using gorcode::testing::len14;
using gorcode::testing::random_code;
using gorcode::testing::thrown_code;

TEST_CASE("dual examples") {
    auto f2 = make_field(2);

    const Code c = hamming8();
    CHECK(row_space_equal(dual(c).generator(), c.generator()));

    const Code rep = Code::from_generator(Matrix::from_rows(f2, {{1, 1}}));
    CHECK(row_space_equal(dual(rep).generator(), rep.generator()));

    const Code e1 = Code::from_generator(Matrix::from_rows(f2, {{1, 0, 0}}));
    const Code d = dual(e1);
    CHECK(d.k() == 2);
    CHECK(row_space_equal(d.generator(), Matrix::from_rows(f2, {{0, 1, 0}, {0, 0, 1}})));

    // Dual of the full space is the explicit zero code.
    const Code full = Code::from_generator(Matrix::identity(f2, 3));
    const Code z = dual(full);
    CHECK(z.degenerate());
    CHECK(z.n() == 3);
    CHECK(z.k() == 0);
}

TEST_CASE("dual is an involution") {
    std::mt19937_64 rng(3);
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = make_field_of_order(q);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 2 + rng() % 8;
            const std::size_t k = 1 + rng() % n;
            const Code c = random_code(rng, f, k, n);
            CHECK(row_space_equal(dual(dual(c)).generator(), c.generator()));
        }
    }
    for (const Code& c : {hamming8(), hamming8_doubled(), len14()}) {
        CHECK(row_space_equal(dual(dual(c)).generator(), c.generator()));
    }
}

TEST_CASE("is_self_dual examples") {
    auto f2 = make_field(2);
    CHECK(is_self_dual(hamming8()));
    CHECK(is_self_dual(hamming8_doubled()));
    CHECK(is_self_dual(len14()));
    CHECK(!is_self_dual(Code::from_generator(Matrix::identity(f2, 2))));
    CHECK(!is_self_dual(Code::from_generator(Matrix::from_rows(f2, {{1, 0}}))));
}

TEST_CASE("self-dual generators are pairwise orthogonal and self-orthogonal") {
    for (const Code& c : {hamming8(), hamming8_doubled(), len14()}) {
        const Field& f = *c.field();
        const Matrix& g = c.generator();
        for (std::size_t i = 0; i < c.k(); ++i) {
            for (std::size_t j = i; j < c.k(); ++j) {
                Elem acc = 0;
                for (std::size_t t = 0; t < c.n(); ++t) {
                    acc = f.add(acc, f.mul(g.at(i, t), g.at(j, t)));
                }
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("schur product examples") {
    auto f2 = make_field(2);

    CHECK(schur_product(hamming8(), hamming8()).k() == 7);             // dim C^(2) = 7 = 2k-1
    CHECK(schur_product(hamming8_doubled(), hamming8_doubled()).k() == 14);

    // The all-ones code is the Schur identity.
    const Code ones = Code::from_generator(Matrix::from_rows(f2, {{1, 1, 1, 1, 1, 1, 1, 1}}));
    CHECK(row_space_equal(schur_product(ones, hamming8()).generator(), hamming8().generator()));

    auto f3 = make_field(3);
    const Code short_code = Code::from_generator(Matrix::from_rows(f3, {{1, 2}}));
    CHECK(thrown_code([&] { schur_product(short_code, hamming8()); }) == Errc::shape_mismatch);
}

TEST_CASE("schur power examples") {
    const Code c = hamming8();
    CHECK(row_space_equal(schur_power(c, 1).generator(), c.generator()));
    CHECK(schur_power(c, 2).k() == 7);
    CHECK(schur_power(len14(), 2).k() == 12);
    CHECK_THROWS_AS((void)schur_power(c, 0), Error);
}

TEST_CASE("schur square dimension bounds") {
    std::mt19937_64 rng(5);
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = make_field_of_order(q);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 2 + rng() % 8;
            const std::size_t k = 1 + rng() % n;
            const Code c = random_code(rng, f, k, n);
            const std::size_t dim = schur_power(c, 2).k();
            CHECK(dim >= c.k());
            CHECK(dim <= std::min(c.n(), c.k() * (c.k() + 1) / 2));
        }
    }
}

TEST_CASE("schur product is commutative and monotone under subcodes") {
    std::mt19937_64 rng(9);
    for (unsigned q : {2u, 3u}) {
        auto f = make_field_of_order(q);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 3 + rng() % 6;
            const Code c = random_code(rng, f, 2 + rng() % 2, n);
            const Code e = random_code(rng, f, 1 + rng() % 2, n);
            CHECK(row_space_equal(schur_product(c, e).generator(), schur_product(e, c).generator()));

            // D = first rows of C is a subcode; D*E must embed in C*E.
            Matrix sub(f, c.k() - 1, n);
            for (std::size_t i = 0; i + 1 < c.k(); ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    sub.at(i, j) = c.generator().at(i, j);
                }
            }
            if (sub.rows() == 0) {
                continue;
            }
            const Code d = Code::from_generator(std::move(sub));
            CHECK(row_space_contains(schur_product(c, e).generator(), schur_product(d, e).generator()));
        }
    }
}

TEST_CASE("for self-dual codes every pairwise product sums to zero") {
    // The all-ones functional annihilates g_i * g_j, so dim C^(2) <= 2k - 1.
    for (const Code& c : {hamming8(), len14()}) {
        const Field& f = *c.field();
        for (std::size_t i = 0; i < c.k(); ++i) {
            for (std::size_t j = i; j < c.k(); ++j) {
                Elem sum = 0;
                for (std::size_t t = 0; t < c.n(); ++t) {
                    sum = f.add(sum, f.mul(c.generator().at(i, t), c.generator().at(j, t)));
                }
                CHECK(sum == 0);
            }
        }
        CHECK(schur_power(c, 2).k() <= 2 * c.k() - 1);
    }
}

TEST_CASE("direct sum examples") {
    auto f2 = make_field(2);
    const Code c = hamming8();

    const Code doubled = direct_sum(c, c);
    CHECK(doubled.n() == 16);
    CHECK(doubled.k() == 8);
    CHECK(is_self_dual(doubled));
    CHECK(row_space_equal(doubled.generator(), hamming8_doubled().generator()));

    const Code zero_len = Code::zero_length(f2);
    CHECK(row_space_equal(direct_sum(c, zero_len).generator(), c.generator()));

    // Schur square dimension is additive across direct summands.
    CHECK(schur_power(direct_sum(c, c), 2).k() == 2 * schur_power(c, 2).k());
    CHECK(schur_power(direct_sum(c, len14()), 2).k() ==
          schur_power(c, 2).k() + schur_power(len14(), 2).k());

    auto f3 = make_field(3);
    const Code other = Code::from_generator(Matrix::from_rows(f3, {{1, 2}}));
    CHECK(thrown_code([&] { direct_sum(c, other); }) == Errc::spec_mismatch);
}

TEST_CASE("column points examples") {
    auto f2 = make_field(2);

    const PointSet ps = column_points(hamming8());
    CHECK(ps.distinct() == 8);
    for (std::size_t m : ps.multiplicities) {
        CHECK(m == 1);
    }

    const PointSet ps14 = column_points(len14());
    CHECK(ps14.distinct() == 13);
    // Columns 7 and 14 carry the same projective point.
    bool found = false;
    for (const auto& cls : ps14.classes) {
        if (cls.size() == 2) {
            CHECK(cls == std::vector<std::size_t>{6, 13});
            found = true;
        }
    }
    CHECK(found);

    const Code with_zero = Code::from_generator(Matrix::from_rows(f2, {{1, 0, 1}}));
    CHECK(thrown_code([&] { column_points(with_zero); }) == Errc::zero_column);
}

TEST_CASE("column points normalize representatives over odd fields") {
    auto f5 = make_field(5);
    const Code c = Code::from_generator(Matrix::from_rows(f5, {{2, 1, 3}, {0, 2, 1}}));
    const PointSet ps = column_points(c);
    for (const auto& p : ps.points) {
        Elem first = 0;
        for (Elem e : p) {
            if (e != 0) {
                first = e;
                break;
            }
        }
        CHECK(first == 1);
    }
    // Columns (2,0) and (1,0)-scaled: column 1 normalizes to (1,0).
    CHECK(ps.column_reps[0] == std::vector<Elem>{1, 0});
}

TEST_CASE("evaluation code examples") {
    const Code c = hamming8();
    const PointSet ps = column_points(c);

    // Degree 1 evaluation returns the code itself (representatives are the
    // columns over GF(2)).
    const Code ev1 = evaluation_code(c.field(), ps.column_reps, 1);
    CHECK(row_space_equal(ev1.generator(), c.generator()));

    // Degree 2: the number of independent conditions on quadrics.
    CHECK(evaluation_code(c.field(), ps.column_reps, 2).k() == 7);

    const std::vector<std::vector<Elem>> one_point{{1, 1, 0, 1}};
    CHECK(evaluation_code(c.field(), one_point, 2).k() == 1);
}

TEST_CASE("veronese dimension check") {
    CHECK(veronese_dimension_check(hamming8(), 2));
    CHECK(veronese_dimension_check(hamming8(), 1));
    CHECK(thrown_code([&] { veronese_dimension_check(len14(), 2); }) == Errc::proportional_columns);

    // Random codes over GF(3) with distinct columns, both routes agree.
    std::mt19937_64 rng(17);
    auto f3 = make_field(3);
    int tested = 0;
    while (tested < 10) {
        const Code c = random_code(rng, f3, 3, 6);
        try {
            if (column_points(c).distinct() < c.n()) {
                continue;
            }
        } catch (const Error&) {
            continue; // zero column
        }
        CHECK(veronese_dimension_check(c, 2));
        ++tested;
    }
}
