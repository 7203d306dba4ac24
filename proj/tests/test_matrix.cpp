#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gorcode/matrix.hpp"
#include "support/fixtures.hpp"

using namespace gorcode;
using gorcode::testing::hamming8;
using gorcode::testing::random_matrix;
using gorcode::testing::thrown_code;

TEST_CASE("rref examples") {
    auto f2 = make_field(2);

    const Matrix zero(f2, 3, 4);
    const RrefResult rz = rref(zero);
    CHECK(rz.reduced == zero);
    CHECK(rz.pivots.empty());

    const Matrix id = Matrix::identity(f2, 4);
    const RrefResult ri = rref(id);
    CHECK(ri.reduced == id);
    CHECK(ri.pivots == std::vector<std::size_t>{0, 1, 2, 3});

    // The (Id | A) generator is already in reduced row echelon form.
    const Matrix g = hamming8().generator();
    const RrefResult rg = rref(g);
    CHECK(rg.reduced == g);
    CHECK(rg.pivots == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(rg.rank() == 4);
}

TEST_CASE("rref is idempotent") {
    std::mt19937_64 rng(7);
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = make_field_of_order(q);
        for (int trial = 0; trial < 25; ++trial) {
            const Matrix m = random_matrix(rng, f, 5, 8);
            const Matrix once = rref(m).reduced;
            CHECK(rref(once).reduced == once);
        }
    }
}

TEST_CASE("kernel examples") {
    auto f2 = make_field(2);

    CHECK(kernel(Matrix::identity(f2, 4)).rows() == 0);

    // ker(x1 + ... + xn) is the even-weight code, dimension n - 1.
    const Matrix ones = Matrix::from_rows(f2, {{1, 1, 1, 1, 1}});
    const Matrix even = kernel(ones);
    CHECK(even.rows() == 4);
    for (std::size_t i = 0; i < even.rows(); ++i) {
        unsigned weight = 0;
        for (std::size_t j = 0; j < even.cols(); ++j) {
            weight += even.at(i, j);
        }
        CHECK(weight % 2 == 0);
    }

    // Self-dual generator: the kernel spans the row space itself.
    const Matrix g = hamming8().generator();
    CHECK(row_space_equal(kernel(g), g));
}

TEST_CASE("rank-nullity and rank of transpose on random matrices") {
    std::mt19937_64 rng(11);
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = make_field_of_order(q);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t rows = 1 + rng() % 12;
            const std::size_t cols = 1 + rng() % 12;
            const Matrix m = random_matrix(rng, f, rows, cols);
            CHECK(rank(m) == rank(m.transposed()));
            CHECK(rank(m) + kernel(m).rows() == cols);
        }
    }
}

TEST_CASE("systematic form examples") {
    auto f2 = make_field(2);
    const Matrix g = hamming8().generator();

    const SystematicForm sys = systematic_form(g);
    CHECK(sys.k == 4);
    std::vector<std::size_t> identity{0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(sys.permutation == identity);
    // A = J - I.
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(sys.a_part.at(i, j) == (i == j ? 0 : 1));
        }
    }

    const Matrix dependent = Matrix::from_rows(f2, {{1, 0, 1}, {1, 0, 1}});
    CHECK(thrown_code([&] { systematic_form(dependent); }) == Errc::rank_deficient);

    // Swapping columns 1 and 5 moves the pivot choice but preserves the
    // row space through the recorded permutation.
    Matrix swapped = g;
    for (std::size_t i = 0; i < 4; ++i) {
        std::swap(swapped.at(i, 0), swapped.at(i, 4));
    }
    const SystematicForm sys2 = systematic_form(swapped);
    CHECK(row_space_equal(sys2.reassemble(), swapped));
}

TEST_CASE("systematic form round-trip on random full-rank matrices") {
    std::mt19937_64 rng(13);
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = make_field_of_order(q);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t k = 1 + rng() % 5;
            const std::size_t n = k + rng() % 6;
            Matrix m = random_matrix(rng, f, k, n);
            if (rank(m) < k) {
                continue;
            }
            const SystematicForm sys = systematic_form(m);
            CHECK(row_space_equal(sys.reassemble(), m));
        }
    }
}

TEST_CASE("row_space_equal examples") {
    auto f2 = make_field(2);
    const Matrix g = hamming8().generator();

    Matrix swapped_rows = g;
    for (std::size_t j = 0; j < g.cols(); ++j) {
        std::swap(swapped_rows.at(0, j), swapped_rows.at(2, j));
    }
    CHECK(row_space_equal(g, swapped_rows));
    CHECK(row_space_equal(g, kernel(g))); // self-dual

    Matrix zeroed = g;
    for (std::size_t j = 0; j < g.cols(); ++j) {
        zeroed.at(3, j) = 0;
    }
    CHECK(!row_space_equal(g, zeroed));

    const Matrix other_len(f2, 2, 3);
    CHECK(thrown_code([&] { row_space_equal(g, other_len); }) == Errc::shape_mismatch);

    auto f3 = make_field(3);
    const Matrix other_field(f3, 4, 8);
    CHECK(thrown_code([&] { row_space_equal(g, other_field); }) == Errc::shape_mismatch);
}

TEST_CASE("matmul and row_space_contains") {
    auto f3 = make_field(3);
    const Matrix a = Matrix::from_rows(f3, {{1, 2}, {0, 1}});
    const Matrix b = Matrix::from_rows(f3, {{1, 0}, {2, 2}});
    const Matrix ab = matmul(a, b);
    CHECK(ab.at(0, 0) == 2); // 1*1 + 2*2 = 5 = 2
    CHECK(ab.at(0, 1) == 1); // 1*0 + 2*2 = 4 = 1
    CHECK(ab.at(1, 0) == 2);
    CHECK(ab.at(1, 1) == 2);

    const Matrix sub = Matrix::from_rows(f3, {{1, 2}});
    CHECK(row_space_contains(a, sub));
    CHECK(!row_space_contains(sub, a));
}
