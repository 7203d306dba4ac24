#pragma once

#include <functional>
#include <random>
#include <string>

#include "gorcode/code.hpp"
#include "gorcode/errors.hpp"

namespace gorcode::testing {

// The [8,4] self-dual binary code with A = J - I.
inline Code hamming8() {
    auto f2 = make_field(2);
    return Code::from_generator(Matrix::from_rows(f2, {
            {1, 0, 0, 0, 0, 1, 1, 1},
            {0, 1, 0, 0, 1, 0, 1, 1},
            {0, 0, 1, 0, 1, 1, 0, 1},
            {0, 0, 0, 1, 1, 1, 1, 0},
        }));
}

inline Code hamming8_doubled() {
    const Code c = hamming8();
    return direct_sum(c, c);
}

// The [14,7] self-dual binary code whose 7th and 14th columns coincide.
inline Code len14() {
    auto f2 = make_field(2);
    return Code::from_generator(Matrix::from_rows(f2, {
            {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0},
            {0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0},
            {0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0},
            {0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 0},
            {0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 0, 0},
            {0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 0},
            {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1},
        }));
}

inline Matrix random_matrix(std::mt19937_64& rng, const FieldPtr& field, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<unsigned> entry(0, field->q() - 1);
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.at(i, j) = static_cast<Elem>(entry(rng));
        }
    }
    return m;
}

inline Code random_code(std::mt19937_64& rng, const FieldPtr& field, std::size_t k, std::size_t n) {
    while (true) {
        Matrix m = random_matrix(rng, field, k, n);
        if (rank(m) == k) {
            return Code::from_generator(std::move(m));
        }
    }
}

// Runs fn and reports which error code it threw, if any.
template <typename Fn>
Errc thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    throw std::runtime_error("expected a gorcode::Error");
}

inline std::string corpus_path(const std::string& name) {
    return std::string(GORCODE_CORPUS_DIR) + "/" + name;
}

} // namespace gorcode::testing
