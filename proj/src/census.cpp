#include "gorcode/census.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "gorcode/decomp.hpp"

namespace gorcode {

namespace {

void require_even(std::size_t n) {
    if (n % 2 != 0) {
        throw Error(Errc::odd_length, "self-dual codes need even length, got " + std::to_string(n));
    }
}

void require_prime_power(unsigned q) {
    if (q >= 2) {
        unsigned p = q;
        for (unsigned d = 2; d * d <= q; ++d) {
            if (q % d == 0) {
                p = d;
                break;
            }
        }
        unsigned rest = q;
        while (rest % p == 0) {
            rest /= p;
        }
        if (rest == 1) {
            return;
        }
    }
    throw Error(Errc::not_prime, std::to_string(q) + " is not a prime power");
}

mpz_class q_pow(unsigned q, std::size_t e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), q, e);
    return out;
}

mpz_class factorial(std::size_t n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

mpz_class binomial(std::size_t n, std::size_t k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// Memoized C_n values per q, shared by the recursion and census_report.
mpz_class indecomposable_recursive_memo(std::size_t n, unsigned q, std::map<std::size_t, mpz_class>& memo) {
    if (auto it = memo.find(n); it != memo.end()) {
        return it->second;
    }
    // t = n/2 contributes n * C_n * G_0; every other term uses smaller C.
    mpz_class sum = 0;
    for (std::size_t t = 1; 2 * t < n; ++t) {
        sum += binomial(n, 2 * t) * (2 * t) * indecomposable_recursive_memo(2 * t, q, memo) *
               count_self_dual(n - 2 * t, q);
    }
    mpz_class numerator = n * count_self_dual(n, q) - sum;
    mpz_class c, rem;
    mpz_fdiv_qr_ui(c.get_mpz_t(), rem.get_mpz_t(), numerator.get_mpz_t(), static_cast<unsigned long>(n));
    if (rem != 0) {
        throw Error(Errc::inexact_division, "block recursion did not divide exactly at n = " + std::to_string(n));
    }
    memo.emplace(n, c);
    return c;
}

void partitions_into_even_parts(std::size_t n, std::size_t max_part, std::vector<std::size_t>& current,
                                const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (n == 0) {
        fn(current);
        return;
    }
    for (std::size_t part = std::min(n, max_part); part >= 2; part -= 2) {
        current.push_back(part);
        partitions_into_even_parts(n - part, part, current, fn);
        current.pop_back();
    }
}

struct Pool {
    FieldPtr field;
    std::map<std::size_t, std::vector<Code>> by_length; // indecomposable codes
    std::vector<std::size_t> lengths;                   // lengths with a nonempty pool
};

const Pool& indecomposable_pool(unsigned q) {
    static std::mutex mutex;
    static std::map<unsigned, Pool> pools;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = pools.find(q);
    if (it != pools.end()) {
        return it->second;
    }
    Pool pool;
    pool.field = make_field_of_order(q);
    for (std::size_t length = 2; length <= 8; length += 2) {
        if (gaussian_binomial(length, length / 2, q) > kEnumerationBound) {
            continue;
        }
        std::vector<Code> codes;
        enumerate_self_dual(length, q, [&](const Code& c) {
            if (count_blocks(c) == 1) {
                codes.push_back(c);
            }
        });
        if (!codes.empty()) {
            pool.lengths.push_back(length);
            pool.by_length.emplace(length, std::move(codes));
        }
    }
    return pools.emplace(q, std::move(pool)).first->second;
}

} // namespace

mpz_class gaussian_binomial(std::size_t n, std::size_t k, unsigned q) {
    if (k > n) {
        return 0;
    }
    mpz_class numerator = 1, denominator = 1;
    for (std::size_t i = 0; i < k; ++i) {
        numerator *= q_pow(q, n - i) - 1;
        denominator *= q_pow(q, i + 1) - 1;
    }
    mpz_class out, rem;
    mpz_fdiv_qr(out.get_mpz_t(), rem.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    if (rem != 0) {
        throw Error(Errc::internal, "gaussian binomial not integral");
    }
    return out;
}

mpz_class count_self_dual(std::size_t n, unsigned q) {
    require_even(n);
    require_prime_power(q);
    if (n == 0) {
        return 1;
    }
    mpz_class product = 1;
    for (std::size_t i = 1; i < n / 2; ++i) {
        product *= q_pow(q, i) + 1;
    }
    if (q % 2 == 1) {
        product *= 2;
    }
    return product;
}

mpz_class count_indecomposable_recursive(std::size_t n, unsigned q) {
    require_even(n);
    require_prime_power(q);
    if (n == 0) {
        throw Error(Errc::odd_length, "indecomposable counts start at n = 2");
    }
    std::map<std::size_t, mpz_class> memo;
    return indecomposable_recursive_memo(n, q, memo);
}

mpz_class count_indecomposable_partition(std::size_t n, unsigned q) {
    require_even(n);
    require_prime_power(q);
    if (n == 0) {
        throw Error(Errc::odd_length, "indecomposable counts start at n = 2");
    }
    mpq_class sum = 0;
    std::vector<std::size_t> current;
    partitions_into_even_parts(n, n, current, [&](const std::vector<std::size_t>& parts) {
        const std::size_t p = parts.size();
        mpq_class term(factorial(p - 1));
        if (p % 2 == 0) {
            term = -term;
        }
        std::map<std::size_t, std::size_t> multiplicity;
        for (std::size_t part : parts) {
            multiplicity[part] += 1;
        }
        for (const auto& [j, p_j] : multiplicity) {
            mpz_class g_pow;
            mpz_pow_ui(g_pow.get_mpz_t(), count_self_dual(j, q).get_mpz_t(), p_j);
            mpz_class fact_pow;
            mpz_pow_ui(fact_pow.get_mpz_t(), factorial(j).get_mpz_t(), p_j);
            term *= mpq_class(g_pow, fact_pow * factorial(p_j));
        }
        sum += term;
    });
    sum *= factorial(n);
    sum.canonicalize();
    if (sum.get_den() != 1) {
        throw Error(Errc::non_integer_result, "partition sum is not an integer at n = " + std::to_string(n));
    }
    return sum.get_num();
}

void enumerate_self_dual(std::size_t n, unsigned q, const std::function<void(const Code&)>& fn) {
    require_even(n);
    const std::size_t k = n / 2;
    const mpz_class candidates = gaussian_binomial(n, k, q);
    if (candidates > kEnumerationBound) {
        throw Error(Errc::too_large,
                    "enumeration would visit " + candidates.get_str() + " candidates (bound " +
                        std::to_string(kEnumerationBound) + ")");
    }
    FieldPtr field = make_field_of_order(q);
    const Field& f = *field;

    if (n == 0) {
        fn(Code::zero_length(field));
        return;
    }

    const auto is_self_orthogonal = [&](const Matrix& g) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i; j < k; ++j) {
                Elem acc = 0;
                for (std::size_t t = 0; t < n; ++t) {
                    acc = f.add(acc, f.mul(g.at(i, t), g.at(j, t)));
                }
                if (acc != 0) {
                    return false;
                }
            }
        }
        return true;
    };

    std::vector<std::size_t> pivots(k);
    std::iota(pivots.begin(), pivots.end(), std::size_t{0});
    while (true) {
        std::vector<bool> is_pivot(n, false);
        for (std::size_t p : pivots) {
            is_pivot[p] = true;
        }
        std::vector<std::pair<std::size_t, std::size_t>> free_positions;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = pivots[i] + 1; j < n; ++j) {
                if (!is_pivot[j]) {
                    free_positions.emplace_back(i, j);
                }
            }
        }

        Matrix g(field, k, n);
        for (std::size_t i = 0; i < k; ++i) {
            g.at(i, pivots[i]) = 1;
        }
        std::vector<Elem> values(free_positions.size(), 0);
        while (true) {
            if (is_self_orthogonal(g)) {
                fn(Code::from_generator(g));
            }
            std::size_t pos = 0;
            while (pos < values.size()) {
                if (values[pos] + 1u < f.q()) {
                    values[pos] = static_cast<Elem>(values[pos] + 1);
                    g.at(free_positions[pos].first, free_positions[pos].second) = values[pos];
                    break;
                }
                values[pos] = 0;
                g.at(free_positions[pos].first, free_positions[pos].second) = 0;
                ++pos;
            }
            if (pos == values.size()) {
                break;
            }
        }

        // Next pivot-column combination, lexicographic.
        bool advanced = false;
        for (std::size_t idx = k; idx-- > 0;) {
            if (pivots[idx] + (k - idx) < n) {
                ++pivots[idx];
                for (std::size_t t = idx + 1; t < k; ++t) {
                    pivots[t] = pivots[t - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            return;
        }
    }
}

RandomSelfDual random_self_dual(std::size_t n, unsigned q, std::uint64_t seed, std::size_t max_blocks) {
    require_even(n);
    const Pool& pool = indecomposable_pool(q);
    if (pool.lengths.empty()) {
        throw Error(Errc::empty_pool, "no indecomposable building blocks available for q = " + std::to_string(q));
    }
    if (max_blocks == 0 || max_blocks > n / 2) {
        max_blocks = n / 2; // no composition has more parts than n/2
    }

    // representable[r][b]: r can be written as a sum of at most b pool lengths.
    std::vector<std::vector<bool>> representable(n + 1, std::vector<bool>(max_blocks + 1, false));
    for (std::size_t b = 0; b <= max_blocks; ++b) {
        representable[0][b] = true;
    }
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t b = 1; b <= max_blocks; ++b) {
            for (std::size_t len : pool.lengths) {
                if (len <= r && representable[r - len][b - 1]) {
                    representable[r][b] = true;
                    break;
                }
            }
        }
    }
    if (!representable[n][max_blocks]) {
        throw Error(Errc::empty_pool,
                    "length " + std::to_string(n) + " is not a sum of at most " + std::to_string(max_blocks) +
                        " available block lengths");
    }

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> parts;
    std::size_t remaining = n;
    while (remaining > 0) {
        std::vector<std::size_t> feasible;
        const std::size_t blocks_left = max_blocks - parts.size();
        for (std::size_t len : pool.lengths) {
            if (len <= remaining && blocks_left >= 1 && representable[remaining - len][blocks_left - 1]) {
                feasible.push_back(len);
            }
        }
        std::uniform_int_distribution<std::size_t> pick(0, feasible.size() - 1);
        parts.push_back(feasible[pick(rng)]);
        remaining -= parts.back();
    }

    Code code = Code::zero_length(pool.field);
    for (std::size_t len : parts) {
        const auto& candidates = pool.by_length.at(len);
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        code = direct_sum(code, candidates[pick(rng)]);
    }

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    code = permute_columns(code, perm);

    const auto units = pool.field->square_roots_of_unity();
    std::vector<Elem> scalars(n);
    std::uniform_int_distribution<std::size_t> pick_unit(0, units.size() - 1);
    for (Elem& s : scalars) {
        s = units[pick_unit(rng)];
    }
    code = scale_columns(code, scalars);

    if (!is_self_dual(code)) {
        throw Error(Errc::internal, "random construction lost self-duality");
    }
    return {std::move(code), parts.size()};
}

CensusTable census_report(std::size_t n_max, unsigned q, bool verify_enumeration) {
    require_even(n_max);
    require_prime_power(q);
    CensusTable table;
    table.q = q;
    std::map<std::size_t, mpz_class> memo;
    for (std::size_t n = 2; n <= n_max; n += 2) {
        CensusRow row;
        row.n = n;
        row.self_dual_count = count_self_dual(n, q);
        row.indecomposable_count = indecomposable_recursive_memo(n, q, memo);
        row.ratio = mpq_class(row.indecomposable_count, row.self_dual_count);
        row.ratio.canonicalize();
        row.provenance = "recursion";
        row.counts_consistent = row.indecomposable_count >= 0 && row.indecomposable_count <= row.self_dual_count;
        if (verify_enumeration && gaussian_binomial(n, n / 2, q) <= kEnumerationBound) {
            mpz_class total = 0, indecomposable = 0;
            enumerate_self_dual(n, q, [&](const Code& c) {
                ++total;
                if (count_blocks(c) == 1) {
                    ++indecomposable;
                }
            });
            row.enum_self_dual = total;
            row.enum_indecomposable = indecomposable;
            row.enumeration_agrees = total == row.self_dual_count && indecomposable == row.indecomposable_count;
            row.provenance += "+enumeration";
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string to_csv(const CensusTable& table) {
    std::ostringstream out;
    out << "n,G,C,ratio,provenance\n";
    for (const auto& row : table.rows) {
        out << row.n << ',' << row.self_dual_count.get_str() << ',' << row.indecomposable_count.get_str() << ','
            << row.ratio.get_str() << ',' << row.provenance << '\n';
    }
    return out.str();
}

} // namespace gorcode
