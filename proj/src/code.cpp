#include "gorcode/code.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace gorcode {

Code Code::from_generator(Matrix generator) {
    if (generator.rows() > 0 && rank(generator) < generator.rows()) {
        throw Error(Errc::rank_deficient, "generator matrix must have full row rank");
    }
    Code c(std::move(generator));
    if (c.k() > 0) {
        c.systematic_ = systematic_form(c.generator_);
    }
    return c;
}

Code Code::zero_code(FieldPtr field, std::size_t n) {
    return Code(Matrix(std::move(field), 0, n));
}

const SystematicForm& Code::systematic() const {
    if (!systematic_) {
        throw Error(Errc::internal, "degenerate code has no systematic form");
    }
    return *systematic_;
}

Code dual(const Code& c) {
    return Code::from_generator(kernel(c.generator()));
}

bool is_self_dual(const Code& c) {
    if (c.n() != 2 * c.k()) {
        return false;
    }
    if (c.degenerate()) {
        return c.n() == 0;
    }
    return matmul(c.generator(), c.generator().transposed()).is_zero();
}

Code schur_product(const Code& c1, const Code& c2) {
    if (!c1.field()->same_as(*c2.field()) || c1.n() != c2.n()) {
        throw Error(Errc::shape_mismatch, "schur product requires matching field and length");
    }
    const Field& f = *c1.field();
    const std::size_t n = c1.n();
    Matrix products(c1.field(), c1.k() * c2.k(), n);
    for (std::size_t i = 0; i < c1.k(); ++i) {
        for (std::size_t j = 0; j < c2.k(); ++j) {
            for (std::size_t t = 0; t < n; ++t) {
                products.at(i * c2.k() + j, t) = f.mul(c1.generator().at(i, t), c2.generator().at(j, t));
            }
        }
    }
    const RrefResult red = rref(products);
    Matrix basis(c1.field(), red.rank(), n);
    for (std::size_t i = 0; i < red.rank(); ++i) {
        for (std::size_t t = 0; t < n; ++t) {
            basis.at(i, t) = red.reduced.at(i, t);
        }
    }
    return Code::from_generator(std::move(basis));
}

Code schur_power(const Code& c, unsigned d) {
    if (d == 0) {
        throw Error(Errc::shape_error, "schur power needs d >= 1");
    }
    Code acc = c;
    for (unsigned i = 1; i < d; ++i) {
        acc = schur_product(acc, c);
    }
    return acc;
}

Code direct_sum(const Code& c1, const Code& c2) {
    if (!c1.field()->same_as(*c2.field())) {
        throw Error(Errc::spec_mismatch, "direct sum requires the same field");
    }
    Matrix g(c1.field(), c1.k() + c2.k(), c1.n() + c2.n());
    for (std::size_t i = 0; i < c1.k(); ++i) {
        for (std::size_t j = 0; j < c1.n(); ++j) {
            g.at(i, j) = c1.generator().at(i, j);
        }
    }
    for (std::size_t i = 0; i < c2.k(); ++i) {
        for (std::size_t j = 0; j < c2.n(); ++j) {
            g.at(c1.k() + i, c1.n() + j) = c2.generator().at(i, j);
        }
    }
    return Code::from_generator(std::move(g));
}

PointSet column_points(const Code& c) {
    const Field& f = *c.field();
    PointSet ps;
    std::map<std::vector<Elem>, std::size_t> index_of;
    for (std::size_t j = 0; j < c.n(); ++j) {
        std::vector<Elem> column(c.k());
        Elem lead = 0;
        for (std::size_t i = 0; i < c.k(); ++i) {
            column[i] = c.generator().at(i, j);
            if (lead == 0 && column[i] != 0) {
                lead = column[i];
            }
        }
        if (lead == 0) {
            throw Error(Errc::zero_column, "column " + std::to_string(j + 1) + " is zero");
        }
        const Elem scale = f.inv(lead);
        for (Elem& e : column) {
            e = f.mul(e, scale);
        }
        auto [it, inserted] = index_of.try_emplace(column, ps.points.size());
        if (inserted) {
            ps.points.push_back(column);
            ps.multiplicities.push_back(0);
            ps.classes.emplace_back();
        }
        ps.multiplicities[it->second] += 1;
        ps.classes[it->second].push_back(j);
        ps.column_reps.push_back(std::move(column));
    }
    return ps;
}

namespace {

// Exponent vectors of total degree d in `vars` variables, graded-lex.
void monomials_rec(std::size_t vars, unsigned remaining, std::vector<unsigned>& current,
                   std::vector<std::vector<unsigned>>& out) {
    if (current.size() + 1 == vars) {
        current.push_back(remaining);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        current.push_back(e);
        monomials_rec(vars, remaining - e, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<unsigned>> monomial_exponents(std::size_t vars, unsigned degree) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current;
    monomials_rec(vars, degree, current, out);
    return out;
}

} // namespace

Code evaluation_code(FieldPtr field, const std::vector<std::vector<Elem>>& representatives, unsigned degree) {
    if (degree == 0 || representatives.empty()) {
        throw Error(Errc::shape_error, "evaluation code needs degree >= 1 and at least one point");
    }
    const Field& f = *field;
    const std::size_t vars = representatives.front().size();
    const std::size_t n = representatives.size();
    for (const auto& rep : representatives) {
        if (rep.size() != vars) {
            throw Error(Errc::shape_mismatch, "representatives of different dimension");
        }
    }
    const auto exponents = monomial_exponents(vars, degree);

    Matrix eval(field, exponents.size(), n);
    for (std::size_t r = 0; r < exponents.size(); ++r) {
        for (std::size_t j = 0; j < n; ++j) {
            Elem value = 1;
            for (std::size_t v = 0; v < vars; ++v) {
                value = f.mul(value, f.pow(representatives[j][v], exponents[r][v]));
            }
            eval.at(r, j) = value;
        }
    }
    const RrefResult red = rref(eval);
    Matrix basis(field, red.rank(), n);
    for (std::size_t i = 0; i < red.rank(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            basis.at(i, j) = red.reduced.at(i, j);
        }
    }
    return Code::from_generator(std::move(basis));
}

bool veronese_dimension_check(const Code& c, unsigned d) {
    const PointSet ps = column_points(c);
    if (ps.distinct() < c.n()) {
        throw Error(Errc::proportional_columns, "columns are not distinct projective points");
    }
    const Code eval = evaluation_code(c.field(), ps.column_reps, d);
    return eval.k() == schur_power(c, d).k();
}

Code permute_columns(const Code& c, const std::vector<std::size_t>& perm) {
    if (perm.size() != c.n()) {
        throw Error(Errc::shape_mismatch, "permutation length must equal code length");
    }
    Matrix g(c.field(), c.k(), c.n());
    for (std::size_t j = 0; j < c.n(); ++j) {
        for (std::size_t i = 0; i < c.k(); ++i) {
            g.at(i, j) = c.generator().at(i, perm[j]);
        }
    }
    return Code::from_generator(std::move(g));
}

Code scale_columns(const Code& c, const std::vector<Elem>& scalars) {
    if (scalars.size() != c.n()) {
        throw Error(Errc::shape_mismatch, "scalar count must equal code length");
    }
    const Field& f = *c.field();
    Matrix g(c.field(), c.k(), c.n());
    for (std::size_t j = 0; j < c.n(); ++j) {
        if (scalars[j] == 0) {
            throw Error(Errc::zero_column, "column scaling by zero");
        }
        for (std::size_t i = 0; i < c.k(); ++i) {
            g.at(i, j) = f.mul(c.generator().at(i, j), scalars[j]);
        }
    }
    return Code::from_generator(std::move(g));
}

} // namespace gorcode
