#include "homcx/algebra.hpp"

#include <sstream>

namespace homcx {

std::string to_string(Coproduct c) {
    switch (c) {
        case Coproduct::none: return "none";
        case Coproduct::primitive: return "primitive";
        case Coproduct::group_shifted: return "group_shifted";
    }
    return "none";
}

Coproduct coproduct_from_string(const std::string& s) {
    if (s == "none") return Coproduct::none;
    if (s == "primitive") return Coproduct::primitive;
    if (s == "group_shifted" || s == "group") return Coproduct::group_shifted;
    throw ContractError("unknown coproduct '" + s + "'");
}

Elem Algebra::q(std::size_t i, std::size_t j) const { return q_[i][j]; }

std::size_t Algebra::monomial_index(const std::vector<unsigned>& e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] >= exponents_[i]) throw ContractError("monomial exponent out of range");
        idx += e[i] * strides_[i];
    }
    return idx;
}

std::optional<std::pair<Elem, std::size_t>> Algebra::multiply(std::size_t a, std::size_t b) const {
    const auto& e = monomials_[a];
    const auto& f = monomials_[b];
    const std::size_t c = generator_count();
    std::vector<unsigned> sum(c);
    for (std::size_t i = 0; i < c; ++i) {
        sum[i] = e[i] + f[i];
        if (sum[i] >= exponents_[i]) return std::nullopt;
    }
    // Moving x_i^{f_i} left past x_j^{e_j} (j > i) costs q_ij^{e_j f_i}.
    Elem coeff = 1;
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j)
            if (e[j] && f[i]) coeff = field_.mul(coeff, field_.pow(q_[i][j], std::uint64_t(e[j]) * f[i]));
    return std::make_pair(coeff, monomial_index(sum));
}

std::string Algebra::describe() const {
    std::ostringstream os;
    os << "F_" << field_.characteristic() << "<";
    for (std::size_t i = 0; i < generator_count(); ++i) os << (i ? "," : "") << "x" << i + 1;
    os << ">/(";
    for (std::size_t i = 0; i < generator_count(); ++i)
        os << (i ? "," : "") << "x" << i + 1 << "^" << exponents_[i];
    for (std::size_t i = 0; i < generator_count(); ++i)
        for (std::size_t j = i + 1; j < generator_count(); ++j)
            os << ",x" << j + 1 << "x" << i + 1 << "-" << q_[i][j] << "x" << i + 1 << "x" << j + 1;
    os << ")";
    return os.str();
}

AlgebraPtr qci_algebra(Field field, std::vector<unsigned> exponents,
                       const std::vector<std::vector<Elem>>& commutators, Coproduct coproduct) {
    const std::size_t c = exponents.size();
    if (c == 0) throw ContractError("algebra needs at least one generator");
    for (unsigned a : exponents)
        if (a < 2) throw ContractError("every exponent must be at least 2");

    auto alg = std::shared_ptr<Algebra>(new Algebra(field));
    alg->exponents_ = exponents;
    alg->q_.assign(c, std::vector<Elem>(c, 1));
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j) {
            Elem q = 1;
            if (i < commutators.size() && j < commutators[i].size()) q = commutators[i][j] % field.characteristic();
            if (q == 0) throw ContractError("commutators must be nonzero");
            alg->q_[i][j] = q;
            alg->q_[j][i] = field.inv(q);
        }

    if (coproduct != Coproduct::none) {
        for (std::size_t i = 0; i < c; ++i) {
            if (exponents[i] != field.characteristic())
                throw ContractError("coproduct data needs every exponent equal to the characteristic");
            for (std::size_t j = i + 1; j < c; ++j)
                if (alg->q_[i][j] != 1) throw ContractError("coproduct data needs a commutative algebra");
        }
    }
    alg->coproduct_ = coproduct;

    alg->strides_.assign(c, 1);
    for (std::size_t i = c; i-- > 1;) alg->strides_[i - 1] = alg->strides_[i] * exponents[i];
    std::size_t dim = alg->strides_[0] * exponents[0];
    alg->monomials_.resize(dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::vector<unsigned> e(c);
        std::size_t rest = idx;
        for (std::size_t i = 0; i < c; ++i) {
            e[i] = static_cast<unsigned>(rest / alg->strides_[i]);
            rest %= alg->strides_[i];
        }
        alg->monomials_[idx] = std::move(e);
    }

    for (std::size_t g = 0; g < c; ++g) {
        std::vector<unsigned> unit(c, 0);
        unit[g] = 1;
        std::size_t xg = alg->monomial_index(unit);
        Matrix left(field, dim, dim), right(field, dim, dim);
        for (std::size_t b = 0; b < dim; ++b) {
            if (auto r = alg->multiply(xg, b)) left(r->second, b) = r->first;
            if (auto r = alg->multiply(b, xg)) right(r->second, b) = r->first;
        }
        alg->left_.push_back(std::move(left));
        alg->right_.push_back(std::move(right));
    }
    return alg;
}

AlgebraPtr qci_uniform(Field field, std::vector<unsigned> exponents, Elem q, Coproduct coproduct) {
    const std::size_t c = exponents.size();
    std::vector<std::vector<Elem>> table(c, std::vector<Elem>(c, field.from_int(q)));
    return qci_algebra(field, std::move(exponents), table, coproduct);
}

AlgebraPtr opposite(const AlgebraPtr& a) {
    const std::size_t c = a->generator_count();
    std::vector<std::vector<Elem>> table(c, std::vector<Elem>(c, 1));
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j) table[i][j] = a->q(j, i);
    return qci_algebra(a->field(), a->exponents(), table);
}

Envelope enveloping(const AlgebraPtr& a) {
    const std::size_t c = a->generator_count();
    std::vector<unsigned> exps = a->exponents();
    exps.insert(exps.end(), a->exponents().begin(), a->exponents().end());
    std::vector<std::vector<Elem>> table(2 * c, std::vector<Elem>(2 * c, 1));
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j) {
            table[i][j] = a->q(i, j);
            table[c + i][c + j] = a->q(j, i);
        }
    return Envelope{a, qci_algebra(a->field(), std::move(exps), table)};
}

}  // namespace homcx
