#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homcx/matrix.hpp"

namespace homcx {

/// Coproduct on the generators, available for the commutative family with
/// all exponents equal to the characteristic.
enum class Coproduct {
    none,
    primitive,      ///< x -> x(x)1 + 1(x)x
    group_shifted,  ///< t -> t(x)1 + 1(x)t + t(x)t, t = g - 1 in an elementary abelian group algebra
};

std::string to_string(Coproduct c);
Coproduct coproduct_from_string(const std::string& s);

/// Quantum complete intersection
///   k<x_1..x_c> / (x_i^{a_i}, x_j x_i - q_ij x_i x_j)
/// with the lexicographically ordered monomial basis x_1^{e_1} ... x_c^{e_c}.
///
/// Every algebra here is split local: the radical is spanned by the
/// monomials of positive degree and A/rad is the ground field.
class Algebra {
public:
    Field field() const { return field_; }
    std::size_t generator_count() const { return exponents_.size(); }
    const std::vector<unsigned>& exponents() const { return exponents_; }
    /// q_ij for i < j (zero-based); q(i, i) == 1 and q(j, i) == q(i, j)^{-1}.
    Elem q(std::size_t i, std::size_t j) const;
    std::size_t dim() const { return monomials_.size(); }
    const std::vector<std::vector<unsigned>>& monomials() const { return monomials_; }
    std::size_t monomial_index(const std::vector<unsigned>& e) const;
    Coproduct coproduct() const { return coproduct_; }

    /// Structure constant: x^a x^b = coeff * x^{a+b}; returns nullopt when zero.
    std::optional<std::pair<Elem, std::size_t>> multiply(std::size_t a, std::size_t b) const;

    /// Left multiplication by generator i on the monomial basis.
    const Matrix& left_generator(std::size_t i) const { return left_[i]; }
    /// Right multiplication by generator i on the monomial basis.
    const Matrix& right_generator(std::size_t i) const { return right_[i]; }

    std::string describe() const;

    friend std::shared_ptr<const Algebra> qci_algebra(Field, std::vector<unsigned>,
                                                      const std::vector<std::vector<Elem>>&,
                                                      Coproduct);

private:
    Algebra(Field f) : field_(f) {}

    Field field_;
    std::vector<unsigned> exponents_;
    std::vector<std::vector<Elem>> q_;  // full c x c table
    std::vector<std::vector<unsigned>> monomials_;
    std::vector<std::size_t> strides_;
    Coproduct coproduct_ = Coproduct::none;
    std::vector<Matrix> left_;
    std::vector<Matrix> right_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// `commutators[i][j]` for i < j gives q_ij; other entries are ignored.
/// Rejects exponents below 2, zero commutators, and a coproduct request
/// outside the commutative a_i == p family.
AlgebraPtr qci_algebra(Field field, std::vector<unsigned> exponents,
                       const std::vector<std::vector<Elem>>& commutators,
                       Coproduct coproduct = Coproduct::none);

/// Convenience: every q_ij equal to `q`.
AlgebraPtr qci_uniform(Field field, std::vector<unsigned> exponents, Elem q,
                       Coproduct coproduct = Coproduct::none);

/// The enveloping algebra A (x) A^op, again a quantum complete intersection
/// on 2c generators: the first c act on the left, the last c act on the
/// right (q^op_ij = q_ij^{-1}; left and right generators commute).
struct Envelope {
    AlgebraPtr base;
    AlgebraPtr env;
    std::size_t left(std::size_t i) const { return i; }
    std::size_t right(std::size_t i) const { return base->generator_count() + i; }
};

Envelope enveloping(const AlgebraPtr& a);

/// The opposite algebra (same exponents, inverted commutators).
AlgebraPtr opposite(const AlgebraPtr& a);

}  // namespace homcx
