#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "homcx/matrix.hpp"

namespace homcx {

/// The exterior algebra on d generators of odd degree m, acting on itself
/// by left multiplication. Basis: subsets of {1..d} as bitmasks (bit j-1
/// for generator j), grade t = subsets of size t, ordered by mask value.
class LefschetzModel {
public:
    LefschetzModel(Field field, int d, int m = 1);

    const Field& field() const { return field_; }
    int rank() const { return d_; }
    int weight() const { return m_; }

    const std::vector<std::uint32_t>& grade(int t) const;
    std::size_t grade_dim(int t) const { return (t < 0 || t > d_) ? 0 : grade(t).size(); }
    std::size_t index(std::uint32_t mask) const;

private:
    Field field_;
    int d_;
    int m_;
    std::vector<std::vector<std::uint32_t>> grades_;
    std::vector<std::size_t> index_;
};

/// A homogeneous element: coefficients on increasing wedge monomials.
struct ExteriorElement {
    int grade = 0;
    std::map<std::uint32_t, Elem> terms;

    static ExteriorElement zero(int grade) { return {grade, {}}; }
    /// theta_j, 1-based.
    static ExteriorElement generator(int j);
    /// theta_1 theta_2 + theta_3 theta_4 + ... over the first `pairs` pairs.
    static ExteriorElement pair_sum(int pairs);
};

/// Sign of theta_S wedge theta_T against theta_{S u T}; 0 if they overlap.
int wedge_sign(std::uint32_t s, std::uint32_t t);

ExteriorElement multiply(const Field& f, const ExteriorElement& a, const ExteriorElement& b);
ExteriorElement add(const Field& f, const ExteriorElement& a, const ExteriorElement& b);

/// Left multiplication by `u` from grade t to grade t + u.grade.
Matrix multiplication_matrix(const LefschetzModel& model, const ExteriorElement& u, int t);
/// Multiplication by theta_1 theta_2 + ... + theta_7 theta_8; requires d >= 8.
Matrix w_matrix(const LefschetzModel& model, int t);

struct ProfileResult {
    bool ok = true;
    std::optional<int> failing_grade;
    std::vector<std::size_t> ranks;  ///< rank of w at t = 0..6
};
/// Injective for t = 0..3, surjective for t = 3..6.
ProfileResult verify_lefschetz_profile(const LefschetzModel& model);

/// Homology of a cone, keyed by (k, offset) meaning homological degree k m + offset.
struct ConeDimensionTable {
    int rank = 0;
    std::map<std::pair<int, int>, long long> entries;
    long long total = 0;
    long long bound = 0;  ///< 2^rank * unit

    std::map<long long, long long> concrete(long long m) const;
};

/// Cone of multiplication by `u` on the free rank-1 module. Rejects odd grades.
ConeDimensionTable cone_oracle(const LefschetzModel& model, const ExteriorElement& u, long long unit = 1);
/// Cone of w; requires d >= 8.
ConeDimensionTable cone_dimensions(const LefschetzModel& model, long long unit = 1);
/// Homology of a tensor of d two-term complexes: C(d, t) at degree t m.
ConeDimensionTable hypercube_table(int d, long long unit = 1);
/// Degree-wise convolution of two tables.
ConeDimensionTable kunneth(const ConeDimensionTable& a, const ConeDimensionTable& b);
/// The full table for rank d >= 8: cone of w on the first 8 factors tensored with the rest.
ConeDimensionTable d_table(const Field& field, int d, long long unit = 1);

/// 252 * 2^(d-8); checks it against 2^d - 2^(d-6) and 2^d.
long long total_with_tail(int d);

long long binomial(int n, int k);

}  // namespace homcx
