#include <doctest.h>

#include <sstream>

#include "homcx/matrix.hpp"

using namespace homcx;

namespace {

// Counts solutions of m x = 0 by enumerating every vector; rank = cols - log_p(count).
std::size_t brute_rank(const Matrix& m) {
    const std::uint32_t p = m.field().characteristic();
    std::size_t total = 1;
    for (std::size_t i = 0; i < m.cols(); ++i) total *= p;
    std::size_t zeros = 0;
    std::vector<Elem> x(m.cols(), 0);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (auto& v : x) {
            v = static_cast<Elem>(c % p);
            c /= p;
        }
        bool zero = true;
        for (std::size_t r = 0; r < m.rows() && zero; ++r) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < m.cols(); ++j) acc += static_cast<std::uint64_t>(m(r, j)) * x[j];
            zero = acc % p == 0;
        }
        zeros += zero;
    }
    std::size_t nullity = 0;
    while (zeros > 1) {
        zeros /= p;
        ++nullity;
    }
    return m.cols() - nullity;
}

Matrix lcg_matrix(Field f, std::size_t r, std::size_t c, std::uint32_t& state, int density = 2) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            state = state * 1103515245u + 12345u;
            if ((state >> 16) % density == 0) m(i, j) = (state >> 8) % f.characteristic();
        }
    return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
    Field f(7);
    for (Elem a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.from_int(-1) == 6);
    CHECK(f.pow(3, 6) == 1);
    CHECK(f.sign(3) == 6);
    CHECK_THROWS_AS(Field(9), ContractError);
    CHECK_THROWS_AS(Field(65537), ContractError);
    CHECK(is_prime(65521));
}

TEST_CASE("rank agrees with enumeration") {
    std::uint32_t state = 7;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        Field f(p);
        for (int trial = 0; trial < 12; ++trial) {
            Matrix m = lcg_matrix(f, 1 + trial % 4, 1 + (trial * 3) % 5, state);
            CHECK(rank(m) == brute_rank(m));
        }
    }
}

TEST_CASE("kernel and solve") {
    std::uint32_t state = 99;
    Field f(5);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = lcg_matrix(f, 3 + trial % 3, 4 + trial % 4, state);
        Matrix k = kernel_basis(m);
        CHECK((m * k).is_zero());
        CHECK(k.cols() == m.cols() - rank(m));
        CHECK(rank(k) == k.cols());
        Matrix x = lcg_matrix(f, m.cols(), 2, state, 1);
        Matrix b = m * x;
        auto y = solve(m, b);
        REQUIRE(y.has_value());
        CHECK(m * *y == b);
    }
    // Inconsistent: x = 1 and x = 0.
    Matrix m = Matrix::from_ints(f, 2, 1, {1, 1});
    Matrix b = Matrix::from_ints(f, 2, 1, {1, 0});
    CHECK_FALSE(solve(m, b).has_value());
    CHECK_THROWS_AS(solve(m, Matrix(f, 3, 1)), ContractError);
}

TEST_CASE("kronecker layout") {
    Field f(7);
    Matrix a = Matrix::from_ints(f, 2, 2, {1, 2, 3, 4});
    Matrix b = Matrix::from_ints(f, 2, 3, {0, 1, 2, 3, 4, 5});
    Matrix k = kronecker(a, b);
    REQUIRE(k.rows() == 4);
    REQUIRE(k.cols() == 6);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t kk = 0; kk < 2; ++kk)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t l = 0; l < 3; ++l)
                    CHECK(k(i * 2 + kk, j * 3 + l) == f.mul(a(i, j), b(kk, l)));
    // (A (x) B)(C (x) D) = AC (x) BD
    Matrix c = Matrix::from_ints(f, 2, 1, {5, 6});
    Matrix d = Matrix::from_ints(f, 3, 2, {1, 0, 0, 1, 1, 1});
    CHECK(k * kronecker(c, d) == kronecker(a * c, b * d));
}

TEST_CASE("column echelon coordinates") {
    Field f(3);
    Matrix span = Matrix::from_ints(f, 4, 3, {1, 2, 0, 0, 1, 1, 1, 0, 1, 2, 2, 1});
    Echelon e = column_echelon(span);
    CHECK(e.dim() == rank(span));
    for (std::size_t j = 0; j < e.dim(); ++j)
        for (std::size_t k = 0; k < e.dim(); ++k) CHECK(e.basis(e.pivots[j], k) == (j == k ? 1u : 0u));
    CHECK(e.basis * e.coordinates(span) == span);
}

TEST_CASE("triplet round trip") {
    Field f(11);
    Matrix m = Matrix::from_ints(f, 3, 4, {0, 1, 0, -1, 5, 0, 0, 0, 0, 0, 10, 2});
    std::stringstream ss;
    write_triplets(ss, m);
    CHECK(read_triplets(ss) == m);
}

TEST_CASE("block assembly") {
    Field f(5);
    Matrix a = Matrix::identity(f, 2), b = Matrix::from_ints(f, 1, 3, {1, 2, 3});
    Matrix s = direct_sum(a, b);
    CHECK(s.rows() == 3);
    CHECK(s.cols() == 5);
    CHECK(s.block(2, 2, 1, 3) == b);
    CHECK(hconcat(a, a).cols() == 4);
    CHECK(vconcat(b, b).rows() == 2);
    CHECK((a - a).is_zero());
    CHECK(a.transpose() == a);
}
