#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "homcx/field.hpp"

namespace homcx {

/// Dense matrix over a prime field, row-major.
///
/// Every morphism and differential in the library is carried by one of
/// these. Values are immutable in practice: operations return new matrices.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix identity(Field field, std::size_t n);
    static Matrix zero(Field field, std::size_t rows, std::size_t cols) {
        return Matrix(field, rows, cols);
    }
    /// Builds a matrix from small signed integers, reduced mod p.
    static Matrix from_ints(Field field, std::size_t rows, std::size_t cols,
                            const std::vector<long long>& values);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Elem* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
    Elem* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
    const std::vector<Elem>& entries() const { return data_; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(Elem s) const;
    Matrix transpose() const;

    Matrix column(std::size_t c) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    /// Adds `b` (times `s`) into the block starting at (r0, c0).
    void add_block(std::size_t r0, std::size_t c0, const Matrix& b, Elem s = 1);
    /// Rows picked by index, in the given order.
    Matrix select_rows(const std::vector<std::size_t>& idx) const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

std::size_t rank(const Matrix& m);

/// Columns form a basis of the null space of `m`.
Matrix kernel_basis(const Matrix& m);

/// Returns some x with m * x == b, or nullopt if the system is inconsistent.
/// Mismatched row counts throw ContractError.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// Kronecker product; entry ((i, k), (j, l)) sits at (i * b.rows + k, j * b.cols + l).
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);

/// A subspace in reduced column-echelon form: basis(pivots[j], j) == 1 and
/// basis(pivots[j], k) == 0 for k != j. Coordinates of a vector of the
/// subspace are its entries at the pivot rows.
struct Echelon {
    Matrix basis;
    std::vector<std::size_t> pivots;

    std::size_t dim() const { return pivots.size(); }
    /// Coordinates of vectors (columns of v) assumed to lie in the subspace.
    Matrix coordinates(const Matrix& v) const { return v.select_rows(pivots); }
};

Echelon column_echelon(const Matrix& span);

/// Row-reduces `m` in place to reduced row-echelon form; returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m);

/// Debug dump: "rows cols p" then "row col value" per nonzero entry.
void write_triplets(std::ostream& out, const Matrix& m);
Matrix read_triplets(std::istream& in);

}  // namespace homcx
