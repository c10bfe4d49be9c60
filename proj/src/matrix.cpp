#include "homcx/matrix.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <utility>

namespace homcx {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ContractError(what);
}

// row[j] += factor * pivot[j] for j in [from, cols)
void axpy_row(Elem* row, const Elem* pivot, Elem factor, std::size_t from, std::size_t cols,
              std::uint32_t p) {
    for (std::size_t j = from; j < cols; ++j) {
        if (pivot[j] == 0) continue;
        row[j] = static_cast<Elem>((row[j] + static_cast<std::uint64_t>(factor) * pivot[j]) % p);
    }
}

// Forward elimination shared by rank and rref. With `reduce` the result is
// fully reduced (zeros above pivots as well).
std::vector<std::size_t> eliminate(Matrix& m, bool reduce) {
    const Field& f = m.field();
    const std::uint32_t p = f.characteristic();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m(i, c) != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(sel, j), m(r, j));
        Elem* prow = m.row_ptr(r);
        Elem inv = f.inv(prow[c]);
        for (std::size_t j = c; j < cols; ++j) prow[j] = f.mul(prow[j], inv);
        for (std::size_t i = reduce ? 0 : r + 1; i < rows; ++i) {
            if (i == r) continue;
            Elem a = m(i, c);
            if (a == 0) continue;
            axpy_row(m.row_ptr(i), prow, f.neg(a), c, cols, p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
    require(data_.size() == rows * cols, "matrix entry count does not match shape");
    for (Elem& e : data_) e %= field_.characteristic();
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_ints(Field field, std::size_t rows, std::size_t cols,
                         const std::vector<long long>& values) {
    require(values.size() == rows * cols, "matrix entry count does not match shape");
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < values.size(); ++i) m.data_[i] = field.from_int(values[i]);
    return m;
}

bool Matrix::is_zero() const {
    for (Elem e : data_)
        if (e != 0) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require(cols_ == o.rows_, "matrix product shape mismatch");
    require(field_ == o.field_, "matrix product over different fields");
    const std::uint32_t p = field_.characteristic();
    Matrix out(field_, rows_, o.cols_);
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        const Elem* a = row_ptr(i);
        bool any = false;
        for (std::size_t k = 0; k < cols_; ++k) {
            if (a[k] == 0) continue;
            any = true;
            const Elem* b = o.row_ptr(k);
            const std::uint64_t s = a[k];
            for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += s * b[j];
        }
        if (!any) continue;
        Elem* c = out.row_ptr(i);
        for (std::size_t j = 0; j < o.cols_; ++j) c[j] = static_cast<Elem>(acc[j] % p);
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], o.data_[i]);
    return out;
}

Matrix Matrix::operator-() const { return scaled(field_.neg(1)); }

Matrix Matrix::scaled(Elem s) const {
    Matrix out(*this);
    for (Elem& e : out.data_) e = field_.mul(e, s);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
    Matrix out(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b, Elem s) {
    require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            Elem v = b(i, j);
            if (v == 0) continue;
            Elem& t = (*this)(r0 + i, c0 + j);
            t = field_.add(t, field_.mul(v, s));
        }
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix out(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        require(idx[i] < rows_, "row index out of range");
        std::copy(row_ptr(idx[i]), row_ptr(idx[i]) + cols_, out.row_ptr(i));
    }
    return out;
}

std::vector<std::size_t> rref_in_place(Matrix& m) { return eliminate(m, true); }

std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    // Eliminate along the shorter dimension.
    Matrix work = m.rows() <= m.cols() ? m : m.transpose();
    return eliminate(work, false).size();
}

Matrix kernel_basis(const Matrix& m) {
    const Field& f = m.field();
    Matrix r = m;
    auto pivots = eliminate(r, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix out(f, m.cols(), m.cols() - pivots.size());
    std::size_t k = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        out(free, k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) out(pivots[i], k) = f.neg(r(i, free));
        ++k;
    }
    return out;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows())
        throw ContractError("solve: row counts differ (" + std::to_string(m.rows()) + " vs " +
                            std::to_string(b.rows()) + ")");
    const Field& f = m.field();
    Matrix aug = hconcat(m, b);
    auto pivots = eliminate(aug, true);
    Matrix x(f, m.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= m.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(i, m.cols() + j);
    }
    if (m * x != b) return std::nullopt;
    return x;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    const Field& f = a.field();
    Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Elem s = a(i, j);
            if (s == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = f.mul(s, b(k, l));
        }
    return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), "hconcat row mismatch");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), "vconcat column mismatch");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

Echelon column_echelon(const Matrix& span) {
    Matrix t = span.transpose();
    auto pivots = eliminate(t, true);
    Matrix basis(span.field(), span.rows(), pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < span.rows(); ++i) basis(i, j) = t(j, i);
    return Echelon{std::move(basis), std::move(pivots)};
}

void write_triplets(std::ostream& out, const Matrix& m) {
    out << m.rows() << ' ' << m.cols() << ' ' << m.field().characteristic() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out << i << ' ' << j << ' ' << m(i, j) << '\n';
}

Matrix read_triplets(std::istream& in) {
    std::size_t rows = 0, cols = 0;
    std::uint32_t p = 0;
    if (!(in >> rows >> cols >> p)) throw ContractError("triplet dump: bad header");
    Matrix m(Field(p), rows, cols);
    std::size_t r, c;
    long long v;
    while (in >> r >> c >> v) {
        if (r >= rows || c >= cols) throw ContractError("triplet dump: entry out of range");
        m(r, c) = m.field().from_int(v);
    }
    return m;
}

}  // namespace homcx
