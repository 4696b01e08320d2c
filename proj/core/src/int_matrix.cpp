#include "stackyaut/int_matrix.hpp"

#include <numeric>
#include <sstream>

namespace stackyaut {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged initializer for IntMatrix");
        for (long long x : r) entries_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("column length mismatch in from_columns");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

IntMatrix IntMatrix::column(const IntVector& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

IntMatrix IntMatrix::row(const IntVector& v) {
    IntMatrix m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
    return m;
}

IntMatrix IntMatrix::permutation(const std::vector<std::size_t>& perm) {
    IntMatrix m(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= perm.size())
            throw std::invalid_argument("permutation index out of range");
        m.at(perm[i], i) = 1;
    }
    return m;
}

IntVector IntMatrix::column_vec(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

IntVector IntMatrix::row_vec(std::size_t r) const {
    IntVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("dimension mismatch in matrix product");
    IntMatrix m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                m.at(i, j) += a * other.at(k, j);
        }
    return m;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (cols_ != v.size())
        throw std::invalid_argument("dimension mismatch in matrix-vector product");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("dimension mismatch in matrix sum");
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] + other.entries_[i];
    return m;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = -entries_[i];
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::hcat(const IntMatrix& other) const {
    if (rows_ != other.rows_)
        throw std::invalid_argument("row mismatch in hcat");
    IntMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
    }
    return m;
}

IntMatrix IntMatrix::vcat(const IntMatrix& other) const {
    if (cols_ != other.cols_)
        throw std::invalid_argument("column mismatch in vcat");
    IntMatrix m(rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = other.at(i, j);
    return m;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
    IntMatrix m(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            m.at(i, j) = at(row_idx[i], col_idx[j]);
    return m;
}

IntMatrix IntMatrix::columns(const std::vector<std::size_t>& col_idx) const {
    std::vector<std::size_t> all_rows(rows_);
    std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
    return submatrix(all_rows, col_idx);
}

std::size_t IntMatrix::rank() const {
    // Fraction-free elimination on a working copy.
    IntMatrix w = *this;
    std::size_t rank = 0;
    std::size_t col = 0;
    Int prev = 1;
    while (rank < w.rows_ && col < w.cols_) {
        std::size_t pivot = rank;
        while (pivot < w.rows_ && w.at(pivot, col) == 0) ++pivot;
        if (pivot == w.rows_) { ++col; continue; }
        if (pivot != rank)
            for (std::size_t j = 0; j < w.cols_; ++j) std::swap(w.at(pivot, j), w.at(rank, j));
        for (std::size_t i = rank + 1; i < w.rows_; ++i) {
            for (std::size_t j = col + 1; j < w.cols_; ++j)
                w.at(i, j) = (w.at(rank, col) * w.at(i, j) - w.at(i, col) * w.at(rank, j)) / prev;
            w.at(i, col) = 0;
        }
        prev = w.at(rank, col);
        ++rank;
        ++col;
    }
    return rank;
}

Int IntMatrix::det() const {
    if (rows_ != cols_)
        throw std::invalid_argument("det of non-square matrix");
    if (rows_ == 0) return 1;
    // Bareiss.
    IntMatrix w = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < rows_; ++k) {
        std::size_t pivot = k;
        while (pivot < rows_ && w.at(pivot, k) == 0) ++pivot;
        if (pivot == rows_) return 0;
        if (pivot != k) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(w.at(pivot, j), w.at(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < rows_; ++i)
            for (std::size_t j = k + 1; j < cols_; ++j)
                w.at(i, j) = (w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(rows_ - 1, rows_ - 1) : -w.at(rows_ - 1, rows_ - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

Int gcd_vec(const IntVector& v) {
    Int g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

bool is_zero_vec(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace stackyaut
