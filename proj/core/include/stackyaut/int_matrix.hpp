#ifndef STACKYAUT_INT_MATRIX_HPP
#define STACKYAUT_INT_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace stackyaut {

using Int = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;

/// Dense matrix over Z with arbitrary-precision entries, row-major.
/// 0xN and Nx0 shapes are legal; products follow the usual dimension rules.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);
    static IntMatrix column(const IntVector& v);
    static IntMatrix row(const IntVector& v);
    /// Permutation matrix P with P * e_i = e_{perm[i]}.
    static IntMatrix permutation(const std::vector<std::size_t>& perm);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    IntVector column_vec(std::size_t c) const;
    IntVector row_vec(std::size_t r) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntVector operator*(const IntVector& v) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& other) const = default;

    bool is_zero() const;
    bool is_identity() const;

    /// Horizontal concatenation [this | other].
    IntMatrix hcat(const IntMatrix& other) const;
    /// Vertical concatenation [this; other].
    IntMatrix vcat(const IntMatrix& other) const;
    /// Submatrix of the given rows and columns, in the given order.
    IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                        const std::vector<std::size_t>& col_idx) const;
    IntMatrix columns(const std::vector<std::size_t>& col_idx) const;

    /// Rank over Q (fraction-free Gaussian elimination).
    std::size_t rank() const;
    /// Determinant, square matrices only (Bareiss).
    Int det() const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

Int gcd_vec(const IntVector& v);
bool is_zero_vec(const IntVector& v);

}  // namespace stackyaut

#endif
