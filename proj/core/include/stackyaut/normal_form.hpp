#ifndef STACKYAUT_NORMAL_FORM_HPP
#define STACKYAUT_NORMAL_FORM_HPP

#include <optional>

#include "stackyaut/int_matrix.hpp"

namespace stackyaut {

/// Smith normal form witness: U * input * V = D with U, V unimodular and
/// D diagonal with d1 | d2 | ... | dr, all nonnegative.
struct SnfDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    /// Nonzero diagonal entries, in divisibility order.
    IntVector diagonal() const;
    std::size_t rank() const;
};

SnfDecomposition snf(const IntMatrix& a);

/// Row Hermite normal form: returns (h, u) with u unimodular, u*a = h,
/// h row-echelon with positive pivots and entries above each pivot in [0, pivot).
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
};

HnfResult hnf(const IntMatrix& a);

/// Basis of the saturated lattice {x : a*x = 0}, one basis vector per column.
IntMatrix kernel_basis(const IntMatrix& a);

/// Some integer solution of a*x = b, or nullopt when none exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Integer solution X of a*X = b (columnwise), or nullopt.
std::optional<IntMatrix> solve_integer_matrix(const IntMatrix& a, const IntMatrix& b);

}  // namespace stackyaut

#endif
