#include "stackyaut/normal_form.hpp"

namespace stackyaut {

namespace {

using boost::multiprecision::abs;

// Row/column operation helpers acting on a matrix and its witness.

void swap_rows(IntMatrix& a, IntMatrix& u, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
}

void swap_cols(IntMatrix& a, IntMatrix& v, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
}

// row_i += q * row_j
void add_row(IntMatrix& a, IntMatrix& u, std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) += q * a.at(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) += q * u.at(j, c);
}

// col_i += q * col_j
void add_col(IntMatrix& a, IntMatrix& v, std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, i) += q * a.at(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) += q * v.at(r, j);
}

void negate_row(IntMatrix& a, IntMatrix& u, std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
}

// Truncated-division quotient; exact enough for reduction loops since the
// remainder strictly shrinks in absolute value.
Int quot(const Int& a, const Int& b) { return a / b; }

}  // namespace

IntVector SnfDecomposition::diagonal() const {
    IntVector out;
    std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (d.at(i, i) != 0) out.push_back(d.at(i, i));
    return out;
}

std::size_t SnfDecomposition::rank() const { return diagonal().size(); }

SnfDecomposition snf(const IntMatrix& a) {
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    IntMatrix v = IntMatrix::identity(a.cols());
    const std::size_t bound = std::min(d.rows(), d.cols());

    for (std::size_t t = 0; t < bound; ++t) {
        // Minimal-absolute-value pivot in the trailing block, lowest row then
        // lowest column on ties.
        auto find_pivot = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
            std::optional<std::pair<std::size_t, std::size_t>> best;
            Int best_abs = 0;
            for (std::size_t i = t; i < d.rows(); ++i)
                for (std::size_t j = t; j < d.cols(); ++j) {
                    if (d.at(i, j) == 0) continue;
                    Int m = abs(d.at(i, j));
                    if (!best || m < best_abs) {
                        best = {i, j};
                        best_abs = m;
                    }
                }
            return best;
        };

        auto pivot = find_pivot();
        if (!pivot) break;

        for (;;) {
            swap_rows(d, u, t, pivot->first);
            swap_cols(d, v, t, pivot->second);

            // Clear column t below and row t to the right of the pivot.
            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                add_row(d, u, i, t, -quot(d.at(i, t), d.at(t, t)));
                if (d.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                add_col(d, v, j, t, -quot(d.at(t, j), d.at(t, t)));
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                pivot = find_pivot();
                continue;
            }

            // Divisibility sweep: the pivot must divide everything in the
            // trailing block. Fold an offending row into row t and redo.
            bool divides = true;
            for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row(d, u, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
            pivot = find_pivot();
        }

        if (d.at(t, t) < 0) negate_row(d, u, t);
    }

    return {std::move(u), std::move(d), std::move(v)};
}

HnfResult hnf(const IntMatrix& a) {
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(a.rows());

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
        // gcd-eliminate the column below pivot_row using the minimal nonzero
        // entry, lowest row index on ties.
        for (;;) {
            std::optional<std::size_t> best;
            Int best_abs = 0;
            for (std::size_t i = pivot_row; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                Int m = abs(h.at(i, col));
                if (!best || m < best_abs) {
                    best = i;
                    best_abs = m;
                }
            }
            if (!best) break;
            swap_rows(h, u, pivot_row, *best);
            bool done = true;
            for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                add_row(h, u, i, pivot_row, -quot(h.at(i, col), h.at(pivot_row, col)));
                if (h.at(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h.at(pivot_row, col) == 0) continue;
        if (h.at(pivot_row, col) < 0) negate_row(h, u, pivot_row);
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int q = h.at(i, col) / h.at(pivot_row, col);
            if (h.at(i, col) - q * h.at(pivot_row, col) < 0) q -= 1;
            add_row(h, u, i, pivot_row, -q);
        }
        ++pivot_row;
    }
    return {std::move(h), std::move(u)};
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SnfDecomposition s = snf(a);
    std::size_t r = s.rank();
    // a*x = 0  <=>  D*(V^-1 x) = 0, so the kernel is spanned by the columns
    // of V past the rank; V unimodular makes the basis saturated.
    std::vector<std::size_t> idx;
    for (std::size_t j = r; j < a.cols(); ++j) idx.push_back(j);
    return s.v.columns(idx);
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("rhs length must equal row count");
    SnfDecomposition s = snf(a);
    IntVector c = s.u * b;
    std::size_t r = s.rank();
    IntVector y(a.cols());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < r) {
            const Int& d = s.d.at(i, i);
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v * y;
}

std::optional<IntMatrix> solve_integer_matrix(const IntMatrix& a, const IntMatrix& b) {
    if (b.rows() != a.rows())
        throw std::invalid_argument("rhs row count mismatch");
    IntMatrix x(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto col = solve_integer(a, b.column_vec(j));
        if (!col) return std::nullopt;
        for (std::size_t i = 0; i < a.cols(); ++i) x.at(i, j) = (*col)[i];
    }
    return x;
}

}  // namespace stackyaut
