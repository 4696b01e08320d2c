#include "stackyaut/abelian.hpp"

#include <sstream>

namespace stackyaut {

FgAbelianGroup::FgAbelianGroup(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)), snf_(snf(relations_)) {
    if (relations_.rows() != generators_)
        throw std::invalid_argument("relation matrix must have one row per generator");
    snf_rank_ = snf_.rank();
    free_rank_ = generators_ - snf_rank_;
    for (std::size_t i = 0; i < snf_rank_; ++i)
        if (snf_.d.at(i, i) > 1) {
            torsion_.push_back(snf_.d.at(i, i));
            torsion_positions_.push_back(i);
        }
    auto inv = solve_integer_matrix(snf_.u, IntMatrix::identity(generators_));
    u_inverse_ = *inv;  // U is unimodular, always invertible
}

FgAbelianGroup FgAbelianGroup::free(std::size_t rank) {
    return FgAbelianGroup(rank, IntMatrix(rank, 0));
}

FgAbelianGroup FgAbelianGroup::trivial() { return free(0); }

FgAbelianGroup FgAbelianGroup::diagonal(std::size_t free_rank, const IntVector& torsion) {
    std::size_t k = free_rank + torsion.size();
    IntMatrix r(k, torsion.size());
    for (std::size_t j = 0; j < torsion.size(); ++j) r.at(free_rank + j, j) = torsion[j];
    return FgAbelianGroup(k, std::move(r));
}

FgAbelianGroup FgAbelianGroup::cyclic(const Int& n) {
    IntMatrix r(1, 1);
    r.at(0, 0) = n;
    return FgAbelianGroup(1, std::move(r));
}

std::optional<Int> FgAbelianGroup::order() const {
    if (free_rank_ != 0) return std::nullopt;
    Int n = 1;
    for (const auto& t : torsion_) n *= t;
    return n;
}

IntVector FgAbelianGroup::normal_form(const IntVector& coords) const {
    if (coords.size() != generators_)
        throw std::invalid_argument("coordinate length mismatch");
    IntVector y = snf_.u * coords;
    for (std::size_t i = 0; i < snf_rank_; ++i) {
        const Int& d = snf_.d.at(i, i);
        if (d == 1) {
            y[i] = 0;
        } else {
            y[i] %= d;
            if (y[i] < 0) y[i] += d;
        }
    }
    return y;
}

IntVector FgAbelianGroup::free_projection(const IntVector& coords) const {
    IntVector y = snf_.u * coords;
    return IntVector(y.begin() + static_cast<std::ptrdiff_t>(snf_rank_), y.end());
}

IntMatrix FgAbelianGroup::free_projection_matrix() const {
    std::vector<std::size_t> rows;
    for (std::size_t i = snf_rank_; i < generators_; ++i) rows.push_back(i);
    std::vector<std::size_t> cols(generators_);
    for (std::size_t j = 0; j < generators_; ++j) cols[j] = j;
    return snf_.u.submatrix(rows, cols);
}

IntMatrix FgAbelianGroup::to_canonical_matrix() const {
    std::vector<std::size_t> rows;
    for (std::size_t i = snf_rank_; i < generators_; ++i) rows.push_back(i);
    for (std::size_t p : torsion_positions_) rows.push_back(p);
    std::vector<std::size_t> cols(generators_);
    for (std::size_t j = 0; j < generators_; ++j) cols[j] = j;
    return snf_.u.submatrix(rows, cols);
}

IntMatrix FgAbelianGroup::from_canonical_matrix() const {
    std::size_t kc = free_rank_ + torsion_.size();
    IntMatrix embed(generators_, kc);
    for (std::size_t j = 0; j < free_rank_; ++j) embed.at(snf_rank_ + j, j) = 1;
    for (std::size_t j = 0; j < torsion_positions_.size(); ++j)
        embed.at(torsion_positions_[j], free_rank_ + j) = 1;
    return u_inverse_ * embed;
}

FgAbelianGroup FgAbelianGroup::canonical_group() const {
    return diagonal(free_rank_, torsion_);
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
        os << "Z";
        if (free_rank_ > 1) os << "^" << free_rank_;
        first = false;
    }
    for (const auto& t : torsion_) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

bool is_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.free_rank() == b.free_rank() &&
           a.torsion_coefficients() == b.torsion_coefficients();
}

FgAbelianGroup dual_finite(const FgAbelianGroup& a) {
    if (!a.is_finite())
        throw std::invalid_argument("dual_finite requires a finite group");
    return FgAbelianGroup::diagonal(0, a.torsion_coefficients());
}

namespace {

bool same_presentation(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.generators() == b.generators() && a.relations() == b.relations();
}

}  // namespace

GroupHom::GroupHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.generators() || matrix_.cols() != source_.generators())
        throw std::invalid_argument("hom matrix shape mismatch");
    // Well-definedness: source relations must land in the target relation lattice.
    IntMatrix image = matrix_ * source_.relations();
    if (!solve_integer_matrix(target_.relations(), image))
        throw std::invalid_argument("hom does not respect relations");
}

GroupHom GroupHom::identity(const FgAbelianGroup& g) {
    return GroupHom(g, g, IntMatrix::identity(g.generators()));
}

GroupHom GroupHom::zero(const FgAbelianGroup& source, const FgAbelianGroup& target) {
    return GroupHom(source, target, IntMatrix(target.generators(), source.generators()));
}

IntVector GroupHom::apply(const IntVector& coords) const {
    return target_.normal_form(matrix_ * coords);
}

bool GroupHom::is_zero_hom() const {
    return solve_integer_matrix(target_.relations(), matrix_).has_value();
}

bool GroupHom::same_map_as(const GroupHom& other) const {
    if (!same_presentation(source_, other.source_) || !same_presentation(target_, other.target_))
        return false;
    return solve_integer_matrix(target_.relations(), matrix_ + (-other.matrix_)).has_value();
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
    if (!same_presentation(first.target(), second.source()))
        throw std::invalid_argument("homs are not composable");
    return GroupHom(first.source(), second.target(), second.matrix() * first.matrix());
}

FgAbelianGroup cokernel(const GroupHom& f) {
    return FgAbelianGroup(f.target().generators(), f.target().relations().hcat(f.matrix()));
}

KernelResult kernel(const GroupHom& f) {
    const IntMatrix& m = f.matrix();
    const IntMatrix& rs = f.source().relations();
    const IntMatrix& rt = f.target().relations();

    // x is in the kernel lattice L iff m*x lies in the target relation
    // lattice; L is the projection of ker[m | rt] to the x-block.
    IntMatrix big = kernel_basis(m.hcat(rt));
    std::vector<std::size_t> x_rows(f.source().generators());
    for (std::size_t i = 0; i < x_rows.size(); ++i) x_rows[i] = i;
    std::vector<std::size_t> all_cols(big.cols());
    for (std::size_t j = 0; j < big.cols(); ++j) all_cols[j] = j;
    IntMatrix gen = big.submatrix(x_rows, all_cols);  // generators of L

    // Relations of L / im(rs): coefficient vectors c with gen*c in im(rs).
    IntMatrix rel_big = kernel_basis(gen.hcat(rs));
    std::vector<std::size_t> c_rows(gen.cols());
    for (std::size_t i = 0; i < c_rows.size(); ++i) c_rows[i] = i;
    std::vector<std::size_t> rel_cols(rel_big.cols());
    for (std::size_t j = 0; j < rel_big.cols(); ++j) rel_cols[j] = j;
    IntMatrix rel = rel_big.submatrix(c_rows, rel_cols);

    FgAbelianGroup ker_group(gen.cols(), rel);
    GroupHom incl(ker_group, f.source(), gen);
    return {std::move(ker_group), std::move(incl)};
}

FgAbelianGroup homology_at(const GroupHom& f, const GroupHom& g) {
    if (!same_presentation(f.target(), g.source()))
        throw std::invalid_argument("homology_at: maps are not composable");
    if (!compose(g, f).is_zero_hom())
        throw std::invalid_argument("homology_at: g o f is not zero");

    KernelResult ker = kernel(g);
    const IntMatrix& gen = ker.inclusion.matrix();

    // Express each image generator of f in kernel coordinates.
    IntMatrix system = gen.hcat(g.source().relations());
    IntMatrix lift(gen.cols(), f.source().generators());
    for (std::size_t j = 0; j < f.source().generators(); ++j) {
        auto sol = solve_integer(system, f.matrix().column_vec(j));
        // Solvable because g(f(e_j)) = 0 puts f(e_j) in the kernel lattice.
        for (std::size_t i = 0; i < gen.cols(); ++i) lift.at(i, j) = (*sol)[i];
    }
    return FgAbelianGroup(gen.cols(), ker.group.relations().hcat(lift));
}

}  // namespace stackyaut
