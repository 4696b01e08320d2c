#ifndef STACKYAUT_ABELIAN_HPP
#define STACKYAUT_ABELIAN_HPP

#include <optional>
#include <string>

#include "stackyaut/normal_form.hpp"

namespace stackyaut {

/// Finitely generated abelian group presented as Z^k / (column span of R).
/// Invariants (free rank, torsion coefficients) come from the SNF of R and
/// do not depend on the presentation.
class FgAbelianGroup {
public:
    FgAbelianGroup() : FgAbelianGroup(0, IntMatrix(0, 0)) {}
    FgAbelianGroup(std::size_t generators, IntMatrix relations);

    static FgAbelianGroup free(std::size_t rank);
    static FgAbelianGroup trivial();
    /// Z^rank + Z/t1 + Z/t2 + ... presented diagonally, free generators first.
    static FgAbelianGroup diagonal(std::size_t free_rank, const IntVector& torsion);
    static FgAbelianGroup cyclic(const Int& n);

    std::size_t generators() const { return generators_; }
    const IntMatrix& relations() const { return relations_; }

    std::size_t free_rank() const { return free_rank_; }
    /// Divisibility chain t1 | t2 | ..., each ti >= 2.
    const IntVector& torsion_coefficients() const { return torsion_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    std::optional<Int> order() const;

    /// Canonical representative of x modulo the relation lattice; two coord
    /// vectors represent the same element iff their normal forms are equal.
    IntVector normal_form(const IntVector& coords) const;

    /// Projection of coords onto the free quotient Z^free_rank (modulo
    /// torsion); the map realizing N -> N/N_tor on this presentation.
    IntVector free_projection(const IntVector& coords) const;
    /// Matrix of free_projection, free_rank x generators.
    IntMatrix free_projection_matrix() const;

    /// Generator coordinates of the canonical presentation (free generators
    /// first, then one generator per torsion coefficient).
    IntMatrix to_canonical_matrix() const;
    IntMatrix from_canonical_matrix() const;
    FgAbelianGroup canonical_group() const;

    std::string to_string() const;

private:
    std::size_t generators_;
    IntMatrix relations_;
    SnfDecomposition snf_;
    std::size_t snf_rank_;
    std::size_t free_rank_;
    IntVector torsion_;
    std::vector<std::size_t> torsion_positions_;  // SNF coordinate slots with d > 1
    IntMatrix u_inverse_;
};

bool is_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Self-dual model of Hom(a, C*) for finite a.
FgAbelianGroup dual_finite(const FgAbelianGroup& a);

/// Element of a specific FgAbelianGroup, held in canonical normal form.
/// The group must outlive the element.
class GroupElement {
public:
    GroupElement(const FgAbelianGroup& group, IntVector coords)
        : group_(&group), coords_(group.normal_form(std::move(coords))) {}

    const FgAbelianGroup& group() const { return *group_; }
    const IntVector& coords() const { return coords_; }

    bool operator==(const GroupElement& other) const { return coords_ == other.coords_; }

private:
    const FgAbelianGroup* group_;
    IntVector coords_;
};

/// Homomorphism between presented groups, given by a matrix on generators.
/// Well-definedness (relations map into relations) is checked at construction.
class GroupHom {
public:
    GroupHom() : GroupHom(FgAbelianGroup::trivial(), FgAbelianGroup::trivial(), IntMatrix()) {}
    GroupHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix);

    static GroupHom identity(const FgAbelianGroup& g);
    static GroupHom zero(const FgAbelianGroup& source, const FgAbelianGroup& target);

    const FgAbelianGroup& source() const { return source_; }
    const FgAbelianGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    IntVector apply(const IntVector& coords) const;
    bool is_zero_hom() const;

    /// Two homs with identical presentations are equal as maps iff the
    /// difference matrix lands columnwise in the target relations.
    bool same_map_as(const GroupHom& other) const;

private:
    FgAbelianGroup source_;
    FgAbelianGroup target_;
    IntMatrix matrix_;
};

GroupHom compose(const GroupHom& second, const GroupHom& first);

FgAbelianGroup cokernel(const GroupHom& f);

struct KernelResult {
    FgAbelianGroup group;
    GroupHom inclusion;
};
KernelResult kernel(const GroupHom& f);

/// ker(g) / im(f) for a composable pair with g o f = 0; throws
/// std::invalid_argument when the pair is not a complex.
FgAbelianGroup homology_at(const GroupHom& f, const GroupHom& g);

}  // namespace stackyaut

#endif
