#ifndef STACKYAUT_GALE_HPP
#define STACKYAUT_GALE_HPP

#include <string>
#include <vector>

#include "stackyaut/abelian.hpp"

namespace stackyaut {

/// beta: Z^n -> N with finite cokernel, the map of a stacky fan.
class BetaMap {
public:
    /// columns: k x n matrix whose columns are the b_i in N's generator coords.
    BetaMap(FgAbelianGroup target, IntMatrix columns);

    std::size_t ray_count() const { return hom_.matrix().cols(); }
    const FgAbelianGroup& target() const { return hom_.target(); }
    const GroupHom& hom() const { return hom_; }

private:
    GroupHom hom_;
};

/// Output of the Gale dual construction.
struct GaleDualData {
    FgAbelianGroup dg;       // DG(beta)
    GroupHom beta_vee;       // Z^n -> DG(beta)
    IntMatrix resolution_q;  // relations of the canonical presentation of N
    IntMatrix resolution_b;  // beta lifted to the canonical presentation
    FgAbelianGroup mu;       // finite kernel of G -> (C*)^n, as a group
};

GaleDualData gale_dual(const BetaMap& beta);

FgAbelianGroup mu_of(const BetaMap& beta);

/// Weight row of beta_vee on the free quotient of DG when DG is isomorphic
/// to Z; sign-normalized so the first nonzero weight is positive.
std::optional<IntVector> gale_weights(const GaleDualData& gd);

/// Exactness report for the two four-term sequences attached to beta.
struct ExactnessCheck {
    std::string position;
    FgAbelianGroup homology;  // trivial iff exact there
    bool ok() const { return homology.is_trivial(); }
};

struct SequenceReport {
    std::vector<ExactnessCheck> checks;
    bool all_exact() const;
};

SequenceReport verify_sequences(const BetaMap& beta, const GaleDualData& gd);

}  // namespace stackyaut

#endif
