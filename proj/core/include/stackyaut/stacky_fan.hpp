#ifndef STACKYAUT_STACKY_FAN_HPP
#define STACKYAUT_STACKY_FAN_HPP

#include "stackyaut/fan.hpp"
#include "stackyaut/gale.hpp"

namespace stackyaut {

/// Stacky fan (N, Sigma, beta). beta_columns holds the b_i in N's generator
/// coordinates, one column per fan ray; the image of b_i modulo torsion must
/// be a positive multiple of ray i.
struct StackyFan {
    FgAbelianGroup n_group;
    Fan fan;
    IntMatrix beta_columns;  // k x n
};

ValidationReport validate_stacky_fan(const StackyFan& sf);

/// The data of the quotient stack [Z/G] at character level: Z as primitive
/// collections, G as its character group DG(beta), alpha as beta_vee.
struct QuotientPresentation {
    PrimitiveCollectionSet z_combinatorics;
    GaleDualData gale;

    const FgAbelianGroup& g_characters() const { return gale.dg; }
    const GroupHom& alpha_matrix() const { return gale.beta_vee; }
    const FgAbelianGroup& mu() const { return gale.mu; }
};

QuotientPresentation quotient_presentation(const StackyFan& sf);

/// Fan symmetry (sigma, tau) with tau(b_i) = b_sigma(i), plus the induced
/// automorphism on DG(beta). tau acts on the canonical presentation of N.
struct StackySymmetry {
    std::vector<std::size_t> sigma;
    IntMatrix tau;         // k_c x k_c on canonical generators of N
    IntMatrix induced_dg;  // on the generators of DG(beta)
};

std::vector<StackySymmetry> find_symmetries(const StackyFan& sf);

/// The computable shadow of the main isomorphism statement: pi2 computed by
/// two independent routes plus the discrete symmetry group order.
struct TheoremShadowReport {
    FgAbelianGroup pi2_via_mu;
    FgAbelianGroup pi2_via_lattice;
    bool pi2_agree = false;
    std::size_t symmetry_order = 0;
};

TheoremShadowReport theorem_shadow(const StackyFan& sf);

/// beta as a map, for direct use of the gale-duality operations.
BetaMap beta_map(const StackyFan& sf);

}  // namespace stackyaut

#endif
