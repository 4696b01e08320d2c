#ifndef STACKYAUT_WEIGHTED_HPP
#define STACKYAUT_WEIGHTED_HPP

#include "stackyaut/crossed_module.hpp"
#include "stackyaut/stacky_fan.hpp"

namespace stackyaut {

struct ReducedWeights {
    Int d;
    IntVector q_red;  // q / d, gcd 1
};

/// d = gcd(q), q_red = q/d; d = 1 exactly when P(Q) is reduced.
ReducedWeights reduce(const IntVector& q);

/// Images v_0..v_n of the standard basis in Z^{n+1} / Z*(a_0..a_n), one per
/// column, not primitivized; satisfies sum a_i v_i = 0.
IntMatrix weight_quotient_vectors(const ReducedWeights& q_red);

/// Complete simplicial fan of P(q_red): primitivized quotient vectors as
/// rays, every n-subset a maximal cone. Requires gcd(q_red) = 1.
Fan build_fan(const ReducedWeights& q_red);

/// Stacky fan of P(Q): N = Z/d + Z^n (torsion generator first; dropped when
/// d = 1), b_0 = (1, v_0), b_i = (0, v_i).
StackyFan build_stacky_fan(const IntVector& q);

/// Full pipeline check that P(Q) arises from a stacky fan with the expected
/// Gale data: DG = Z, weights = Q up to sign, mu = Z/gcd(Q), sequences exact.
struct WpsReport {
    ReducedWeights reduced;
    StackyFan stacky_fan;
    ValidationReport stacky_validation;
    GaleDualData gale;
    SequenceReport sequences;
    std::optional<IntVector> weights;  // sign-normalized
    bool dg_is_z = false;
    bool weights_match = false;
    bool mu_matches_gcd = false;
    bool fan_complete = false;
    bool ok() const;
};

WpsReport verify_weighted_stack(const IntVector& q);

WeightedPglPresentation weighted_pgl(const IntVector& q);

}  // namespace stackyaut

#endif
