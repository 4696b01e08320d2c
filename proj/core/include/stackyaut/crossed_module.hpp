#ifndef STACKYAUT_CROSSED_MODULE_HPP
#define STACKYAUT_CROSSED_MODULE_HPP

#include <string>

#include "stackyaut/abelian.hpp"
#include "stackyaut/fan.hpp"
#include "stackyaut/finite_group.hpp"

namespace stackyaut {

/// Crossed module [phi: G2 -> G1] with a right action of G1 on G2.
/// action[alpha][h] is alpha^h.
struct FiniteCrossedModule {
    FiniteGroup g2;
    FiniteGroup g1;
    std::vector<Elt> phi;
    std::vector<std::vector<Elt>> action;

    static FiniteCrossedModule with_trivial_action(FiniteGroup g2, FiniteGroup g1,
                                                   std::vector<Elt> phi);

    Elt act(Elt alpha, Elt h) const { return action[alpha][h]; }
};

/// Exhaustive axiom check: phi homomorphism, action by automorphisms,
/// equivariance, Peiffer identity, centrality of ker(phi).
ValidationReport verify_crossed_module(const FiniteCrossedModule& xm);

FiniteGroup pi1(const FiniteCrossedModule& xm);
FiniteGroup pi2(const FiniteCrossedModule& xm);

/// Arrow (g, alpha) of the associated 2-group: source g, target g*phi(alpha).
struct Arrow {
    Elt g;
    Elt alpha;
    bool operator==(const Arrow&) const = default;
};

Elt arrow_source(const FiniteCrossedModule& xm, const Arrow& a);
Elt arrow_target(const FiniteCrossedModule& xm, const Arrow& a);

/// Groupoid composition; requires target(a) = source(b).
Arrow compose_arrows(const FiniteCrossedModule& xm, const Arrow& a, const Arrow& b);

/// Monoidal product (g, alpha)(h, beta) = (gh, (alpha^h) beta).
Arrow multiply_arrows(const FiniteCrossedModule& xm, const Arrow& a, const Arrow& b);

/// Strict morphism of crossed modules: f1 on objects, f2 on arrows.
struct CrossedModuleMorphism {
    FiniteCrossedModule source;
    FiniteCrossedModule target;
    std::vector<Elt> f1;
    std::vector<Elt> f2;
};

/// Checks the morphism squares; the first violated one is reported.
ValidationReport verify_morphism(const CrossedModuleMorphism& m);

/// True iff the induced maps on pi1 and pi2 are both bijective.
bool is_equivalence(const CrossedModuleMorphism& m);

/// Symbolic presentation of the weighted projective linear 2-group
/// [C* -> product of GL blocks, one per distinct weight].
struct WeightedPglPresentation {
    IntVector weights;                                // sorted ascending
    std::vector<std::pair<Int, std::size_t>> blocks;  // (weight, multiplicity)
    Int d;                                            // gcd of the weights
    FgAbelianGroup pi2;                               // Z/d
    std::string normalizer_description;               // e.g. "GL(3)" or "C* x C*"
    std::string phi_description;                      // the diagonal one-parameter map
};

WeightedPglPresentation pgl_presentation(const IntVector& weights);

}  // namespace stackyaut

#endif
