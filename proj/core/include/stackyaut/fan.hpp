#ifndef STACKYAUT_FAN_HPP
#define STACKYAUT_FAN_HPP

#include <set>
#include <string>
#include <vector>

#include "stackyaut/normal_form.hpp"

namespace stackyaut {

using RaySet = std::set<std::size_t>;

/// Simplicial fan given by primitive ray vectors and maximal cones as
/// ray-index sets; faces are implicit (any subset of a cone's rays).
struct Fan {
    std::size_t dim = 0;
    std::vector<IntVector> rays;
    std::vector<RaySet> max_cones;
};

/// List of human-readable violations; empty means valid.
struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_fan(const Fan& f);

/// Minimal ray sets contained in no cone; the combinatorial shadow of the
/// locus removed from C^n in the quotient construction.
struct PrimitiveCollectionSet {
    std::vector<RaySet> collections;
};

PrimitiveCollectionSet primitive_collections(const Fan& f);

/// True iff the fan's support is all of Q^d: every facet of a max cone is
/// shared by exactly two max cones and the dual graph is connected.
/// Requires all max cones to be full-dimensional.
bool is_complete(const Fan& f);

/// Lattice isomorphisms g -> f realized by a ray permutation sigma and a
/// unimodular tau with tau * f.ray[i] = g.ray[sigma(i)], cones onto cones.
struct FanIsomorphism {
    std::vector<std::size_t> sigma;
    IntMatrix tau;
};

std::vector<FanIsomorphism> find_fan_isomorphisms(const Fan& f, const Fan& g);

/// Divide by the gcd of the coordinates; returns the multiplier.
Int primitivize(IntVector& v);

}  // namespace stackyaut

#endif
