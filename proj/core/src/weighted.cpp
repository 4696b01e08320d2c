#include "stackyaut/weighted.hpp"

#include <algorithm>

namespace stackyaut {

ReducedWeights reduce(const IntVector& q) {
    if (q.size() < 2)
        throw std::invalid_argument("need at least two weights");
    for (const auto& w : q)
        if (w <= 0) throw std::invalid_argument("weights must be positive");
    ReducedWeights out;
    out.d = gcd_vec(q);
    out.q_red = q;
    for (auto& w : out.q_red) w /= out.d;
    return out;
}

IntMatrix weight_quotient_vectors(const ReducedWeights& q_red) {
    if (gcd_vec(q_red.q_red) != 1)
        throw std::invalid_argument("reduced weights must have gcd 1");
    const std::size_t n = q_red.q_red.size() - 1;
    // SNF of the weight column has d1 = 1, so U carries Z^{n+1}/Z*a onto the
    // last n coordinates of y = U*x.
    SnfDecomposition s = snf(IntMatrix::column(q_red.q_red));
    IntMatrix v(n, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n + 1; ++j) v.at(i, j) = s.u.at(i + 1, j);
    return v;
}

Fan build_fan(const ReducedWeights& q_red) {
    IntMatrix v = weight_quotient_vectors(q_red);
    const std::size_t n = v.rows();
    Fan fan;
    fan.dim = n;
    for (std::size_t j = 0; j < n + 1; ++j) {
        IntVector ray = v.column_vec(j);
        primitivize(ray);
        fan.rays.push_back(std::move(ray));
    }
    for (std::size_t omit = 0; omit < n + 1; ++omit) {
        RaySet cone;
        for (std::size_t j = 0; j < n + 1; ++j)
            if (j != omit) cone.insert(j);
        fan.max_cones.push_back(std::move(cone));
    }
    return fan;
}

StackyFan build_stacky_fan(const IntVector& q) {
    reduce(q);  // validates positivity and arity
    const std::size_t n = q.size() - 1;

    // N = Z^{n+1} / Z*q with b_i the image of e_i.  This presentation makes
    // DG torsion-free with the original weights as the character map,
    // whatever gcd(q) is.
    StackyFan sf;
    sf.n_group = FgAbelianGroup(n + 1, IntMatrix::column(q));
    sf.beta_columns = IntMatrix::identity(n + 1);

    IntMatrix v = sf.n_group.free_projection_matrix();  // n x (n+1)
    sf.fan.dim = n;
    for (std::size_t j = 0; j < n + 1; ++j) {
        IntVector ray = v.column_vec(j);
        primitivize(ray);
        sf.fan.rays.push_back(std::move(ray));
    }
    for (std::size_t omit = 0; omit < n + 1; ++omit) {
        RaySet cone;
        for (std::size_t j = 0; j < n + 1; ++j)
            if (j != omit) cone.insert(j);
        sf.fan.max_cones.push_back(std::move(cone));
    }
    return sf;
}

bool WpsReport::ok() const {
    return stacky_validation.ok() && sequences.all_exact() && dg_is_z && weights_match &&
           mu_matches_gcd && fan_complete;
}

WpsReport verify_weighted_stack(const IntVector& q) {
    WpsReport report;
    report.reduced = reduce(q);
    report.stacky_fan = build_stacky_fan(q);
    report.stacky_validation = validate_stacky_fan(report.stacky_fan);

    BetaMap beta = beta_map(report.stacky_fan);
    report.gale = gale_dual(beta);
    report.sequences = verify_sequences(beta, report.gale);

    report.dg_is_z =
        report.gale.dg.free_rank() == 1 && report.gale.dg.torsion_coefficients().empty();
    report.weights = gale_weights(report.gale);
    if (report.weights) {
        IntVector got = *report.weights;
        IntVector want = q;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        IntVector neg;
        for (auto it = report.weights->rbegin(); it != report.weights->rend(); ++it)
            neg.push_back(-*it);
        std::sort(neg.begin(), neg.end());
        report.weights_match = (got == want) || (neg == want);
    }

    FgAbelianGroup expected_mu = report.reduced.d > 1
                                     ? FgAbelianGroup::cyclic(report.reduced.d)
                                     : FgAbelianGroup::trivial();
    report.mu_matches_gcd = is_isomorphic(report.gale.mu, expected_mu);
    report.fan_complete = is_complete(report.stacky_fan.fan);
    return report;
}

WeightedPglPresentation weighted_pgl(const IntVector& q) {
    reduce(q);  // validates positivity and arity
    return pgl_presentation(q);
}

}  // namespace stackyaut
