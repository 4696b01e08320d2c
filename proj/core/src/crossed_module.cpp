#include "stackyaut/crossed_module.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace stackyaut {

FiniteCrossedModule FiniteCrossedModule::with_trivial_action(FiniteGroup g2, FiniteGroup g1,
                                                             std::vector<Elt> phi) {
    std::vector<std::vector<Elt>> action(g2.order(), std::vector<Elt>(g1.order()));
    for (Elt a = 0; a < g2.order(); ++a)
        for (Elt h = 0; h < g1.order(); ++h) action[a][h] = a;
    return {std::move(g2), std::move(g1), std::move(phi), std::move(action)};
}

namespace {

std::string trip(const char* what, int a, int b) {
    std::ostringstream os;
    os << what << " fails at (" << a << ", " << b << ")";
    return os.str();
}

}  // namespace

ValidationReport verify_crossed_module(const FiniteCrossedModule& xm) {
    ValidationReport report;
    const FiniteGroup& g1 = xm.g1;
    const FiniteGroup& g2 = xm.g2;

    if (xm.phi.size() != g2.order() || xm.action.size() != g2.order()) {
        report.violations.push_back("phi/action tables have wrong size");
        return report;
    }
    for (const auto& row : xm.action)
        if (row.size() != g1.order()) {
            report.violations.push_back("action table has wrong row size");
            return report;
        }

    if (!is_homomorphism(g2, g1, xm.phi))
        report.violations.push_back("phi is not a homomorphism");

    // right action by automorphisms
    for (Elt a = 0; a < g2.order(); ++a)
        if (xm.act(a, g1.identity()) != a) {
            report.violations.push_back("action by the identity is not trivial");
            break;
        }
    for (Elt a = 0; a < g2.order(); ++a)
        for (Elt h = 0; h < g1.order(); ++h)
            for (Elt k = 0; k < g1.order(); ++k)
                if (xm.act(xm.act(a, h), k) != xm.act(a, g1.op(h, k))) {
                    report.violations.push_back(trip("action compatibility", h, k));
                    h = g1.order();  // stop after first
                    a = g2.order();
                    break;
                }
    for (Elt h = 0; h < g1.order(); ++h) {
        std::set<Elt> image;
        bool hom = true;
        for (Elt a = 0; a < g2.order(); ++a) {
            image.insert(xm.act(a, h));
            for (Elt b = 0; b < g2.order(); ++b)
                if (xm.act(g2.op(a, b), h) != g2.op(xm.act(a, h), xm.act(b, h))) hom = false;
        }
        if (!hom || image.size() != g2.order()) {
            report.violations.push_back("action of element " + std::to_string(h) +
                                        " is not an automorphism of G2");
            break;
        }
    }

    // equivariance: phi(alpha^h) = h^-1 phi(alpha) h
    for (Elt a = 0; a < g2.order(); ++a)
        for (Elt h = 0; h < g1.order(); ++h)
            if (xm.phi[xm.act(a, h)] !=
                g1.op(g1.op(g1.inverse(h), xm.phi[a]), h))
                report.violations.push_back(trip("equivariance", a, h));

    // Peiffer: alpha^{phi(beta)} = beta^-1 alpha beta
    for (Elt a = 0; a < g2.order(); ++a)
        for (Elt b = 0; b < g2.order(); ++b)
            if (xm.act(a, xm.phi[b]) != g2.op(g2.op(g2.inverse(b), a), b))
                report.violations.push_back(trip("Peiffer identity", a, b));

    // centrality of ker(phi) in G2
    for (Elt a = 0; a < g2.order(); ++a) {
        if (xm.phi[a] != g1.identity()) continue;
        for (Elt b = 0; b < g2.order(); ++b)
            if (g2.op(a, b) != g2.op(b, a))
                report.violations.push_back(trip("centrality of ker(phi)", a, b));
    }
    return report;
}

namespace {

void require_valid(const FiniteCrossedModule& xm) {
    ValidationReport r = verify_crossed_module(xm);
    if (!r.ok())
        throw std::invalid_argument("invalid crossed module: " + r.violations.front());
}

}  // namespace

FiniteGroup pi1(const FiniteCrossedModule& xm) {
    require_valid(xm);
    std::vector<Elt> image_gens(xm.phi.begin(), xm.phi.end());
    return xm.g1.quotient(xm.g1.generated_subgroup(image_gens)).group;
}

FiniteGroup pi2(const FiniteCrossedModule& xm) {
    require_valid(xm);
    std::vector<Elt> kernel;
    for (Elt a = 0; a < xm.g2.order(); ++a)
        if (xm.phi[a] == xm.g1.identity()) kernel.push_back(a);
    return xm.g2.subgroup(kernel);
}

Elt arrow_source(const FiniteCrossedModule&, const Arrow& a) { return a.g; }

Elt arrow_target(const FiniteCrossedModule& xm, const Arrow& a) {
    return xm.g1.op(a.g, xm.phi[a.alpha]);
}

Arrow compose_arrows(const FiniteCrossedModule& xm, const Arrow& a, const Arrow& b) {
    if (arrow_target(xm, a) != arrow_source(xm, b))
        throw std::invalid_argument("arrows are not composable");
    return {a.g, xm.g2.op(a.alpha, b.alpha)};
}

Arrow multiply_arrows(const FiniteCrossedModule& xm, const Arrow& a, const Arrow& b) {
    return {xm.g1.op(a.g, b.g), xm.g2.op(xm.act(a.alpha, b.g), b.alpha)};
}

ValidationReport verify_morphism(const CrossedModuleMorphism& m) {
    ValidationReport report;
    if (m.f1.size() != m.source.g1.order() || m.f2.size() != m.source.g2.order()) {
        report.violations.push_back("component maps have wrong size");
        return report;
    }
    if (!is_homomorphism(m.source.g1, m.target.g1, m.f1)) {
        report.violations.push_back("f1 is not a homomorphism");
        return report;
    }
    if (!is_homomorphism(m.source.g2, m.target.g2, m.f2)) {
        report.violations.push_back("f2 is not a homomorphism");
        return report;
    }
    for (Elt a = 0; a < m.source.g2.order(); ++a)
        if (m.f1[m.source.phi[a]] != m.target.phi[m.f2[a]]) {
            report.violations.push_back("phi square fails at arrow " + std::to_string(a));
            return report;
        }
    for (Elt a = 0; a < m.source.g2.order(); ++a)
        for (Elt h = 0; h < m.source.g1.order(); ++h)
            if (m.f2[m.source.act(a, h)] != m.target.act(m.f2[a], m.f1[h])) {
                report.violations.push_back("action square fails at (" + std::to_string(a) +
                                            ", " + std::to_string(h) + ")");
                return report;
            }
    return report;
}

bool is_equivalence(const CrossedModuleMorphism& m) {
    ValidationReport r = verify_morphism(m);
    if (!r.ok())
        throw std::invalid_argument("not a morphism: " + r.violations.front());
    require_valid(m.source);
    require_valid(m.target);

    // induced map on pi1: bijective iff image classes exhaust target pi1 and
    // the count matches
    auto src_im1 = m.source.g1.generated_subgroup(
        std::vector<Elt>(m.source.phi.begin(), m.source.phi.end()));
    auto tgt_im1 = m.target.g1.generated_subgroup(
        std::vector<Elt>(m.target.phi.begin(), m.target.phi.end()));
    auto src_q = m.source.g1.quotient(src_im1);
    auto tgt_q = m.target.g1.quotient(tgt_im1);

    // well-defined map on cosets; check bijectivity by counting distinct images
    std::vector<int> coset_image(src_q.group.order(), -1);
    for (Elt g = 0; g < m.source.g1.order(); ++g) {
        Elt sc = src_q.projection[g];
        Elt tc = tgt_q.projection[m.f1[g]];
        if (coset_image[sc] == -1) coset_image[sc] = tc;
        else if (coset_image[sc] != tc) return false;  // not well defined; cannot happen
    }
    std::set<int> pi1_images(coset_image.begin(), coset_image.end());
    if (src_q.group.order() != tgt_q.group.order() ||
        pi1_images.size() != tgt_q.group.order())
        return false;

    // induced map on pi2: restriction of f2 to the kernels
    std::vector<Elt> src_ker, tgt_ker;
    for (Elt a = 0; a < m.source.g2.order(); ++a)
        if (m.source.phi[a] == m.source.g1.identity()) src_ker.push_back(a);
    for (Elt a = 0; a < m.target.g2.order(); ++a)
        if (m.target.phi[a] == m.target.g1.identity()) tgt_ker.push_back(a);
    std::set<Elt> images;
    std::set<Elt> tgt_ker_set(tgt_ker.begin(), tgt_ker.end());
    for (Elt a : src_ker) {
        if (!tgt_ker_set.count(m.f2[a])) return false;  // cannot happen for morphisms
        images.insert(m.f2[a]);
    }
    return src_ker.size() == tgt_ker.size() && images.size() == tgt_ker.size();
}

WeightedPglPresentation pgl_presentation(const IntVector& weights) {
    if (weights.empty())
        throw std::invalid_argument("weight list must be nonempty");
    for (const auto& w : weights)
        if (w <= 0) throw std::invalid_argument("weights must be positive");

    WeightedPglPresentation out;
    out.weights = weights;
    std::sort(out.weights.begin(), out.weights.end());
    out.d = gcd_vec(out.weights);

    for (const auto& w : out.weights) {
        if (!out.blocks.empty() && out.blocks.back().first == w)
            out.blocks.back().second += 1;
        else
            out.blocks.emplace_back(w, 1);
    }

    out.pi2 = out.d > 1 ? FgAbelianGroup::cyclic(out.d) : FgAbelianGroup::trivial();

    std::ostringstream norm;
    for (std::size_t i = 0; i < out.blocks.size(); ++i) {
        if (i) norm << " x ";
        if (out.blocks[i].second == 1)
            norm << "C*";
        else
            norm << "GL(" << out.blocks[i].second << ")";
    }
    out.normalizer_description = norm.str();

    std::ostringstream phi;
    phi << "lambda -> diag(";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) phi << ", ";
        phi << "lambda^" << weights[i];
    }
    phi << ")";
    out.phi_description = phi.str();
    return out;
}

}  // namespace stackyaut
