#include "stackyaut/gale.hpp"

namespace stackyaut {

BetaMap::BetaMap(FgAbelianGroup target, IntMatrix columns)
    : hom_(FgAbelianGroup::free(columns.cols()), std::move(target), std::move(columns)) {
    if (!cokernel(hom_).is_finite())
        throw std::invalid_argument("beta must have finite cokernel");
}

GaleDualData gale_dual(const BetaMap& beta) {
    const std::size_t n = beta.ray_count();

    // Work in the SNF-diagonalized presentation of N: free generators first,
    // then one generator per torsion coefficient.
    const FgAbelianGroup& n_group = beta.target();
    FgAbelianGroup n_canon = n_group.canonical_group();
    IntMatrix b = n_group.to_canonical_matrix() * beta.hom().matrix();  // k x n
    IntMatrix q = n_canon.relations();                                  // k x r

    // DG(beta) is the cokernel of [B Q]^T : Z^k -> Z^{n+r}; beta_vee embeds
    // Z^n as the first n coordinates.
    IntMatrix m_t = b.hcat(q).transpose();
    FgAbelianGroup dg(n + q.cols(), m_t);

    IntMatrix incl(n + q.cols(), n);
    for (std::size_t i = 0; i < n; ++i) incl.at(i, i) = 1;
    GroupHom beta_vee(FgAbelianGroup::free(n), dg, incl);

    FgAbelianGroup mu = dual_finite(cokernel(beta_vee));
    return {std::move(dg), std::move(beta_vee), std::move(q), std::move(b), std::move(mu)};
}

FgAbelianGroup mu_of(const BetaMap& beta) { return gale_dual(beta).mu; }

std::optional<IntVector> gale_weights(const GaleDualData& gd) {
    if (gd.dg.free_rank() != 1 || !gd.dg.torsion_coefficients().empty())
        return std::nullopt;
    IntMatrix w = gd.dg.free_projection_matrix() * gd.beta_vee.matrix();  // 1 x n
    IntVector row = w.row_vec(0);
    for (const auto& x : row) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : row) y = -y;
        break;
    }
    return row;
}

bool SequenceReport::all_exact() const {
    for (const auto& c : checks)
        if (!c.ok()) return false;
    return true;
}

SequenceReport verify_sequences(const BetaMap& beta, const GaleDualData& gd) {
    SequenceReport report;
    const std::size_t n = beta.ray_count();
    FgAbelianGroup zn = FgAbelianGroup::free(n);

    FgAbelianGroup n_canon = beta.target().canonical_group();
    GroupHom beta_canon(zn, n_canon, gd.resolution_b);

    // Sequence (1.4): 0 -> DG* -> Z^n -> N -> Coker(beta) -> 0.
    // The left map is the dual of beta_vee, written on a basis of Hom(DG, Z).
    IntMatrix dg_chars = gd.dg.free_projection_matrix();  // f x (n+r), rows are characters
    std::vector<std::size_t> first_n(n);
    for (std::size_t j = 0; j < n; ++j) first_n[j] = j;
    IntMatrix w = dg_chars.columns(first_n);  // f x n, restriction along beta_vee
    GroupHom dual_incl(FgAbelianGroup::free(w.rows()), zn, w.transpose());

    report.checks.push_back({"(1.4) at DG*",
                             FgAbelianGroup::free(kernel_basis(w.transpose()).cols())});
    report.checks.push_back({"(1.4) at Z^n", homology_at(dual_incl, beta_canon)});
    {
        FgAbelianGroup coker = cokernel(beta_canon);
        GroupHom proj(n_canon, coker, IntMatrix::identity(n_canon.generators()));
        report.checks.push_back({"(1.4) at N", homology_at(beta_canon, proj)});
    }

    // Sequence (1.5): 0 -> N* -> Z^n -> DG -> Coker(beta_vee) -> 0.
    // The left map is the dual of the torsion-free part of beta.
    IntMatrix beta_bar = n_canon.free_projection_matrix() * gd.resolution_b;  // d x n
    GroupHom n_dual_incl(FgAbelianGroup::free(beta_bar.rows()), zn, beta_bar.transpose());

    report.checks.push_back({"(1.5) at N*",
                             FgAbelianGroup::free(kernel_basis(beta_bar.transpose()).cols())});
    report.checks.push_back({"(1.5) at Z^n", homology_at(n_dual_incl, gd.beta_vee)});
    {
        FgAbelianGroup coker = cokernel(gd.beta_vee);
        GroupHom proj(gd.dg, coker, IntMatrix::identity(gd.dg.generators()));
        report.checks.push_back({"(1.5) at DG", homology_at(gd.beta_vee, proj)});
    }

    return report;
}

}  // namespace stackyaut
