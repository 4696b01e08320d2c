#include "stackyaut/stacky_fan.hpp"

#include <algorithm>
#include <numeric>

namespace stackyaut {

namespace {

// smallest nonnegative residue
Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

ValidationReport validate_stacky_fan(const StackyFan& sf) {
    ValidationReport report = validate_fan(sf.fan);

    const std::size_t k = sf.n_group.generators();
    const std::size_t n = sf.beta_columns.cols();
    if (sf.beta_columns.rows() != k) {
        report.violations.push_back("beta has wrong row count for N");
        return report;
    }
    if (sf.fan.rays.size() != n)
        report.violations.push_back("ray count differs from beta column count");
    if (sf.fan.dim != sf.n_group.free_rank())
        report.violations.push_back("fan dimension differs from rank of N/N_tor");
    if (!report.ok()) return report;

    // finite cokernel: [B | R] must have full row rank over Q
    if (sf.beta_columns.hcat(sf.n_group.relations()).rank() != k)
        report.violations.push_back("beta does not have finite cokernel");

    // image of b_i mod torsion must be a positive multiple of ray i
    for (std::size_t i = 0; i < n; ++i) {
        IntVector img = sf.n_group.free_projection(sf.beta_columns.column_vec(i));
        const IntVector& ray = sf.fan.rays[i];
        if (is_zero_vec(img)) {
            report.violations.push_back("b_" + std::to_string(i) +
                                        " is torsion; it cannot generate a ray");
            continue;
        }
        Int mult = 0;
        bool ok = true;
        for (std::size_t c = 0; c < ray.size(); ++c)
            if (ray[c] != 0) {
                if (img[c] % ray[c] != 0) { ok = false; break; }
                mult = img[c] / ray[c];
                break;
            }
        if (ok && mult > 0)
            for (std::size_t c = 0; c < ray.size(); ++c)
                if (img[c] != mult * ray[c]) { ok = false; break; }
        if (!ok || mult <= 0)
            report.violations.push_back("image of b_" + std::to_string(i) +
                                        " is not a positive multiple of ray " +
                                        std::to_string(i));
    }
    return report;
}

BetaMap beta_map(const StackyFan& sf) {
    return BetaMap(sf.n_group, sf.beta_columns);
}

QuotientPresentation quotient_presentation(const StackyFan& sf) {
    ValidationReport v = validate_stacky_fan(sf);
    if (!v.ok())
        throw std::invalid_argument("invalid stacky fan: " + v.violations.front());
    return {primitive_collections(sf.fan), gale_dual(beta_map(sf))};
}

std::vector<StackySymmetry> find_symmetries(const StackyFan& sf) {
    ValidationReport v = validate_stacky_fan(sf);
    if (!v.ok())
        throw std::invalid_argument("invalid stacky fan: " + v.violations.front());

    const std::size_t n = sf.beta_columns.cols();
    const std::size_t d = sf.n_group.free_rank();
    const IntVector& torsion = sf.n_group.torsion_coefficients();
    const std::size_t s = torsion.size();
    const std::size_t kc = d + s;

    // b_i in canonical coordinates, split into free and torsion parts
    IntMatrix bc = sf.n_group.to_canonical_matrix() * sf.beta_columns;  // kc x n
    std::vector<std::size_t> free_rows(d), tor_rows(s), all_cols(n);
    std::iota(free_rows.begin(), free_rows.end(), std::size_t{0});
    std::iota(tor_rows.begin(), tor_rows.end(), d);
    std::iota(all_cols.begin(), all_cols.end(), std::size_t{0});
    IntMatrix bf = bc.submatrix(free_rows, all_cols);  // d x n
    IntMatrix bt = bc.submatrix(tor_rows, all_cols);   // s x n

    if (bf.rank() != d)
        throw std::invalid_argument("symmetry search requires the b_i to span N/N_tor over Q");

    FgAbelianGroup n_canon = sf.n_group.canonical_group();
    GaleDualData gd = gale_dual(beta_map(sf));
    const IntMatrix& q = gd.resolution_q;

    // basis columns for solving the free block
    std::vector<std::size_t> basis;
    for (std::size_t j = 0; j < n && basis.size() < d; ++j) {
        basis.push_back(j);
        if (bf.columns(basis).rank() != basis.size()) basis.pop_back();
    }
    IntMatrix bf_basis_t = bf.columns(basis).transpose();

    // Candidate torsion blocks: E entry (l, j) must satisfy t_j * E_lj = 0 mod t_l.
    auto torsion_block_candidates = [&](bool column_constrained) {
        // enumerate all s x s (or s x d for C, unconstrained entries) matrices
        // with row l taken mod torsion[l]
        std::vector<IntMatrix> out;
        std::size_t cols = column_constrained ? s : d;
        std::vector<Int> limits;
        std::vector<Int> steps;
        for (std::size_t l = 0; l < s; ++l)
            for (std::size_t j = 0; j < cols; ++j) {
                Int step = 1;
                if (column_constrained) {
                    // t_j * e = 0 mod t_l  =>  e multiple of t_l / gcd(t_l, t_j)
                    step = torsion[l] / boost::multiprecision::gcd(torsion[l], torsion[j]);
                }
                steps.push_back(step);
                limits.push_back(torsion[l] / step);
            }
        std::vector<Int> counter(limits.size(), 0);
        for (;;) {
            IntMatrix m(s, cols);
            for (std::size_t idx = 0; idx < counter.size(); ++idx)
                m.at(idx / cols, idx % cols) = counter[idx] * steps[idx];
            out.push_back(std::move(m));
            std::size_t pos = 0;
            while (pos < counter.size()) {
                counter[pos] += 1;
                if (counter[pos] < limits[pos]) break;
                counter[pos] = 0;
                ++pos;
            }
            if (pos == counter.size()) break;
        }
        return out;
    };

    std::vector<IntMatrix> e_candidates = torsion_block_candidates(true);
    std::vector<IntMatrix> c_candidates = torsion_block_candidates(false);

    // keep only bijective torsion blocks
    {
        std::vector<IntMatrix> bijective;
        for (const auto& e : e_candidates) {
            std::set<IntVector> images;
            std::vector<Int> elt(s, 0);
            bool done = false;
            while (!done) {
                IntVector img(s);
                for (std::size_t l = 0; l < s; ++l) {
                    for (std::size_t j = 0; j < s; ++j) img[l] += e.at(l, j) * elt[j];
                    img[l] = mod_pos(img[l], torsion[l]);
                }
                images.insert(img);
                std::size_t pos = 0;
                for (;;) {
                    if (pos == s) { done = true; break; }
                    elt[pos] += 1;
                    if (elt[pos] < torsion[pos]) break;
                    elt[pos] = 0;
                    ++pos;
                }
            }
            Int order = 1;
            for (const auto& t : torsion) order *= t;
            if (Int(images.size()) == order) bijective.push_back(e);
        }
        e_candidates = std::move(bijective);
    }

    std::vector<StackySymmetry> out;
    std::set<RaySet> cone_set(sf.fan.max_cones.begin(), sf.fan.max_cones.end());

    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    do {
        // cone-preservation pre-filter
        std::set<RaySet> mapped;
        for (const auto& c : sf.fan.max_cones) {
            RaySet img;
            for (auto i : c) img.insert(sigma[i]);
            mapped.insert(std::move(img));
        }
        if (mapped != cone_set) continue;

        IntMatrix bf_sigma(d, n);
        IntMatrix bt_sigma(s, n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < d; ++i) bf_sigma.at(i, j) = bf.at(i, sigma[j]);
            for (std::size_t i = 0; i < s; ++i) bt_sigma.at(i, j) = bt.at(i, sigma[j]);
        }

        // free block: A * bf = bf_sigma, unimodular
        auto a_t = solve_integer_matrix(bf_basis_t, bf_sigma.columns(basis).transpose());
        if (!a_t) continue;
        IntMatrix a = a_t->transpose();
        if (a * bf != bf_sigma) continue;
        Int det = a.det();
        if (det != 1 && det != -1) continue;

        for (const auto& c_blk : c_candidates)
            for (const auto& e_blk : e_candidates) {
                // need C*f_i + E*t_i = t_sigma(i) mod torsion, all i
                bool fits = true;
                IntMatrix lhs = c_blk * bf + e_blk * bt;
                for (std::size_t j = 0; j < n && fits; ++j)
                    for (std::size_t l = 0; l < s; ++l)
                        if (mod_pos(lhs.at(l, j) - bt_sigma.at(l, j), torsion[l]) != 0) {
                            fits = false;
                            break;
                        }
                if (!fits) continue;

                IntMatrix tau(kc, kc);
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j) tau.at(i, j) = a.at(i, j);
                for (std::size_t l = 0; l < s; ++l) {
                    for (std::size_t j = 0; j < d; ++j) tau.at(d + l, j) = c_blk.at(l, j);
                    for (std::size_t j = 0; j < s; ++j) tau.at(d + l, d + j) = e_blk.at(l, j);
                }

                // tau^{-1} modulo relations, columnwise
                IntMatrix system = tau.hcat(q);
                IntMatrix tau_inv(kc, kc);
                for (std::size_t j = 0; j < kc; ++j) {
                    IntVector e_j(kc);
                    e_j[j] = 1;
                    auto sol = solve_integer(system, e_j);
                    for (std::size_t i = 0; i < kc; ++i) tau_inv.at(i, j) = (*sol)[i];
                }

                // induced automorphism of DG(beta) from tau^{-1}:
                // tau_inv * B = B * P_sigma^T + Q * Y,  tau_inv * Q = Q * Y2
                IntMatrix p_sigma = IntMatrix::permutation(sigma);
                IntMatrix y = *solve_integer_matrix(
                    q, tau_inv * bc + (-(bc * p_sigma.transpose())));
                IntMatrix y2 = *solve_integer_matrix(q, tau_inv * q);

                IntMatrix w(n + s, n + s);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = p_sigma.at(i, j);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < s; ++j) w.at(i, n + j) = y.at(j, i);
                for (std::size_t i = 0; i < s; ++i)
                    for (std::size_t j = 0; j < s; ++j) w.at(n + i, n + j) = y2.at(j, i);

                out.push_back({sigma, std::move(tau), std::move(w)});
            }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

TheoremShadowReport theorem_shadow(const StackyFan& sf) {
    ValidationReport v = validate_stacky_fan(sf);
    if (!v.ok())
        throw std::invalid_argument("invalid stacky fan: " + v.violations.front());

    TheoremShadowReport report;
    BetaMap beta = beta_map(sf);
    report.pi2_via_mu = mu_of(beta);

    // Independent route: invariant factors of Z^{n+r} modulo the rows of
    // [B Q] together with the first n coordinate vectors, straight from SNF.
    GaleDualData gd = gale_dual(beta);
    const std::size_t n = beta.ray_count();
    IntMatrix m_t = gd.resolution_b.hcat(gd.resolution_q).transpose();
    IntMatrix embed(m_t.rows(), n);
    for (std::size_t i = 0; i < n; ++i) embed.at(i, i) = 1;
    SnfDecomposition s = snf(m_t.hcat(embed));
    IntVector torsion;
    for (const auto& dg : s.diagonal())
        if (dg > 1) torsion.push_back(dg);
    std::size_t free_left = m_t.rows() - s.rank();
    report.pi2_via_lattice = FgAbelianGroup::diagonal(free_left, torsion);

    report.pi2_agree = is_isomorphic(report.pi2_via_mu, report.pi2_via_lattice);
    report.symmetry_order = find_symmetries(sf).size();
    return report;
}

}  // namespace stackyaut
