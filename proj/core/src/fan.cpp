#include "stackyaut/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace stackyaut {

Int primitivize(IntVector& v) {
    Int g = gcd_vec(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return g;
}

namespace {

std::string ray_set_str(const RaySet& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto i : s) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << "}";
    return os.str();
}

// Extreme rays of {y >= 0 : m*y = 0}, by minimal-support enumeration.
// The cone is pointed (it sits in the nonnegative orthant), so every point
// is a nonnegative combination of these.
std::vector<IntVector> extreme_rays_of_homogeneous_system(const IntMatrix& m) {
    std::vector<IntVector> rays;
    const std::size_t cols = m.cols();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cols); ++mask) {
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < cols; ++j)
            if (mask & (std::uint64_t{1} << j)) support.push_back(j);
        IntMatrix k = kernel_basis(m.columns(support));
        if (k.cols() != 1) continue;
        IntVector gen = k.column_vec(0);
        int sign = 0;
        bool candidate = true;
        for (const auto& x : gen) {
            if (x == 0) { candidate = false; break; }
            int s = x > 0 ? 1 : -1;
            if (sign == 0) sign = s;
            else if (s != sign) { candidate = false; break; }
        }
        if (!candidate) continue;
        IntVector full(cols);
        for (std::size_t t = 0; t < support.size(); ++t)
            full[support[t]] = sign > 0 ? gen[t] : -gen[t];
        rays.push_back(std::move(full));
    }
    return rays;
}

// cone(sigma) and cone(tau) intersect exactly in cone(sigma & tau).
bool cones_meet_in_common_face(const Fan& f, const RaySet& sigma, const RaySet& tau) {
    std::vector<std::size_t> s(sigma.begin(), sigma.end());
    std::vector<std::size_t> t(tau.begin(), tau.end());
    RaySet common;
    std::set_intersection(sigma.begin(), sigma.end(), tau.begin(), tau.end(),
                          std::inserter(common, common.end()));

    IntMatrix m(f.dim, s.size() + t.size());
    for (std::size_t j = 0; j < s.size(); ++j)
        for (std::size_t i = 0; i < f.dim; ++i) m.at(i, j) = f.rays[s[j]][i];
    for (std::size_t j = 0; j < t.size(); ++j)
        for (std::size_t i = 0; i < f.dim; ++i) m.at(i, s.size() + j) = -f.rays[t[j]][i];

    for (const auto& y : extreme_rays_of_homogeneous_system(m)) {
        for (std::size_t j = 0; j < s.size(); ++j)
            if (y[j] != 0 && !common.count(s[j])) return false;
        for (std::size_t j = 0; j < t.size(); ++j)
            if (y[s.size() + j] != 0 && !common.count(t[j])) return false;
    }
    return true;
}

IntMatrix ray_matrix(const Fan& f) {
    IntMatrix m(f.dim, f.rays.size());
    for (std::size_t j = 0; j < f.rays.size(); ++j)
        for (std::size_t i = 0; i < f.dim; ++i) m.at(i, j) = f.rays[j][i];
    return m;
}

bool subset_of_some_cone(const Fan& f, const RaySet& s) {
    for (const auto& c : f.max_cones)
        if (std::includes(c.begin(), c.end(), s.begin(), s.end())) return true;
    return false;
}

}  // namespace

ValidationReport validate_fan(const Fan& f) {
    ValidationReport report;
    const std::size_t n = f.rays.size();

    for (std::size_t i = 0; i < n; ++i) {
        const IntVector& r = f.rays[i];
        if (r.size() != f.dim) {
            report.violations.push_back("ray " + std::to_string(i) + " has wrong dimension");
            return report;  // shape errors make later checks meaningless
        }
        if (is_zero_vec(r))
            report.violations.push_back("ray " + std::to_string(i) + " is zero");
        else if (gcd_vec(r) != 1)
            report.violations.push_back("ray " + std::to_string(i) + " is not primitive");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (f.rays[i] == f.rays[j])
                report.violations.push_back("rays " + std::to_string(i) + " and " +
                                            std::to_string(j) + " coincide");

    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        const RaySet& cone = f.max_cones[c];
        if (cone.empty()) {
            report.violations.push_back("cone " + std::to_string(c) + " is empty");
            continue;
        }
        bool in_range = true;
        for (auto i : cone)
            if (i >= n) {
                report.violations.push_back("cone " + std::to_string(c) +
                                            " references missing ray " + std::to_string(i));
                in_range = false;
            }
        if (!in_range) continue;
        std::vector<std::size_t> idx(cone.begin(), cone.end());
        IntMatrix m(f.dim, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < f.dim; ++i) m.at(i, j) = f.rays[idx[j]][i];
        if (m.rank() != idx.size())
            report.violations.push_back("cone " + ray_set_str(cone) +
                                        " has linearly dependent rays");
    }
    if (!report.ok()) return report;

    for (std::size_t a = 0; a < f.max_cones.size(); ++a)
        for (std::size_t b = a + 1; b < f.max_cones.size(); ++b)
            if (!cones_meet_in_common_face(f, f.max_cones[a], f.max_cones[b]))
                report.violations.push_back("cones " + ray_set_str(f.max_cones[a]) + " and " +
                                            ray_set_str(f.max_cones[b]) +
                                            " do not meet in a common face");
    return report;
}

PrimitiveCollectionSet primitive_collections(const Fan& f) {
    if (!validate_fan(f).ok())
        throw std::invalid_argument("primitive_collections requires a valid fan");
    const std::size_t n = f.rays.size();
    if (n >= 64)
        throw std::invalid_argument("too many rays for subset enumeration");

    auto is_face = [&](std::uint64_t mask) {
        RaySet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) s.insert(i);
        return subset_of_some_cone(f, s);
    };

    PrimitiveCollectionSet out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (is_face(mask)) continue;
        // minimal: every proper subset obtained by dropping one element is a face
        bool minimal = true;
        for (std::size_t i = 0; i < n && minimal; ++i)
            if (mask & (std::uint64_t{1} << i))
                if (!is_face(mask & ~(std::uint64_t{1} << i))) minimal = false;
        if (!minimal) continue;
        RaySet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) s.insert(i);
        out.collections.push_back(std::move(s));
    }
    std::sort(out.collections.begin(), out.collections.end());
    return out;
}

bool is_complete(const Fan& f) {
    if (!validate_fan(f).ok())
        throw std::invalid_argument("is_complete requires a valid fan");
    for (const auto& c : f.max_cones)
        if (c.size() != f.dim)
            throw std::invalid_argument("is_complete requires full-dimensional max cones");
    if (f.max_cones.empty()) return false;

    std::map<RaySet, std::vector<std::size_t>> facet_owners;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c)
        for (auto dropped : f.max_cones[c]) {
            RaySet facet = f.max_cones[c];
            facet.erase(dropped);
            facet_owners[facet].push_back(c);
        }
    for (const auto& [facet, owners] : facet_owners)
        if (owners.size() != 2) return false;

    // dual graph connectivity
    std::vector<std::vector<std::size_t>> adj(f.max_cones.size());
    for (const auto& [facet, owners] : facet_owners) {
        adj[owners[0]].push_back(owners[1]);
        adj[owners[1]].push_back(owners[0]);
    }
    std::vector<bool> seen(f.max_cones.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t c = stack.back();
        stack.pop_back();
        for (auto nb : adj[c])
            if (!seen[nb]) {
                seen[nb] = true;
                stack.push_back(nb);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<FanIsomorphism> find_fan_isomorphisms(const Fan& f, const Fan& g) {
    if (!validate_fan(f).ok() || !validate_fan(g).ok())
        throw std::invalid_argument("find_fan_isomorphisms requires valid fans");
    if (f.dim != g.dim || f.rays.size() != g.rays.size())
        throw std::invalid_argument("fans must share dimension and ray count");

    IntMatrix rf = ray_matrix(f);
    IntMatrix rg = ray_matrix(g);
    if (rf.rank() != f.dim || rg.rank() != g.dim)
        throw std::invalid_argument("isomorphism search requires rays spanning Q^d");

    const std::size_t n = f.rays.size();
    std::set<RaySet> g_cones(g.max_cones.begin(), g.max_cones.end());

    // d independent columns of rf, lowest indices first
    std::vector<std::size_t> basis;
    for (std::size_t j = 0; j < n && basis.size() < f.dim; ++j) {
        basis.push_back(j);
        if (rf.columns(basis).rank() != basis.size()) basis.pop_back();
    }
    IntMatrix rf_basis_t = rf.columns(basis).transpose();

    std::vector<FanIsomorphism> out;
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    do {
        std::set<RaySet> mapped;
        for (const auto& c : f.max_cones) {
            RaySet img;
            for (auto i : c) img.insert(sigma[i]);
            mapped.insert(std::move(img));
        }
        if (mapped != g_cones) continue;

        IntMatrix target(f.dim, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < f.dim; ++i) target.at(i, j) = g.rays[sigma[j]][i];

        // tau * rf = target, solved on a column basis then verified everywhere
        auto tau_t = solve_integer_matrix(rf_basis_t, target.columns(basis).transpose());
        if (!tau_t) continue;
        IntMatrix tau = tau_t->transpose();
        if (tau * rf != target) continue;
        Int det = tau.det();
        if (det != 1 && det != -1) continue;
        out.push_back({sigma, std::move(tau)});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

}  // namespace stackyaut
