#include "stackyaut/finite_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace stackyaut {

FiniteGroup::FiniteGroup(std::vector<std::vector<Elt>> table) : table_(std::move(table)) {
    order_ = table_.size();
    if (order_ == 0 || order_ > 255)
        throw std::invalid_argument("group order must be between 1 and 255");
    for (const auto& row : table_) {
        if (row.size() != order_)
            throw std::invalid_argument("multiplication table is not square");
        for (Elt e : row)
            if (e >= order_) throw std::invalid_argument("table entry out of range");
    }

    // identity
    bool found = false;
    for (Elt e = 0; e < order_; ++e) {
        bool works = true;
        for (Elt a = 0; a < order_; ++a)
            if (table_[e][a] != a || table_[a][e] != a) { works = false; break; }
        if (works) { identity_ = e; found = true; break; }
    }
    if (!found) throw std::invalid_argument("table has no identity element");

    // inverses
    inverse_.assign(order_, 0);
    for (Elt a = 0; a < order_; ++a) {
        bool has_inv = false;
        for (Elt b = 0; b < order_; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                has_inv = true;
                break;
            }
        if (!has_inv) throw std::invalid_argument("table element without inverse");
    }

    // associativity
    for (Elt a = 0; a < order_; ++a)
        for (Elt b = 0; b < order_; ++b)
            for (Elt c = 0; c < order_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("table is not associative");
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0 || n > 255) throw std::invalid_argument("cyclic order out of range");
    std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Elt>((a + b) % n);
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    std::size_t n = a.order() * b.order();
    if (n > 255) throw std::invalid_argument("product order out of range");
    auto enc = [&](Elt x, Elt y) { return static_cast<Elt>(x * b.order() + y); };
    std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
    for (Elt x1 = 0; x1 < a.order(); ++x1)
        for (Elt y1 = 0; y1 < b.order(); ++y1)
            for (Elt x2 = 0; x2 < a.order(); ++x2)
                for (Elt y2 = 0; y2 < b.order(); ++y2)
                    t[enc(x1, y1)][enc(x2, y2)] = enc(a.op(x1, x2), b.op(y1, y2));
    return FiniteGroup(std::move(t));
}

bool FiniteGroup::is_abelian() const {
    for (Elt a = 0; a < order_; ++a)
        for (Elt b = static_cast<Elt>(a + 1); b < order_; ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

std::size_t FiniteGroup::element_order(Elt a) const {
    std::size_t n = 1;
    Elt x = a;
    while (x != identity_) {
        x = op(x, a);
        ++n;
    }
    return n;
}

std::vector<Elt> FiniteGroup::generated_subgroup(const std::vector<Elt>& gens) const {
    std::set<Elt> closure{identity_};
    std::vector<Elt> frontier{identity_};
    while (!frontier.empty()) {
        std::vector<Elt> next;
        for (Elt x : frontier)
            for (Elt g : gens) {
                for (Elt y : {op(x, g), op(x, inverse_[g])})
                    if (closure.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {closure.begin(), closure.end()};
}

bool FiniteGroup::is_normal(const std::vector<Elt>& subgroup) const {
    std::set<Elt> s(subgroup.begin(), subgroup.end());
    for (Elt g = 0; g < order_; ++g)
        for (Elt h : subgroup)
            if (!s.count(op(op(g, h), inverse_[g]))) return false;
    return true;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<Elt>& elements) const {
    std::map<Elt, Elt> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
        index[elements[i]] = static_cast<Elt>(i);
    std::vector<std::vector<Elt>> t(elements.size(), std::vector<Elt>(elements.size()));
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j) {
            auto it = index.find(op(elements[i], elements[j]));
            if (it == index.end())
                throw std::invalid_argument("element set is not closed under the product");
            t[i][j] = it->second;
        }
    return FiniteGroup(std::move(t));
}

GroupQuotient FiniteGroup::quotient(const std::vector<Elt>& normal_subgroup) const {
    if (!is_normal(normal_subgroup))
        throw std::invalid_argument("quotient requires a normal subgroup");
    std::vector<Elt> proj(order_, 255);
    std::vector<Elt> reps;
    for (Elt g = 0; g < order_; ++g) {
        if (proj[g] != 255) continue;
        Elt coset = static_cast<Elt>(reps.size());
        reps.push_back(g);
        for (Elt h : normal_subgroup) proj[op(g, h)] = coset;
    }
    std::vector<std::vector<Elt>> t(reps.size(), std::vector<Elt>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
            t[i][j] = proj[op(reps[i], reps[j])];
    return {FiniteGroup(std::move(t)), std::move(proj)};
}

IntVector FiniteGroup::abelian_invariants() const {
    if (!is_abelian())
        throw std::invalid_argument("abelian_invariants requires an abelian group");
    // Peel off a cyclic factor of maximal order; it is a direct summand, so
    // recursing on the quotient yields the invariant factors.
    std::vector<IntVector::value_type> factors;
    FiniteGroup g = *this;
    while (g.order() > 1) {
        Elt best = 0;
        std::size_t best_order = 1;
        for (Elt a = 0; a < g.order(); ++a) {
            std::size_t o = g.element_order(a);
            if (o > best_order) { best_order = o; best = a; }
        }
        factors.push_back(Int(best_order));
        g = g.quotient(g.generated_subgroup({best})).group;
    }
    std::reverse(factors.begin(), factors.end());  // ascending divisibility
    return IntVector(factors.begin(), factors.end());
}

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     const std::vector<Elt>& phi) {
    if (phi.size() != source.order()) return false;
    for (Elt x : phi)
        if (x >= target.order()) return false;
    for (Elt a = 0; a < source.order(); ++a)
        for (Elt b = 0; b < source.order(); ++b)
            if (phi[source.op(a, b)] != target.op(phi[a], phi[b])) return false;
    return true;
}

}  // namespace stackyaut
