#include <doctest.h>

#include <map>
#include <random>

#include "stackyaut/abelian.hpp"
#include "stackyaut/finite_group.hpp"

using namespace stackyaut;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

// random unimodular matrix as a product of elementary shears and swaps
IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> shear(-3, 3);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    IntMatrix m = IntMatrix::identity(n);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        Int c = shear(rng);
        for (std::size_t k = 0; k < n; ++k) m.at(i, k) += c * m.at(j, k);
    }
    return m;
}

// Exhaustive oracle: enumerate a finite presented group element-by-element
// and return its multiplication table. Elements are kept as raw generator
// coordinates; normal_form serves only as the deduplication key.
FiniteGroup enumerate_presented_group(const FgAbelianGroup& g) {
    REQUIRE(g.is_finite());
    std::map<IntVector, Elt> index;
    std::vector<IntVector> elements;
    auto intern = [&](const IntVector& coords) {
        auto [it, fresh] = index.try_emplace(g.normal_form(coords),
                                             static_cast<Elt>(elements.size()));
        if (fresh) elements.push_back(coords);
        return it->second;
    };
    intern(IntVector(g.generators(), 0));
    for (std::size_t head = 0; head < elements.size(); ++head) {
        IntVector base = elements[head];
        for (std::size_t k = 0; k < g.generators(); ++k) {
            IntVector next = base;
            next[k] += 1;
            intern(next);
            REQUIRE(elements.size() <= 255);
        }
    }
    std::vector<std::vector<Elt>> table(elements.size(), std::vector<Elt>(elements.size()));
    for (std::size_t a = 0; a < elements.size(); ++a)
        for (std::size_t b = 0; b < elements.size(); ++b) {
            IntVector sum = elements[a];
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += elements[b][k];
            table[a][b] = intern(sum);
        }
    return FiniteGroup(std::move(table));
}

}  // namespace

TEST_CASE("invariants of standard presentations") {
    CHECK(FgAbelianGroup::free(2).free_rank() == 2);
    CHECK(FgAbelianGroup::free(2).torsion_coefficients().empty());
    CHECK(FgAbelianGroup::trivial().is_trivial());

    FgAbelianGroup g = FgAbelianGroup::diagonal(1, IntVector{2, 4});
    CHECK(g.free_rank() == 1);
    CHECK(g.torsion_coefficients() == IntVector{2, 4});
    CHECK(!g.order().has_value());

    FgAbelianGroup c6 = FgAbelianGroup::cyclic(6);
    CHECK(c6.free_rank() == 0);
    CHECK(c6.torsion_coefficients() == IntVector{6});
    CHECK(*c6.order() == 6);

    // Z/2 x Z/3 = Z/6 as invariants
    IntMatrix rel{{2, 0}, {0, 3}};
    FgAbelianGroup g23(2, rel);
    CHECK(g23.torsion_coefficients() == IntVector{6});
    CHECK(is_isomorphic(g23, c6));
}

TEST_CASE("invariants survive change of presentation") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t k = dim(rng), r = dim(rng);
        IntMatrix rel = random_matrix(rng, k, r, 6);
        FgAbelianGroup a(k, rel);
        // mix generators and relations unimodularly: same group
        FgAbelianGroup b(k, random_unimodular(rng, k) * rel * random_unimodular(rng, r));
        CHECK(a.free_rank() == b.free_rank());
        CHECK(a.torsion_coefficients() == b.torsion_coefficients());
        CHECK(is_isomorphic(a, b));
    }
}

TEST_CASE("normal forms separate elements exactly modulo relations") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t k = dim(rng);
        IntMatrix rel = random_matrix(rng, k, dim(rng), 6);
        FgAbelianGroup g(k, rel);
        IntVector x(k);
        for (auto& e : x) e = small(rng);
        // shifting by a relation lattice vector fixes the normal form
        IntVector shift = x;
        for (std::size_t j = 0; j < rel.cols(); ++j) {
            Int c = small(rng);
            for (std::size_t i = 0; i < k; ++i) shift[i] += c * rel.at(i, j);
        }
        CHECK(g.normal_form(x) == g.normal_form(shift));
        CHECK(GroupElement(g, x) == GroupElement(g, shift));
    }

    FgAbelianGroup g = FgAbelianGroup::diagonal(0, IntVector{2, 4});
    std::map<IntVector, int> seen;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 4; ++b) seen[g.normal_form(IntVector{a, b})] += 1;
    CHECK(seen.size() == 8);  // all distinct
}

TEST_CASE("finite quotients match exhaustive group enumeration") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    int done = 0;
    while (done < 60) {
        std::size_t k = dim(rng);
        IntMatrix rel = random_matrix(rng, k, k + 1, 4);
        FgAbelianGroup g(k, rel);
        auto order = g.order();
        if (!order || *order > 64) continue;
        ++done;
        FiniteGroup fg = enumerate_presented_group(g);
        CHECK(Int(fg.order()) == *order);
        CHECK(fg.abelian_invariants() == g.torsion_coefficients());
    }
}

TEST_CASE("canonical presentation round trip") {
    std::mt19937 rng(88);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t k = 1 + trial % 4;
        FgAbelianGroup g(k, random_matrix(rng, k, 3, 6));
        FgAbelianGroup canon = g.canonical_group();
        CHECK(canon.free_rank() == g.free_rank());
        CHECK(canon.torsion_coefficients() == g.torsion_coefficients());
        IntMatrix to = g.to_canonical_matrix();
        IntMatrix from = g.from_canonical_matrix();
        // round trip is the identity of g (as a map, i.e. modulo relations)
        GroupHom round(g, g, from * to);
        CHECK(round.same_map_as(GroupHom::identity(g)));
    }
}

TEST_CASE("free projection kills torsion") {
    // Z + Z/2 presented with a twist
    IntMatrix rel{{2}, {2}};
    FgAbelianGroup g(2, rel);
    CHECK(g.free_rank() == 1);
    CHECK(g.torsion_coefficients() == IntVector{2});
    IntMatrix p = g.free_projection_matrix();
    CHECK(p.rows() == 1);
    // torsion elements project to zero: 2x in the free quotient is the
    // projection of a relation shift, so p * rel = 0
    CHECK((p * rel).is_zero());
}

TEST_CASE("homomorphism well-definedness is enforced") {
    FgAbelianGroup z2 = FgAbelianGroup::cyclic(2);
    FgAbelianGroup z3 = FgAbelianGroup::cyclic(3);
    FgAbelianGroup z = FgAbelianGroup::free(1);
    CHECK_NOTHROW(GroupHom(z2, z2, IntMatrix{{1}}));
    CHECK_NOTHROW(GroupHom(z2, z3, IntMatrix{{0}}));
    // 1 -> 1 is not a hom Z/2 -> Z/3, nor Z/2 -> Z
    CHECK_THROWS_AS(GroupHom(z2, z3, IntMatrix{{1}}), std::invalid_argument);
    CHECK_THROWS_AS(GroupHom(z2, z, IntMatrix{{1}}), std::invalid_argument);
}

TEST_CASE("kernel cokernel and homology of simple maps") {
    FgAbelianGroup z = FgAbelianGroup::free(1);
    GroupHom times2(z, z, IntMatrix{{2}});

    FgAbelianGroup coker = cokernel(times2);
    CHECK(coker.torsion_coefficients() == IntVector{2});
    CHECK(coker.free_rank() == 0);

    KernelResult ker = kernel(times2);
    CHECK(ker.group.is_trivial());

    // Z --2--> Z --proj--> Z/2 is exact in the middle
    FgAbelianGroup z2 = FgAbelianGroup::cyclic(2);
    GroupHom proj(z, z2, IntMatrix{{1}});
    CHECK(homology_at(times2, proj).is_trivial());

    // Z --4--> Z --proj--> Z/2 has homology Z/2 in the middle
    GroupHom times4(z, z, IntMatrix{{4}});
    FgAbelianGroup h = homology_at(times4, proj);
    CHECK(h.torsion_coefficients() == IntVector{2});

    // non-complex pairs are rejected
    GroupHom id_z = GroupHom::identity(z);
    CHECK_THROWS_AS(homology_at(id_z, id_z), std::invalid_argument);
}

TEST_CASE("kernel of a torsion projection") {
    // Z -> Z/4, 1 -> 2: kernel is 2Z = Z
    FgAbelianGroup z = FgAbelianGroup::free(1);
    FgAbelianGroup z4 = FgAbelianGroup::cyclic(4);
    GroupHom f(z, z4, IntMatrix{{2}});
    KernelResult ker = kernel(f);
    CHECK(ker.group.free_rank() == 1);
    CHECK(ker.group.torsion_coefficients().empty());
    // inclusion composed with f is zero
    CHECK(compose(f, ker.inclusion).is_zero_hom());
}

TEST_CASE("dual of a finite group has the same invariants") {
    FgAbelianGroup g = FgAbelianGroup::diagonal(0, IntVector{2, 6});
    FgAbelianGroup d = dual_finite(g);
    CHECK(d.torsion_coefficients() == IntVector{2, 6});
    CHECK_THROWS_AS(dual_finite(FgAbelianGroup::free(1)), std::invalid_argument);
}
