#include <doctest.h>

#include <algorithm>

#include "stackyaut/fan.hpp"

using namespace stackyaut;

namespace {

Fan p2_fan() {
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    return f;
}

Fan p1xp1_fan() {
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    f.max_cones = {{0, 2}, {2, 1}, {1, 3}, {3, 0}};
    return f;
}

// the fan of P(2,3,4): the printed generators are (-3,-2), (2,0), (0,1);
// the middle one has multiplicity 2, so the actual ray is (1,0)
Fan published_234_fan() {
    Fan f;
    f.dim = 2;
    f.rays = {{-3, -2}, {1, 0}, {0, 1}};
    f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    return f;
}

}  // namespace

TEST_CASE("valid fans validate") {
    CHECK(validate_fan(p2_fan()).ok());
    CHECK(validate_fan(p1xp1_fan()).ok());
    CHECK(validate_fan(published_234_fan()).ok());

    // a single cone, not complete but a perfectly good fan
    Fan half;
    half.dim = 2;
    half.rays = {{1, 0}, {0, 1}};
    half.max_cones = {{0, 1}};
    CHECK(validate_fan(half).ok());
}

TEST_CASE("invalid fans are rejected with reasons") {
    Fan f = p2_fan();
    f.rays[1] = {0, 0};
    CHECK(!validate_fan(f).ok());

    f = p2_fan();
    f.rays[1] = {0, 2};  // not primitive
    CHECK(!validate_fan(f).ok());

    f = p2_fan();
    f.rays.push_back({1, 0});  // duplicate ray
    f.max_cones = {{0, 1}, {1, 3}};
    CHECK(!validate_fan(f).ok());

    // overlapping cones that do not meet in a common face
    Fan overlap;
    overlap.dim = 2;
    overlap.rays = {{1, 0}, {0, 1}, {1, 1}};
    overlap.max_cones = {{0, 1}, {0, 2}};  // cone(e1,e1+e2) sits inside cone(e1,e2)
    CHECK(!validate_fan(overlap).ok());

    // linearly dependent rays in one cone
    Fan dep;
    dep.dim = 2;
    dep.rays = {{1, 0}, {-1, 0}};
    dep.max_cones = {{0, 1}};
    CHECK(!validate_fan(dep).ok());

    // cone index out of range
    f = p2_fan();
    f.max_cones.push_back({0, 7});
    CHECK(!validate_fan(f).ok());
}

TEST_CASE("adjacent cones sharing a facet are fine") {
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {1, 1}, {0, 1}};
    f.max_cones = {{0, 1}, {1, 2}};
    CHECK(validate_fan(f).ok());

    // 3d pair glued along a 2d face
    Fan g;
    g.dim = 3;
    g.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}};
    g.max_cones = {{0, 1, 2}, {0, 1, 3}};
    CHECK(validate_fan(g).ok());
}

TEST_CASE("primitive collections") {
    auto pc = primitive_collections(p2_fan());
    REQUIRE(pc.collections.size() == 1);
    CHECK(pc.collections[0] == RaySet{0, 1, 2});

    auto pc2 = primitive_collections(p1xp1_fan());
    REQUIRE(pc2.collections.size() == 2);
    std::vector<RaySet> expected = {{0, 1}, {2, 3}};
    CHECK(std::is_permutation(pc2.collections.begin(), pc2.collections.end(),
                              expected.begin(), expected.end()));

    // a non-complete fan: the missing pair is a primitive collection
    Fan half;
    half.dim = 2;
    half.rays = {{1, 0}, {0, 1}, {-1, -1}};
    half.max_cones = {{0, 1}, {1, 2}};
    auto pc3 = primitive_collections(half);
    REQUIRE(pc3.collections.size() == 1);
    CHECK(pc3.collections[0] == RaySet{0, 2});
}

TEST_CASE("completeness") {
    CHECK(is_complete(p2_fan()));
    CHECK(is_complete(p1xp1_fan()));
    CHECK(is_complete(published_234_fan()));

    Fan missing = p2_fan();
    missing.max_cones.pop_back();
    CHECK(!is_complete(missing));

    // half plane fan: every facet-sharing condition fails at the boundary
    Fan half;
    half.dim = 2;
    half.rays = {{1, 0}, {0, 1}, {-1, 0}};
    half.max_cones = {{0, 1}, {1, 2}};
    CHECK(!is_complete(half));

    // completeness requires full-dimensional cones
    Fan lower;
    lower.dim = 2;
    lower.rays = {{1, 0}, {-1, 1}};
    lower.max_cones = {{0}, {1}};
    CHECK_THROWS_AS(is_complete(lower), std::invalid_argument);
}

TEST_CASE("fan self-isomorphism counts") {
    // P^2: every permutation of the three rays is realized by a unimodular map
    CHECK(find_fan_isomorphisms(p2_fan(), p2_fan()).size() == 6);
    // P^1 x P^1: dihedral group of the square
    CHECK(find_fan_isomorphisms(p1xp1_fan(), p1xp1_fan()).size() == 8);
    // the weighted fan is rigid
    CHECK(find_fan_isomorphisms(published_234_fan(), published_234_fan()).size() == 1);
}

TEST_CASE("isomorphisms verify the defining equations") {
    Fan f = p2_fan();
    // image of the P^2 fan under a unimodular shear
    IntMatrix t{{1, 1}, {0, 1}};
    Fan g;
    g.dim = 2;
    for (const auto& r : f.rays) g.rays.push_back(t * r);
    g.max_cones = f.max_cones;
    REQUIRE(validate_fan(g).ok());

    auto isos = find_fan_isomorphisms(f, g);
    CHECK(isos.size() == 6);
    for (const auto& iso : isos) {
        CHECK(abs(iso.tau.det()) == 1);
        for (std::size_t i = 0; i < f.rays.size(); ++i)
            CHECK(iso.tau * f.rays[i] == g.rays[iso.sigma[i]]);
    }

    // same combinatorics, but no lattice isomorphism exists
    CHECK(find_fan_isomorphisms(p2_fan(), published_234_fan()).empty());
    // mismatched ray counts are a usage error
    CHECK_THROWS_AS(find_fan_isomorphisms(p2_fan(), p1xp1_fan()), std::invalid_argument);
}

TEST_CASE("primitivize") {
    IntVector v{4, -6, 2};
    CHECK(primitivize(v) == 2);
    CHECK(v == IntVector{2, -3, 1});
    IntVector w{0, -5};
    CHECK(primitivize(w) == 5);
    CHECK(w == IntVector{0, -1});
}
