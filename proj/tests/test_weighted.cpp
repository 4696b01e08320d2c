#include <doctest.h>

#include <random>

#include "stackyaut/weighted.hpp"

using namespace stackyaut;

TEST_CASE("weight reduction") {
    ReducedWeights r = reduce(IntVector{4, 6, 8});
    CHECK(r.d == 2);
    CHECK(r.q_red == IntVector{2, 3, 4});

    CHECK(reduce(IntVector{1, 1}).d == 1);
    CHECK(reduce(IntVector{5, 5}).d == 5);
    CHECK(reduce(IntVector{5, 5}).q_red == IntVector{1, 1});

    CHECK_THROWS_AS(reduce(IntVector{7}), std::invalid_argument);
    CHECK_THROWS_AS(reduce(IntVector{2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(reduce(IntVector{2, -3}), std::invalid_argument);
}

TEST_CASE("quotient vectors satisfy the weight relation") {
    for (const auto& q : {IntVector{1, 1, 1}, IntVector{2, 3, 4}, IntVector{1, 2, 3},
                          IntVector{1, 1}, IntVector{3, 5, 7, 11}}) {
        ReducedWeights r{1, q};
        IntMatrix v = weight_quotient_vectors(r);
        CHECK(v.rows() == q.size() - 1);
        CHECK(v.cols() == q.size());
        // sum q_i v_i = 0
        IntVector total(v.rows(), 0);
        for (std::size_t j = 0; j < v.cols(); ++j)
            for (std::size_t i = 0; i < v.rows(); ++i) total[i] += q[j] * v.at(i, j);
        CHECK(is_zero_vec(total));
        // the v_i span the quotient over Q
        CHECK(v.rank() == v.rows());
    }
    CHECK_THROWS_AS(weight_quotient_vectors(ReducedWeights{2, IntVector{2, 4}}),
                    std::invalid_argument);
}

TEST_CASE("fan of P(2,3,4) matches the published rays up to GL(2,Z)") {
    Fan built = build_fan(reduce(IntVector{2, 3, 4}));
    REQUIRE(validate_fan(built).ok());
    CHECK(is_complete(built));

    // the printed generators are (-3,-2), (2,0), (0,1); the fan rays are
    // their primitivizations
    Fan published;
    published.dim = 2;
    published.rays = {{-3, -2}, {1, 0}, {0, 1}};
    published.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    REQUIRE(validate_fan(published).ok());

    CHECK(!find_fan_isomorphisms(built, published).empty());

    // 2 v0 + 3 v1 + 4 v2 = 0 holds exactly for the quotient vectors, and
    // each fan ray is the primitivization of its quotient vector
    IntMatrix v = weight_quotient_vectors(reduce(IntVector{2, 3, 4}));
    IntVector rel(2, 0);
    IntVector q{2, 3, 4};
    for (std::size_t j = 0; j < 3; ++j) {
        IntVector col = v.column_vec(j);
        for (std::size_t i = 0; i < 2; ++i) rel[i] += q[j] * col[i];
        primitivize(col);
        CHECK(col == built.rays[j]);
    }
    CHECK(is_zero_vec(rel));
}

TEST_CASE("stacky fan of a non-reduced weight system") {
    StackyFan sf = build_stacky_fan(IntVector{4, 6, 8});
    CHECK(validate_stacky_fan(sf).ok());
    CHECK(sf.n_group.free_rank() == 2);
    CHECK(sf.n_group.torsion_coefficients() == IntVector{2});

    StackyFan reduced = build_stacky_fan(IntVector{2, 3, 4});
    CHECK(validate_stacky_fan(reduced).ok());
    CHECK(reduced.n_group.free_rank() == 2);
    CHECK(reduced.n_group.torsion_coefficients().empty());
}

TEST_CASE("full pipeline: the running example") {
    WpsReport r = verify_weighted_stack(IntVector{4, 6, 8});
    CHECK(r.ok());
    CHECK(r.reduced.d == 2);
    CHECK(r.reduced.q_red == IntVector{2, 3, 4});
    CHECK(r.dg_is_z);
    REQUIRE(r.weights.has_value());
    IntVector w = *r.weights;
    std::sort(w.begin(), w.end());
    CHECK(w == IntVector{4, 6, 8});
    CHECK(*r.gale.mu.order() == 2);
    CHECK(r.fan_complete);
    CHECK(r.sequences.all_exact());
}

TEST_CASE("full pipeline across families") {
    std::vector<IntVector> cases = {
        {1, 1},      {1, 1, 1}, {5, 5},    {4, 6},       {2, 3, 4},
        {2, 4, 6},   {3, 3, 3}, {1, 2, 3}, {6, 10, 15},  {2, 2, 2, 2},
        {1, 2, 3, 4}, {3, 5, 7}, {12, 18}, {7, 7, 7, 7}, {9, 12, 21},
    };
    for (const auto& q : cases) {
        CAPTURE(q.size());
        WpsReport r = verify_weighted_stack(q);
        CHECK(r.ok());
        Int g = gcd_vec(q);
        if (g > 1)
            CHECK(*r.gale.mu.order() == g);
        else
            CHECK(r.gale.mu.is_trivial());
    }
}

TEST_CASE("full pipeline on random weights") {
    std::mt19937 rng(1789);
    std::uniform_int_distribution<int> wdist(1, 12);
    std::uniform_int_distribution<std::size_t> ndist(2, 4);
    for (int trial = 0; trial < 40; ++trial) {
        IntVector q(ndist(rng));
        for (auto& w : q) w = wdist(rng);
        CAPTURE(trial);
        WpsReport r = verify_weighted_stack(q);
        CHECK(r.ok());
        CHECK(*r.gale.mu.order() == gcd_vec(q));
    }
}

TEST_CASE("weighted pgl front door") {
    WeightedPglPresentation p = weighted_pgl(IntVector{4, 6});
    CHECK(p.normalizer_description == "C* x C*");
    CHECK(p.pi2.torsion_coefficients() == IntVector{2});
    CHECK_THROWS_AS(weighted_pgl(IntVector{3}), std::invalid_argument);
}
