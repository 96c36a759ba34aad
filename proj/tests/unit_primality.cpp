#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "qfg/primality.hpp"

using namespace qfg;

TEST_CASE("prime snakes") {
    CHECK(is_prime_snake(fixtures::poly("A6; 4:0 2:4 3:9:3")));
    CHECK_FALSE(is_prime_snake(fixtures::poly(fixtures::kDiamond)));
    CHECK(is_prime_snake(fixtures::poly("A3; 2:5:4")));
    CHECK_FALSE(is_prime_snake(fixtures::poly("A3;")));
}

TEST_CASE("dissociate factorization") {
    QFGraph two = fixtures::graph_of("A6; 1:0 6:1");
    CHECK(dissociate_factorization(two).size() == 2);
    CHECK(dissociate_factorization(fixtures::graph_of(fixtures::kSnakeTree)).size() == 1);
    QFGraph empty = build_graph(PseudoFactorization{make_type_a(3), {}});
    CHECK(dissociate_factorization(empty).empty());
}

TEST_CASE("three-vertex criterion splits the sink line") {
    QFGraph g = fixtures::graph_of("A3; 2:4 3:3 2:0");
    PrimalityVerdict v = three_vertex_primality(g);
    REQUIRE(v.kind == PrimalityVerdict::Kind::Factors);
    CHECK(v.factor.factors == fixtures::poly("A3; 2:4").factors);
    CHECK(v.cofactor.factors == fixtures::poly("A3; 3:3 2:0").factors);
    CHECK(multiply(v.factor, v.cofactor).factors == fixtures::poly("A3; 2:4 3:3 2:0").factors);
}

TEST_CASE("three-vertex criterion splits the string line") {
    QFGraph g = fixtures::graph_of(fixtures::kThreeLineSplit);
    PrimalityVerdict v = three_vertex_primality(g);
    REQUIRE(v.kind == PrimalityVerdict::Kind::Factors);
    CHECK(v.factor.factors == fixtures::poly("A4; 3:6:3").factors);
    CHECK(v.cofactor.factors == fixtures::poly("A4; 2:8:2 1:2:3").factors);
}

TEST_CASE("three-vertex criterion can conclude primality") {
    QFGraph g = fixtures::graph_of("A3; 1:0 2:3 3:0");
    PrimalityVerdict v = three_vertex_primality(g);
    CHECK(v.kind == PrimalityVerdict::Kind::Prime);
}

TEST_CASE("three-vertex criterion validates its input") {
    CHECK_THROWS_AS(three_vertex_primality(fixtures::graph_of(fixtures::kDiamond)),
                    std::invalid_argument);
    // totally ordered line: middle vertex is neither source nor sink
    CHECK_THROWS_AS(three_vertex_primality(fixtures::graph_of("A3; 1:0 2:3 1:6")),
                    std::invalid_argument);
    // not an actual q-factorization
    QFGraph pseudo = build_graph(PseudoFactorization{make_type_a(3), {{1, 0, 1}, {1, 2, 1}}});
    CHECK_THROWS_AS(three_vertex_primality(pseudo), std::invalid_argument);
}

TEST_CASE("three-vertex criterion commutes with arrow duality") {
    for (const char* spec : {"A3; 2:4 3:3 2:0", "A4; 2:8:2 1:2:3 3:6:3", "A3; 1:0 2:3 3:0"}) {
        QFGraph g = fixtures::graph_of(spec);
        QFGraph d = arrow_dual(g);
        PrimalityVerdict v = three_vertex_primality(g);
        PrimalityVerdict w = three_vertex_primality(d);
        CHECK(v.kind == w.kind);
        if (v.kind == PrimalityVerdict::Kind::Factors) {
            DrinfeldPoly dual_factor = dualize(v.factor, DualityKind::KappaStar);
            CHECK(dual_factor.factors == w.factor.factors);
        }
    }
}

TEST_CASE("random alternating lines: duality agreement and factor product") {
    std::mt19937 rng(1123);
    CartanContext ctx = make_type_a(5);
    std::uniform_int_distribution<int> node(1, 5), center(-6, 6), width(1, 3);
    int seen = 0;
    for (int t = 0; t < 4000 && seen < 120; ++t) {
        PseudoFactorization f{ctx, {{node(rng), center(rng), width(rng)},
                                    {node(rng), center(rng), width(rng)},
                                    {node(rng), center(rng), width(rng)}}};
        if (!is_q_factorization(f)) continue;
        QFGraph g = build_graph(f);
        PrimalityVerdict v;
        try {
            v = three_vertex_primality(g);
        } catch (const std::invalid_argument&) {
            continue;  // not an alternating line
        }
        ++seen;
        PrimalityVerdict w = three_vertex_primality(arrow_dual(g));
        CHECK(v.kind == w.kind);
        if (v.kind == PrimalityVerdict::Kind::Factors) {
            CHECK(multiply(v.factor, v.cofactor).factors == poly_of_graph(g).factors);
            CHECK(dualize(v.factor, DualityKind::KappaStar).factors == w.factor.factors);
        }
    }
    CHECK(seen >= 50);  // the sample actually exercised the criterion
}

TEST_CASE("totally ordered graphs are prime") {
    CHECK(totally_ordered_prime(fixtures::graph_of(fixtures::kSnakeTree)).kind ==
          PrimalityVerdict::Kind::Prime);
    CHECK(totally_ordered_prime(fixtures::graph_of(fixtures::kThreeStrings)).kind ==
          PrimalityVerdict::Kind::Prime);
    CHECK(totally_ordered_prime(fixtures::graph_of(fixtures::kDiamond)).kind ==
          PrimalityVerdict::Kind::Unknown);
    CHECK(totally_ordered_prime(fixtures::graph_of("A3; 2:5:4")).kind ==
          PrimalityVerdict::Kind::Prime);
}

TEST_CASE("combined primality decision") {
    CHECK(decide_primality(fixtures::graph_of("A6; 1:0 6:1")).kind ==
          PrimalityVerdict::Kind::Factors);
    CHECK(decide_primality(fixtures::graph_of(fixtures::kSnakeTree)).kind ==
          PrimalityVerdict::Kind::Prime);
    CHECK(decide_primality(fixtures::graph_of("A3; 2:4 3:3 2:0")).kind ==
          PrimalityVerdict::Kind::Factors);
    CHECK(decide_primality(fixtures::graph_of(fixtures::kDiamond)).kind ==
          PrimalityVerdict::Kind::Unknown);
}
