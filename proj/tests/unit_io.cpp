#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "fixtures.hpp"
#include "qfg/reality.hpp"
#include "qfg/textio.hpp"

using namespace qfg;

TEST_CASE("parsing the grammar") {
    PseudoFactorization f = parse_poly_spec("A3; 2:0 1:3 3:3 2:6x2");
    CHECK(f.ctx.rank == 3);
    CHECK(f.factors == std::vector<KRFactor>{{1, 3, 1}, {2, 0, 1}, {2, 6, 1}, {2, 6, 1}, {3, 3, 1}});

    PseudoFactorization g = parse_poly_spec("A6; 4:0 2:4 3:9:3 2:14:3");
    CHECK(g.factors == std::vector<KRFactor>{{2, 4, 1}, {2, 14, 3}, {3, 9, 3}, {4, 0, 1}});

    PseudoFactorization empty = parse_poly_spec("A3;");
    CHECK(empty.factors.empty());
    CHECK(poly_of(empty).is_identity());

    PseudoFactorization neg = parse_poly_spec("A3; 2:-10x2 1:-7");
    CHECK(neg.factors == std::vector<KRFactor>{{1, -7, 1}, {2, -10, 1}, {2, -10, 1}});
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_poly_spec("B3; 1:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly_spec("A3 1:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly_spec("A3; 4:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly_spec("A3; 1:0:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly_spec("A3; 1:0x0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly_spec("A3; 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly_spec("A3; 1:0junk"), std::invalid_argument);
    try {
        parse_poly_spec("A3; 1:0 9:1");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("printing is canonical and round-trips") {
    PseudoFactorization f = parse_poly_spec("A3; 2:6 1:3 2:6 3:3 2:0");
    CHECK(print_poly_spec(f) == "A3; 1:3 2:0 2:6x2 3:3");
    CHECK(parse_poly_spec(print_poly_spec(f)).factors == f.factors);

    std::mt19937 rng(12);
    std::uniform_int_distribution<int> node(1, 4), center(-9, 9), width(1, 3), len(0, 6);
    for (int t = 0; t < 200; ++t) {
        PseudoFactorization r{make_type_a(4), {}};
        int n = len(rng);
        for (int k = 0; k < n; ++k) r.factors.push_back({node(rng), center(rng), width(rng)});
        std::sort(r.factors.begin(), r.factors.end());
        PseudoFactorization back = parse_poly_spec(print_poly_spec(r));
        CHECK(back.factors == r.factors);
        CHECK(back.ctx == r.ctx);
    }
}

TEST_CASE("per-component normalization") {
    PseudoFactorization f = parse_poly_spec("A6; 1:5 2:8 6:100");
    PseudoFactorization n = normalize_per_component(f);
    // the 1-2 component shifts to base 0, the lone string shifts independently
    CHECK(n.factors == std::vector<KRFactor>{{1, 0, 1}, {2, 3, 1}, {6, 0, 1}});
}

TEST_CASE("ledger round-trip") {
    AssumptionLedger ledger;
    ledger.facts.push_back({LedgerFact::Kind::KkopLe, fixtures::poly("A3; 1:3 2:6"),
                            fixtures::poly("A3; 2:0 2:6 3:3"), 1, "pair bound"});
    ledger.facts.push_back(
        {LedgerFact::Kind::Real, fixtures::poly(fixtures::kDiamond), std::nullopt, 0, ""});
    nlohmann::json j = ledger_to_json(ledger);
    AssumptionLedger back = ledger_from_json(j);
    REQUIRE(back.facts.size() == 2);
    CHECK(back.facts[0].kind == LedgerFact::Kind::KkopLe);
    CHECK(back.facts[0].k == 1);
    CHECK(back.facts[0].left.factors == ledger.facts[0].left.factors);
    CHECK(back.facts[0].right->factors == ledger.facts[0].right->factors);
    CHECK(back.facts[1].kind == LedgerFact::Kind::Real);

    CHECK_THROWS_AS(ledger_from_json(nlohmann::json::object()), std::invalid_argument);
    nlohmann::json missing = nlohmann::json::array();
    missing.push_back({{"kind", "hlw"}, {"left", "A3; 1:0"}});
    CHECK_THROWS_AS(ledger_from_json(missing), std::invalid_argument);
}

TEST_CASE("certificate JSON round-trip preserves replay") {
    AssumptionLedger ledger;
    ledger.facts.push_back({LedgerFact::Kind::KkopLe, fixtures::poly("A3; 1:3 2:6"),
                            fixtures::poly("A3; 2:0 2:6 3:3"), 1, "pair bound"});
    CertifyResult r = certify_real(fixtures::poly(fixtures::kDiamond), ledger);
    REQUIRE(r.certificate);
    nlohmann::json j = certificate_to_json(*r.certificate);
    QuochainCertificate back = certificate_from_json(j);
    std::string error;
    bool ok = validate_certificate(back, &error);
    INFO(error);
    CHECK(ok);
    CHECK(back.parts.size() == r.certificate->parts.size());
    CHECK(back.conditional == r.certificate->conditional);
    CHECK(certificate_to_json(back) == j);
}

TEST_CASE("trace JSON round-trip preserves replay") {
    KkopBound kb = bound(fixtures::poly("A6; 4:0 2:4 3:9:3"), fixtures::poly("A6; 2:14:3"));
    REQUIRE(kb.bounded());
    nlohmann::json j = trace_to_json(kb.trace);
    KkopTrace back = trace_from_json(j);
    CHECK(validate_trace(back, nullptr));
    CHECK(trace_to_json(back) == j);
}

TEST_CASE("DOT output is byte-deterministic") {
    QFGraph g = fixtures::graph_of(fixtures::kDiamond);
    std::string expected =
        "digraph G {\n"
        "  v0 [label=\"1_3\"];\n"
        "  v1 [label=\"2_0\"];\n"
        "  v2 [label=\"2_6\"];\n"
        "  v3 [label=\"2_6\"];\n"
        "  v4 [label=\"3_3\"];\n"
        "  v0 -> v1;\n"
        "  v2 -> v0;\n"
        "  v2 -> v4;\n"
        "  v3 -> v0;\n"
        "  v3 -> v4;\n"
        "  v4 -> v1;\n"
        "}\n";
    CHECK(to_dot(g) == expected);
    CHECK(to_dot(g) == to_dot(fixtures::graph_of(fixtures::kDiamond)));
}
