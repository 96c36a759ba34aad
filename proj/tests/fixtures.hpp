#pragma once

#include <string>
#include <vector>

#include "qfg/graph.hpp"
#include "qfg/textio.hpp"

namespace fixtures {

// Named example inputs used across the suites.

inline qfg::PseudoFactorization parse(const std::string& spec) {
    return qfg::parse_poly_spec(spec);
}

inline qfg::DrinfeldPoly poly(const std::string& spec) { return qfg::poly_of(parse(spec)); }

inline qfg::QFGraph graph_of(const std::string& spec) {
    return qfg::build_graph(qfg::q_factorize(poly(spec)));
}

// diamond over five fundamentals, real but with no singleton rds
inline const char* kDiamond = "A3; 2:0 1:3 3:3 2:6x2";

// snake-tree: three-string snake glued to a disjoint string
inline const char* kSnakeTree = "A6; 4:0 2:4 3:9:3 2:14:3";

// the same snake glued to a single fundamental
inline const char* kSnakeGlue = "A6; 4:0 2:4 3:9:3 1:7";

// totally ordered three-string graph that is not a snake
inline const char* kThreeStrings = "A4; 1:2:3 3:6:3 2:9:3";

// alternating 3-line that splits at one end
inline const char* kThreeLineSplit = "A4; 2:8:2 1:2:3 3:6:3";

// diamond paired with its reflected translate, one crossing arrow
inline const char* kDoubleDiamond = "A3; 2:0 1:3 3:3 2:6x2 2:-4 1:-7 3:-7 2:-10x2";

// l translated copies of kThreeStrings chained by single arrows
inline std::string chained_three_strings(int copies) {
    std::string out = "A4;";
    for (int k = 0; k < copies; ++k) {
        int s = 14 * k;
        out += " 1:" + std::to_string(2 + s) + ":3";
        out += " 3:" + std::to_string(6 + s) + ":3";
        out += " 2:" + std::to_string(9 + s) + ":3";
    }
    return out;
}

inline std::string shifted(const std::string& spec, int shift) {
    qfg::PseudoFactorization f = parse(spec);
    for (auto& kr : f.factors) kr.center += shift;
    return qfg::print_poly_spec(f);
}

// arrow multiset as (tail factor, head factor) pairs, sorted
inline std::vector<std::pair<qfg::KRFactor, qfg::KRFactor>> arrow_pairs(const qfg::QFGraph& g) {
    std::vector<std::pair<qfg::KRFactor, qfg::KRFactor>> out;
    for (const auto& [v, w] : g.arrows)
        out.push_back({g.vertices[static_cast<size_t>(v)], g.vertices[static_cast<size_t>(w)]});
    std::sort(out.begin(), out.end());
    return out;
}

inline std::pair<qfg::KRFactor, qfg::KRFactor> ap(const std::string& header,
                                                  const std::string& tail,
                                                  const std::string& head) {
    auto t = parse(header + " " + tail).factors.at(0);
    auto h = parse(header + " " + head).factors.at(0);
    return {t, h};
}

}  // namespace fixtures
