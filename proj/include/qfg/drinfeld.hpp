#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qfg/cartan.hpp"

namespace qfg {

// Fundamental l-weight: node i, integer q-exponent a.
struct FundamentalWeight {
    int node = 1;
    int center = 0;

    auto operator<=>(const FundamentalWeight&) const = default;
};

// Kirillov-Reshetikhin string: node i, center a, width r >= 1.
struct KRFactor {
    int node = 1;
    int center = 0;
    int width = 1;

    auto operator<=>(const KRFactor&) const = default;
};

// Multiset of fundamental l-weights over a fixed diagram. The factor list is
// kept sorted; the empty list is the identity polynomial.
struct DrinfeldPoly {
    CartanContext ctx;
    std::vector<FundamentalWeight> factors;

    bool is_identity() const { return factors.empty(); }
    int degree() const { return static_cast<int>(factors.size()); }
};

// Ordered list of KR factors with stable indices; any KR decomposition of a
// polynomial, not necessarily in general position.
struct PseudoFactorization {
    CartanContext ctx;
    std::vector<KRFactor> factors;
};

std::vector<FundamentalWeight> expand(const KRFactor& f);

DrinfeldPoly make_poly(const CartanContext& ctx, std::vector<FundamentalWeight> factors);
DrinfeldPoly poly_of(const PseudoFactorization& f);
DrinfeldPoly poly_of_factor(const CartanContext& ctx, const KRFactor& f);

DrinfeldPoly multiply(const DrinfeldPoly& a, const DrinfeldPoly& b);
// Multiset difference; throws when b does not divide a.
DrinfeldPoly divide(const DrinfeldPoly& a, const DrinfeldPoly& b);

// Unique factorization into q-strings in pairwise general position: every
// same-node pair of widths r, s at centers a, b has |a-b| outside
// {r+s-2p : 0 <= p < min(r,s)}. Output sorted by (node, center, width).
PseudoFactorization q_factorize(const DrinfeldPoly& pi);

// All widths 1, sorted.
PseudoFactorization fundamental_factorization(const DrinfeldPoly& pi);

// True when the factor list satisfies the general-position condition above.
bool is_q_factorization(const PseudoFactorization& f);

struct Restriction {
    DrinfeldPoly poly;  // over a context of rank #J, nodes re-indexed to 1..#J
    Subdiagram window;
    int node_offset = 0;  // original node = restricted node + offset
};

Restriction restrict(const DrinfeldPoly& pi, const Subdiagram& J);

enum class DualityKind { Star, Costar, Kappa, KappaStar };

DrinfeldPoly dualize(const DrinfeldPoly& pi, DualityKind kind);

DrinfeldPoly translate(const DrinfeldPoly& pi, int shift);

// Translation-normalized textual key (min center shifted to 0); identifies
// polynomials up to a uniform shift.
std::string canonical_key(const DrinfeldPoly& pi);

// True when the two polynomials agree up to a uniform shift of all centers.
bool equal_up_to_shift(const DrinfeldPoly& a, const DrinfeldPoly& b);

}  // namespace qfg
