#pragma once

#include <vector>

#include "qfg/cartan.hpp"
#include "qfg/drinfeld.hpp"

namespace qfg {

// Reducibility sets are tiny and get printed in certificates, so they are
// materialized as sorted vectors of positive integers.
using ReducibilitySet = std::vector<int>;

bool set_contains(const ReducibilitySet& s, int m);

// sl2 set {r+s-2p : 0 <= p < min(r,s)}.
ReducibilitySet sl2_set(int r, int s);

// Type-A set {r+s+d(i,j)-2p : -d([i,j], boundary) <= p < min(r,s)}.
ReducibilitySet red_set(const CartanContext& ctx, int i, int j, int r, int s);

// Same formula evaluated inside the subdiagram J (boundary and distances of J).
// Nodes i, j carry their original labels and must lie in J.
ReducibilitySet red_set_restricted(const CartanContext& ctx, const Subdiagram& J, int i, int j,
                                   int r, int s);

enum class ArrowDir { None, Forward, Backward };

// Forward means v -> w: the ordered tensor product V(v) (x) V(w) is reducible
// and highest-l-weight, i.e. the signed center difference lies in the
// reducibility set.
ArrowDir arrow_between(const CartanContext& ctx, const KRFactor& v, const KRFactor& w);

// Width-1 variant used by chain checks.
ArrowDir arrow_between(const CartanContext& ctx, const FundamentalWeight& v,
                       const FundamentalWeight& w);

}  // namespace qfg
