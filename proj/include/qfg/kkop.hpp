#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qfg/drinfeld.hpp"
#include "qfg/graph.hpp"
#include "qfg/ledger.hpp"

namespace qfg {

inline constexpr int kUnboundedUpper = std::numeric_limits<int>::max() / 4;

// One derivation step of an upper bound for the invariant d(V, W). Rules:
//   empty            - one side is the identity polynomial
//   fundamental_pair - both sides fundamental, value exact
//   dissociate       - no linking arrows between the fundamental expansions
//   naoi_chain       - one side fundamental extending the other side to an
//                      ascending chain with consecutive differences in the
//                      width-1 reducibility sets; value exactly 1
//   snake_pair       - combined fundamental graph totally ordered; at most 1
//   split            - subadditivity over a two-factor split of one side
//   ledger           - externally supplied bound
//   truncated        - search budget exhausted before a bound was derived
struct KkopTrace {
    std::string rule;
    DrinfeldPoly left;
    DrinfeldPoly right;
    int upper = kUnboundedUpper;
    std::vector<KkopTrace> children;                 // for split
    std::vector<FundamentalWeight> chain;            // for naoi_chain
    int fact_index = -1;                             // for ledger
};

struct KkopBound {
    int lower = 0;
    int upper = kUnboundedUpper;
    bool truncated = false;
    KkopTrace trace;

    bool bounded() const { return upper < kUnboundedUpper; }
};

struct KkopOptions {
    long budget = 50000;
    const AssumptionLedger* ledger = nullptr;
};

// Exact invariant for a pair of fundamental modules: 1 iff the center
// difference lies in the width-1 reducibility set.
int fundamental_d(const CartanContext& ctx, const FundamentalWeight& v,
                  const FundamentalWeight& w);

// True iff consecutive differences a_{s+1}-a_s all lie in the corresponding
// width-1 reducibility sets (in particular the centers strictly increase).
bool naoi_chain_check(const CartanContext& ctx, const std::vector<FundamentalWeight>& seq);

// Minimal upper bound for d(V(a), V(b)) derivable from the rule system,
// searched by branch and bound with memoization. The lower bound is 0 except
// in the exact cases (fundamental pairs and chain extensions).
KkopBound bound(const DrinfeldPoly& a, const DrinfeldPoly& b, const KkopOptions& opts = {});

// Same over disjoint vertex sets of a common graph.
KkopBound bound(const QFGraph& g, const VertexSet& h, const VertexSet& k,
                const KkopOptions& opts = {});

// Re-checks every rule's side conditions without redoing the search.
bool validate_trace(const KkopTrace& t, const AssumptionLedger* ledger);

}  // namespace qfg
