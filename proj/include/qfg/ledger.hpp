#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfg/drinfeld.hpp"

namespace qfg {

// Externally supplied representation-theoretic facts. Every certificate step
// relying on one of these carries the fact along, and the certificate is
// flagged conditional.
struct LedgerFact {
    enum class Kind { Simple, Hlw, KkopLe, Real };
    Kind kind = Kind::Real;
    DrinfeldPoly left;
    std::optional<DrinfeldPoly> right;
    int k = 0;  // bound for KkopLe
    std::string note;
};

std::string fact_kind_name(LedgerFact::Kind k);
LedgerFact::Kind fact_kind_from_name(const std::string& name);

struct AssumptionLedger {
    std::vector<LedgerFact> facts;

    bool empty() const { return facts.empty(); }

    // All lookups match operands up to a uniform shift of the centers (applied
    // jointly to both operands of a pair fact).
    std::optional<int> find_real(const DrinfeldPoly& pi) const;
    std::optional<int> find_hlw(const DrinfeldPoly& first, const DrinfeldPoly& second) const;
    std::optional<int> find_simple(const DrinfeldPoly& a, const DrinfeldPoly& b) const;
    // KkopLe fact with bound <= k covering the unordered pair {a, b}.
    std::optional<int> find_kkop_le(const DrinfeldPoly& a, const DrinfeldPoly& b, int k) const;
    // KkopLe fact with the smallest bound covering the unordered pair {a, b}.
    std::optional<int> best_kkop_le(const DrinfeldPoly& a, const DrinfeldPoly& b) const;
};

}  // namespace qfg
