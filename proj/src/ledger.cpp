#include "qfg/ledger.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfg {

std::string fact_kind_name(LedgerFact::Kind k) {
    switch (k) {
        case LedgerFact::Kind::Simple: return "simple";
        case LedgerFact::Kind::Hlw: return "hlw";
        case LedgerFact::Kind::KkopLe: return "kkop_le";
        case LedgerFact::Kind::Real: return "real";
    }
    throw std::logic_error("bad fact kind");
}

LedgerFact::Kind fact_kind_from_name(const std::string& name) {
    if (name == "simple") return LedgerFact::Kind::Simple;
    if (name == "hlw") return LedgerFact::Kind::Hlw;
    if (name == "kkop_le") return LedgerFact::Kind::KkopLe;
    if (name == "real") return LedgerFact::Kind::Real;
    throw std::invalid_argument("unknown ledger fact kind: " + name);
}

namespace {

// Compare (a, b) with (l, r) modulo one common shift of all centers.
bool pair_matches(const DrinfeldPoly& a, const DrinfeldPoly& b, const DrinfeldPoly& l,
                  const DrinfeldPoly& r) {
    if (a.ctx != l.ctx || b.ctx != r.ctx) return false;
    if (a.factors.size() != l.factors.size() || b.factors.size() != r.factors.size()) return false;
    if (a.factors.empty() && b.factors.empty()) return l.factors.empty() && r.factors.empty();
    int shift;
    if (!a.factors.empty()) {
        if (l.factors.empty()) return false;
        shift = a.factors.front().center - l.factors.front().center;
    } else {
        if (r.factors.empty()) return false;
        shift = b.factors.front().center - r.factors.front().center;
    }
    auto shifted_eq = [&](const DrinfeldPoly& x, const DrinfeldPoly& y) {
        for (size_t i = 0; i < x.factors.size(); ++i) {
            if (x.factors[i].node != y.factors[i].node) return false;
            if (x.factors[i].center != y.factors[i].center + shift) return false;
        }
        return true;
    };
    return shifted_eq(a, l) && shifted_eq(b, r);
}

}  // namespace

std::optional<int> AssumptionLedger::find_real(const DrinfeldPoly& pi) const {
    for (size_t i = 0; i < facts.size(); ++i)
        if (facts[i].kind == LedgerFact::Kind::Real && equal_up_to_shift(facts[i].left, pi))
            return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> AssumptionLedger::find_hlw(const DrinfeldPoly& first,
                                              const DrinfeldPoly& second) const {
    for (size_t i = 0; i < facts.size(); ++i) {
        const auto& f = facts[i];
        if (f.kind != LedgerFact::Kind::Hlw || !f.right) continue;
        if (pair_matches(first, second, f.left, *f.right)) return static_cast<int>(i);
    }
    return std::nullopt;
}

std::optional<int> AssumptionLedger::find_simple(const DrinfeldPoly& a,
                                                 const DrinfeldPoly& b) const {
    for (size_t i = 0; i < facts.size(); ++i) {
        const auto& f = facts[i];
        if (f.kind != LedgerFact::Kind::Simple || !f.right) continue;
        if (pair_matches(a, b, f.left, *f.right) || pair_matches(b, a, f.left, *f.right))
            return static_cast<int>(i);
    }
    return std::nullopt;
}

std::optional<int> AssumptionLedger::find_kkop_le(const DrinfeldPoly& a, const DrinfeldPoly& b,
                                                  int k) const {
    for (size_t i = 0; i < facts.size(); ++i) {
        const auto& f = facts[i];
        if (f.kind != LedgerFact::Kind::KkopLe || !f.right || f.k > k) continue;
        if (pair_matches(a, b, f.left, *f.right) || pair_matches(b, a, f.left, *f.right))
            return static_cast<int>(i);
    }
    return std::nullopt;
}

std::optional<int> AssumptionLedger::best_kkop_le(const DrinfeldPoly& a,
                                                  const DrinfeldPoly& b) const {
    std::optional<int> best;
    for (size_t i = 0; i < facts.size(); ++i) {
        const auto& f = facts[i];
        if (f.kind != LedgerFact::Kind::KkopLe || !f.right) continue;
        if (!pair_matches(a, b, f.left, *f.right) && !pair_matches(b, a, f.left, *f.right))
            continue;
        if (!best || f.k < facts[static_cast<size_t>(*best)].k) best = static_cast<int>(i);
    }
    return best;
}

}  // namespace qfg
