#include "qfg/kkop.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qfg/redsets.hpp"

namespace qfg {

int fundamental_d(const CartanContext& ctx, const FundamentalWeight& v,
                  const FundamentalWeight& w) {
    int m = v.center - w.center;
    if (m < 0) m = -m;
    return set_contains(red_set(ctx, v.node, w.node, 1, 1), m) ? 1 : 0;
}

bool naoi_chain_check(const CartanContext& ctx, const std::vector<FundamentalWeight>& seq) {
    if (seq.size() < 2) throw std::invalid_argument("chain needs at least two entries");
    for (size_t s = 0; s + 1 < seq.size(); ++s) {
        int diff = seq[s + 1].center - seq[s].center;
        if (diff <= 0) return false;
        if (!set_contains(red_set(ctx, seq[s].node, seq[s + 1].node, 1, 1), diff)) return false;
    }
    return true;
}

namespace {

bool fundamentals_linked(const CartanContext& ctx, const DrinfeldPoly& a, const DrinfeldPoly& b) {
    for (const auto& x : a.factors)
        for (const auto& y : b.factors)
            if (fundamental_d(ctx, x, y) == 1) return true;
    return false;
}

// Ascending chain through all entries of `pool` with consecutive differences
// in the width-1 reducibility sets, with `endpoint` first or last.
std::optional<std::vector<FundamentalWeight>> find_naoi_chain(const CartanContext& ctx,
                                                              std::vector<FundamentalWeight> pool,
                                                              const FundamentalWeight& endpoint) {
    std::sort(pool.begin(), pool.end(),
              [](const FundamentalWeight& x, const FundamentalWeight& y) {
                  return x.center < y.center || (x.center == y.center && x.node < y.node);
              });
    // strictly increasing centers are forced, so equal centers kill the chain
    for (size_t i = 0; i + 1 < pool.size(); ++i)
        if (pool[i].center == pool[i + 1].center) return std::nullopt;
    if (pool.front() != endpoint && pool.back() != endpoint) return std::nullopt;
    if (naoi_chain_check(ctx, pool)) return pool;
    return std::nullopt;
}

struct Searcher {
    const CartanContext ctx;
    KkopOptions opts;
    long nodes_left;
    std::map<std::string, KkopBound> memo;

    explicit Searcher(const CartanContext& c, const KkopOptions& o)
        : ctx(c), opts(o), nodes_left(o.budget) {}

    // exact factor list, no per-side normalization
    static std::string exact_key(const DrinfeldPoly& p, int shift) {
        std::string out;
        for (const auto& w : p.factors)
            out += std::to_string(w.node) + ":" + std::to_string(w.center + shift) + " ";
        return out;
    }

    // normalized by one common shift so translated pairs share a key
    static std::string pair_key(const DrinfeldPoly& a, const DrinfeldPoly& b) {
        int mn = 0;
        bool seen = false;
        for (const auto& w : a.factors) {
            mn = seen ? std::min(mn, w.center) : w.center;
            seen = true;
        }
        for (const auto& w : b.factors) {
            mn = seen ? std::min(mn, w.center) : w.center;
            seen = true;
        }
        std::string ka = exact_key(a, -mn);
        std::string kb = exact_key(b, -mn);
        if (kb < ka) std::swap(ka, kb);
        return ka + "|" + kb;
    }

    KkopBound run(const DrinfeldPoly& a, const DrinfeldPoly& b) {
        const std::string key = pair_key(a, b);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (nodes_left <= 0) {
            KkopBound r;
            r.truncated = true;
            r.trace = KkopTrace{"truncated", a, b, kUnboundedUpper, {}, {}, -1};
            return r;
        }
        --nodes_left;
        KkopBound r = compute(a, b);
        if (!r.truncated) memo.emplace(key, r);
        return r;
    }

    KkopBound compute(const DrinfeldPoly& a, const DrinfeldPoly& b) {
        KkopBound best;

        if (a.is_identity() || b.is_identity()) {
            best.upper = 0;
            best.trace = KkopTrace{"empty", a, b, 0, {}, {}, -1};
            return best;
        }

        if (a.degree() == 1 && b.degree() == 1) {
            int d = fundamental_d(ctx, a.factors[0], b.factors[0]);
            best.lower = best.upper = d;
            best.trace = KkopTrace{"fundamental_pair", a, b, d, {}, {}, -1};
            return best;
        }

        if (!fundamentals_linked(ctx, a, b)) {
            best.upper = 0;
            best.trace = KkopTrace{"dissociate", a, b, 0, {}, {}, -1};
            return best;
        }

        // chain extensions are exact, so they settle the value
        for (int side = 0; side < 2; ++side) {
            const DrinfeldPoly& single = side == 0 ? a : b;
            if (single.degree() != 1) continue;
            std::vector<FundamentalWeight> pool = a.factors;
            pool.insert(pool.end(), b.factors.begin(), b.factors.end());
            if (auto chain = find_naoi_chain(ctx, std::move(pool), single.factors[0])) {
                best.lower = best.upper = 1;
                best.trace = KkopTrace{"naoi_chain", a, b, 1, {}, *chain, -1};
                return best;
            }
        }

        auto consider = [&](KkopTrace t) {
            if (t.upper < best.upper) {
                best.upper = t.upper;
                best.trace = std::move(t);
            }
        };

        // a linked pair cannot drop below 1 through the rules alone: every
        // split keeps some linking fundamental pair together, so only an
        // assumed zero bound can beat 1
        bool has_zero_fact = false;
        if (opts.ledger)
            for (const auto& f : opts.ledger->facts)
                has_zero_fact =
                    has_zero_fact || (f.kind == LedgerFact::Kind::KkopLe && f.k == 0);
        const int floor = has_zero_fact ? 0 : 1;

        if (opts.ledger) {
            if (auto idx = opts.ledger->best_kkop_le(a, b)) {
                int k = opts.ledger->facts[static_cast<size_t>(*idx)].k;
                consider(KkopTrace{"ledger", a, b, k, {}, {}, *idx});
                if (best.upper <= floor) return best;
            }
        }

        {
            PseudoFactorization both = fundamental_factorization(multiply(a, b));
            if (is_totally_ordered(build_graph(both)))
                consider(KkopTrace{"snake_pair", a, b, 1, {}, {}, -1});
        }

        // subadditive splits of either side, most promising first: peels whose
        // remainder detaches from the other side settle the value in one step
        for (int side = 0; side < 2 && best.upper > floor; ++side) {
            const DrinfeldPoly& x = side == 0 ? a : b;
            const DrinfeldPoly& other = side == 0 ? b : a;
            if (x.degree() < 2) continue;
            struct Candidate {
                int priority;
                std::string key;
                DrinfeldPoly piece;
                DrinfeldPoly rest;
            };
            std::vector<Candidate> pieces;
            std::set<std::string> seen;
            auto add_piece = [&](const DrinfeldPoly& p) {
                if (p.is_identity() || p.degree() == x.degree()) return;
                std::string k;
                for (const auto& w : p.factors)
                    k += std::to_string(w.node) + ":" + std::to_string(w.center) + " ";
                if (!seen.insert(k).second) return;
                DrinfeldPoly rest = divide(x, p);
                int prio = 2;
                if (!fundamentals_linked(ctx, rest, other))
                    prio = 0;
                else if (!fundamentals_linked(ctx, p, other))
                    prio = 1;
                pieces.push_back({prio, std::move(k), p, std::move(rest)});
            };
            PseudoFactorization qf = q_factorize(x);
            if (qf.factors.size() >= 2)
                for (const auto& f : qf.factors) add_piece(poly_of_factor(ctx, f));
            {
                QFGraph gx = build_graph(qf);
                auto comps = connected_components(gx);
                if (comps.size() >= 2)
                    for (const auto& comp : comps) add_piece(poly_of_subgraph(gx, comp));
            }
            for (const auto& w : x.factors) add_piece(make_poly(ctx, {w}));
            std::sort(pieces.begin(), pieces.end(), [](const Candidate& l, const Candidate& r) {
                return l.priority != r.priority ? l.priority < r.priority : l.key < r.key;
            });

            for (const auto& c : pieces) {
                if (best.upper <= floor) break;
                KkopBound b1 = run(c.piece, other);
                if (b1.truncated) {
                    best.truncated = true;
                    continue;
                }
                if (b1.upper >= best.upper) continue;
                KkopBound b2 = run(c.rest, other);
                if (b2.truncated) {
                    best.truncated = true;
                    continue;
                }
                int total = b1.upper >= kUnboundedUpper || b2.upper >= kUnboundedUpper
                                ? kUnboundedUpper
                                : b1.upper + b2.upper;
                KkopTrace t{"split", x, other, total, {}, {}, -1};
                t.children.push_back(b1.trace);
                t.children.push_back(b2.trace);
                consider(std::move(t));
            }
        }

        if (!best.bounded()) {
            best.trace = KkopTrace{"truncated", a, b, kUnboundedUpper, {}, {}, -1};
            best.truncated = true;
        }
        return best;
    }
};

}  // namespace

KkopBound bound(const DrinfeldPoly& a, const DrinfeldPoly& b, const KkopOptions& opts) {
    if (a.ctx != b.ctx) throw std::invalid_argument("polynomials over different diagrams");
    Searcher s(a.ctx, opts);
    return s.run(a, b);
}

KkopBound bound(const QFGraph& g, const VertexSet& h, const VertexSet& k,
                const KkopOptions& opts) {
    VertexSet inter;
    std::set_intersection(h.begin(), h.end(), k.begin(), k.end(), std::back_inserter(inter));
    if (!inter.empty()) throw std::invalid_argument("subgraphs overlap");
    return bound(poly_of_subgraph(g, h), poly_of_subgraph(g, k), opts);
}

bool validate_trace(const KkopTrace& t, const AssumptionLedger* ledger) {
    const CartanContext& ctx = t.left.ctx;
    if (t.rule == "empty") return (t.left.is_identity() || t.right.is_identity()) && t.upper == 0;
    if (t.rule == "fundamental_pair")
        return t.left.degree() == 1 && t.right.degree() == 1 &&
               t.upper == fundamental_d(ctx, t.left.factors[0], t.right.factors[0]);
    if (t.rule == "dissociate")
        return !fundamentals_linked(ctx, t.left, t.right) && t.upper == 0;
    if (t.rule == "naoi_chain") {
        if (t.upper != 1 || t.chain.size() != t.left.factors.size() + t.right.factors.size())
            return false;
        if (t.left.degree() != 1 && t.right.degree() != 1) return false;
        const FundamentalWeight& single =
            t.left.degree() == 1 ? t.left.factors[0] : t.right.factors[0];
        if (t.chain.front() != single && t.chain.back() != single) return false;
        std::vector<FundamentalWeight> sorted = t.chain;
        std::sort(sorted.begin(), sorted.end());
        DrinfeldPoly all = multiply(t.left, t.right);
        if (sorted != all.factors) return false;
        return naoi_chain_check(ctx, t.chain);
    }
    if (t.rule == "snake_pair") {
        if (t.upper != 1) return false;
        return is_totally_ordered(build_graph(fundamental_factorization(multiply(t.left, t.right))));
    }
    if (t.rule == "ledger") {
        if (!ledger) return false;
        auto idx = ledger->find_kkop_le(t.left, t.right, t.upper);
        return idx.has_value();
    }
    if (t.rule == "split") {
        if (t.children.size() != 2) return false;
        const auto& c1 = t.children[0];
        const auto& c2 = t.children[1];
        if (t.upper != c1.upper + c2.upper) return false;
        // children bound the two pieces of one side against the other side;
        // the invariant is symmetric, so each node may record its pair in
        // either orientation
        auto piece_against = [](const KkopTrace& c,
                                const DrinfeldPoly& other) -> const DrinfeldPoly* {
            if (c.right.factors == other.factors) return &c.left;
            if (c.left.factors == other.factors) return &c.right;
            return nullptr;
        };
        bool shape_ok = false;
        for (int orient = 0; orient < 2 && !shape_ok; ++orient) {
            const DrinfeldPoly& whole = orient == 0 ? t.left : t.right;
            const DrinfeldPoly& other = orient == 0 ? t.right : t.left;
            const DrinfeldPoly* p1 = piece_against(c1, other);
            const DrinfeldPoly* p2 = piece_against(c2, other);
            if (p1 && p2 && multiply(*p1, *p2).factors == whole.factors) shape_ok = true;
        }
        if (!shape_ok) return false;
        return validate_trace(c1, ledger) && validate_trace(c2, ledger);
    }
    return false;
}

}  // namespace qfg
