#include "qfg/reality.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "qfg/primality.hpp"
#include "qfg/redsets.hpp"

namespace qfg {

std::string status_name(RealityIndex::Status s) {
    switch (s) {
        case RealityIndex::Status::StronglyReal: return "StronglyReal";
        case RealityIndex::Status::RealCertified: return "RealCertified";
        case RealityIndex::Status::Conditional: return "Conditional";
        case RealityIndex::Status::Inconclusive: return "Inconclusive";
    }
    throw std::logic_error("bad status");
}

namespace {

// ---- live-subset graph helpers ----------------------------------------------

VertexSet live_difference(const VertexSet& live, const VertexSet& sub) {
    VertexSet out;
    std::set_difference(live.begin(), live.end(), sub.begin(), sub.end(),
                        std::back_inserter(out));
    return out;
}

std::vector<Arrow> live_linking_arrows(const QFGraph& g, const VertexSet& live,
                                       const VertexSet& sub) {
    std::vector<char> in_live(static_cast<size_t>(g.size()), 0), in_sub(in_live);
    for (VertexId v : live) in_live[static_cast<size_t>(v)] = 1;
    for (VertexId v : sub) in_sub[static_cast<size_t>(v)] = 1;
    std::vector<Arrow> out;
    for (const auto& [v, w] : g.arrows) {
        if (!in_live[static_cast<size_t>(v)] || !in_live[static_cast<size_t>(w)]) continue;
        if (in_sub[static_cast<size_t>(v)] != in_sub[static_cast<size_t>(w)])
            out.push_back({v, w});
    }
    return out;
}

Extremality live_extremality(const QFGraph& g, const VertexSet& live, const VertexSet& sub) {
    bool top = true, bottom = true;
    std::vector<char> in_sub(static_cast<size_t>(g.size()), 0);
    for (VertexId v : sub) in_sub[static_cast<size_t>(v)] = 1;
    for (const auto& [v, w] : live_linking_arrows(g, live, sub)) {
        if (!in_sub[static_cast<size_t>(v)]) top = false;
        if (!in_sub[static_cast<size_t>(w)]) bottom = false;
    }
    if (top) return Extremality::Top;
    if (bottom) return Extremality::Bottom;
    return Extremality::No;
}

VertexSet live_adjacency(const QFGraph& g, const VertexSet& live, VertexId v) {
    std::vector<char> in_live(static_cast<size_t>(g.size()), 0);
    for (VertexId x : live) in_live[static_cast<size_t>(x)] = 1;
    VertexSet adj{v};
    for (VertexId w : g.out_adj[static_cast<size_t>(v)])
        if (in_live[static_cast<size_t>(w)]) adj.push_back(w);
    for (VertexId w : g.in_adj[static_cast<size_t>(v)])
        if (in_live[static_cast<size_t>(w)]) adj.push_back(w);
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    return adj;
}

// ---- certification step builders --------------------------------------------

KkopOptions kkop_options(const AssumptionLedger& ledger, const RealityBudget& budget) {
    KkopOptions o;
    o.budget = budget.kkop_budget;
    o.ledger = ledger.empty() ? nullptr : &ledger;
    return o;
}

bool trace_uses_ledger(const KkopTrace& t) {
    if (t.rule == "ledger") return true;
    for (const auto& c : t.children)
        if (trace_uses_ledger(c)) return true;
    return false;
}

std::optional<HlwStep> hlw_step_for(const QFGraph& g, const AssumptionLedger& ledger,
                                    const VertexSet& live, const VertexSet& sub,
                                    bool* conditional) {
    Extremality e = live_extremality(g, live, sub);
    if (e == Extremality::Top) return HlwStep{HlwStep::Rule::Top, -1};
    if (e == Extremality::Bottom) return HlwStep{HlwStep::Rule::Bottom, -1};
    DrinfeldPoly ph = poly_of_subgraph(g, sub);
    DrinfeldPoly pc = poly_of_subgraph(g, live_difference(live, sub));
    if (auto i = ledger.find_hlw(ph, pc)) {
        *conditional = true;
        return HlwStep{HlwStep::Rule::Ledger, *i};
    }
    if (auto i = ledger.find_hlw(pc, ph)) {
        *conditional = true;
        return HlwStep{HlwStep::Rule::Ledger, *i};
    }
    // an assumed invariant bound <= 1 on exactly this cut stands in for the
    // highest-weight condition; the certificate stays conditional on it
    if (auto i = ledger.find_kkop_le(ph, pc, 1)) {
        *conditional = true;
        return HlwStep{HlwStep::Rule::LedgerKkopCut, *i};
    }
    return std::nullopt;
}

std::optional<SimplicityStep> simplicity_step_for(const QFGraph& g, const AssumptionLedger& ledger,
                                                  const RealityBudget& budget,
                                                  const VertexSet& live, const VertexSet& sub,
                                                  bool* conditional) {
    auto links = live_linking_arrows(g, live, sub);
    if (links.empty()) return SimplicityStep{SimplicityStep::Rule::Dissociate, -1, nullptr};
    if (sub.size() == 1) {
        VertexId v = sub[0];
        VertexSet adj = live_adjacency(g, live, v);
        if (adj.size() <= 2) return SimplicityStep{SimplicityStep::Rule::ValenceLeOne, -1, nullptr};
        if (is_prime_snake(poly_of_subgraph(g, adj)))
            return SimplicityStep{SimplicityStep::Rule::SnakeAdjacency, -1, nullptr};
    }
    DrinfeldPoly ph = poly_of_subgraph(g, sub);
    DrinfeldPoly pc = poly_of_subgraph(g, live_difference(live, sub));
    KkopBound kb = bound(ph, pc, kkop_options(ledger, budget));
    if (kb.bounded() && kb.upper <= 1) {
        if (trace_uses_ledger(kb.trace)) *conditional = true;
        return SimplicityStep{SimplicityStep::Rule::KkopLeOne, -1,
                              std::make_shared<KkopTrace>(kb.trace)};
    }
    if (auto i = ledger.find_simple(poly_of_subgraph(g, live), ph)) {
        *conditional = true;
        return SimplicityStep{SimplicityStep::Rule::Ledger, *i, nullptr};
    }
    return std::nullopt;
}

// ---- assumption embedding ----------------------------------------------------

void gather_trace_facts(const KkopTrace& t, std::vector<int>& out) {
    if (t.rule == "ledger" && t.fact_index >= 0) out.push_back(t.fact_index);
    for (const auto& c : t.children) gather_trace_facts(c, out);
}

void remap_trace_facts(KkopTrace& t, const std::map<int, int>& remap) {
    if (t.rule == "ledger" && t.fact_index >= 0) t.fact_index = remap.at(t.fact_index);
    for (auto& c : t.children) remap_trace_facts(c, remap);
}

// Rewrites ledger indices into a private assumption list per certificate, so
// certificates replay standalone. Subchains get their own lists.
void embed_assumptions(QuochainCertificate& cert, const AssumptionLedger& ledger) {
    std::vector<int> used;
    for (auto& p : cert.parts) {
        if (p.real.subchain) embed_assumptions(*p.real.subchain, ledger);
        if (p.real.fact_index >= 0) used.push_back(p.real.fact_index);
        if (p.hlw.fact_index >= 0) used.push_back(p.hlw.fact_index);
        if (p.simplicity.fact_index >= 0) used.push_back(p.simplicity.fact_index);
        if (p.simplicity.kkop) gather_trace_facts(*p.simplicity.kkop, used);
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::map<int, int> remap;
    cert.assumptions.clear();
    for (int i : used) {
        remap[i] = static_cast<int>(cert.assumptions.size());
        cert.assumptions.push_back(ledger.facts[static_cast<size_t>(i)]);
    }
    for (auto& p : cert.parts) {
        if (p.real.fact_index >= 0) p.real.fact_index = remap.at(p.real.fact_index);
        if (p.hlw.fact_index >= 0) p.hlw.fact_index = remap.at(p.hlw.fact_index);
        if (p.simplicity.fact_index >= 0)
            p.simplicity.fact_index = remap.at(p.simplicity.fact_index);
        if (p.simplicity.kkop) remap_trace_facts(*p.simplicity.kkop, remap);
    }
}

// ---- search ------------------------------------------------------------------

std::optional<QuochainCertificate> kkop_tree_impl(const QFGraph& g, const Multicut& m,
                                                  const AssumptionLedger& ledger,
                                                  const RealityBudget& budget);

KkopTrace translated_trace(const KkopTrace& in, int shift) {
    KkopTrace out = in;
    out.left = translate(in.left, shift);
    out.right = translate(in.right, shift);
    for (auto& w : out.chain) w.center += shift;
    out.children.clear();
    for (const auto& c : in.children) out.children.push_back(translated_trace(c, shift));
    return out;
}

// Deep copy with all centers shifted; nested nodes are rebuilt so the source
// certificate stays untouched.
QuochainCertificate translated_certificate(const QuochainCertificate& in, int shift) {
    QuochainCertificate out = in;
    for (auto& f : out.graph_vertices) f.center += shift;
    for (auto& p : out.parts) {
        for (auto& f : p.factors) f.center += shift;
        if (p.simplicity.kkop)
            p.simplicity.kkop =
                std::make_shared<KkopTrace>(translated_trace(*p.simplicity.kkop, shift));
        if (p.real.subchain)
            p.real.subchain = std::make_shared<QuochainCertificate>(
                translated_certificate(*p.real.subchain, shift));
    }
    return out;
}

int min_center(const DrinfeldPoly& pi) {
    int mn = 0;
    bool seen = false;
    for (const auto& w : pi.factors) {
        mn = seen ? std::min(mn, w.center) : w.center;
        seen = true;
    }
    return mn;
}

struct Search {
    const QFGraph& g;
    const AssumptionLedger& ledger;
    RealityBudget budget;
    long nodes_left;
    // memoized up to translation; entries remember their base center so hits
    // on shifted twins can be re-centered
    struct MemoEntry {
        CertifyResult result;
        int base_center = 0;
    };
    std::map<std::string, MemoEntry> memo;

    Search(const QFGraph& graph, const AssumptionLedger& l, const RealityBudget& b)
        : g(graph), ledger(l), budget(b), nodes_left(b.search_nodes) {}

    std::string memo_key(const VertexSet& live, std::optional<VertexId> endpoint) const {
        DrinfeldPoly pi = poly_of_subgraph(g, live);
        std::string key = canonical_key(pi);
        if (endpoint) {
            int shift = 0;
            if (!pi.factors.empty()) {
                int mn = pi.factors.front().center;
                for (const auto& w : pi.factors) mn = std::min(mn, w.center);
                shift = -mn;
            }
            const KRFactor& f = g.vertices[static_cast<size_t>(*endpoint)];
            key += "@" + std::to_string(f.node) + ":" + std::to_string(f.center + shift) + ":" +
                   std::to_string(f.width);
        }
        return key;
    }

    QuochainPart make_part(const VertexSet& ids, bool terminal) const {
        QuochainPart p;
        p.ids = ids;
        for (VertexId v : ids) p.factors.push_back(g.vertices[static_cast<size_t>(v)]);
        p.terminal = terminal;
        return p;
    }

    QuochainCertificate shell(const VertexSet& live) const {
        QuochainCertificate c;
        c.ctx = g.ctx;
        for (VertexId v : live) c.graph_vertices.push_back(g.vertices[static_cast<size_t>(v)]);
        return c;
    }

    // Prepends `head` (ambient ids) to `chain` (a certificate over the tail
    // vertex order `live_rest`) and re-indexes everything to positions in
    // `live0`.
    static void splice(QuochainCertificate& target, const VertexSet& live0,
                       const QuochainPart& head, const QuochainCertificate& chain,
                       const VertexSet& live_rest) {
        target.parts.push_back(head);
        for (const auto& p : chain.parts) {
            QuochainPart q = p;
            q.ids.clear();
            for (VertexId local : p.ids) q.ids.push_back(live_rest[static_cast<size_t>(local)]);
            std::sort(q.ids.begin(), q.ids.end());
            target.parts.push_back(std::move(q));
        }
        std::map<VertexId, int> pos;
        for (size_t k = 0; k < live0.size(); ++k) pos[live0[k]] = static_cast<int>(k);
        for (auto& part : target.parts) {
            for (auto& v : part.ids) v = pos.at(v);
            std::sort(part.ids.begin(), part.ids.end());
        }
    }

    CertifyResult certify(const VertexSet& live, std::optional<VertexId> endpoint) {
        const std::string key = memo_key(live, endpoint);
        const int base = min_center(poly_of_subgraph(g, live));
        if (auto it = memo.find(key); it != memo.end()) {
            CertifyResult hit = it->second.result;
            int shift = base - it->second.base_center;
            if (shift != 0 && hit.certificate)
                hit.certificate = translated_certificate(*hit.certificate, shift);
            return hit;
        }
        CertifyResult result = certify_inner(live, endpoint);
        memo.emplace(key, MemoEntry{result, base});
        return result;
    }

    void finish(CertifyResult& out, const VertexSet& live, QuochainCertificate cert) const {
        out.certificate = std::move(cert);
        out.index.q_lower = static_cast<int>(out.certificate->parts.size());
        out.index.r_upper = static_cast<int>(live.size()) - out.index.q_lower;
        if (out.certificate->conditional)
            out.index.status = RealityIndex::Status::Conditional;
        else if (out.certificate->strong)
            out.index.status = RealityIndex::Status::StronglyReal;
        else
            out.index.status = RealityIndex::Status::RealCertified;
    }

    CertifyResult certify_inner(const VertexSet& live, std::optional<VertexId> endpoint) {
        CertifyResult out;
        out.index.q_lower = 0;
        out.index.r_upper = static_cast<int>(live.size());
        out.index.status = RealityIndex::Status::Inconclusive;

        if (live.empty()) {
            QuochainCertificate c = shell(live);
            c.strong = true;
            finish(out, live, std::move(c));
            return out;
        }
        if (live.size() == 1) {
            if (endpoint && live[0] != *endpoint) return out;
            QuochainCertificate c = shell(live);
            QuochainPart p = make_part(live, true);
            p.real = PartReal{PartReal::Rule::SingletonKr, -1, nullptr};
            p.ids = {0};
            c.parts.push_back(std::move(p));
            c.strong = true;
            finish(out, live, std::move(c));
            return out;
        }
        if (nodes_left-- <= 0) return out;

        std::optional<QuochainCertificate> best;

        // singleton extremal peels, smallest adjacency first
        std::vector<VertexId> candidates;
        for (VertexId v : live) {
            if (endpoint && *endpoint == v) continue;
            if (live_extremality(g, live, {v}) != Extremality::No) candidates.push_back(v);
        }
        std::sort(candidates.begin(), candidates.end(), [&](VertexId a, VertexId b) {
            size_t va = live_adjacency(g, live, a).size(), vb = live_adjacency(g, live, b).size();
            if (va != vb) return va < vb;
            return a < b;
        });
        for (VertexId v : candidates) {
            if (best && best->parts.size() == live.size()) break;
            VertexSet sub{v};
            bool conditional = false;
            auto hlw = hlw_step_for(g, ledger, live, sub, &conditional);
            if (!hlw) continue;
            auto simp = simplicity_step_for(g, ledger, budget, live, sub, &conditional);
            if (!simp) continue;
            VertexSet rest = live_difference(live, sub);
            CertifyResult tail = certify(rest, endpoint);
            if (!tail.certificate) continue;
            QuochainCertificate c = shell(live);
            QuochainPart head = make_part(sub, false);
            head.real = PartReal{PartReal::Rule::SingletonKr, -1, nullptr};
            head.hlw = *hlw;
            head.simplicity = *simp;
            splice(c, live, head, *tail.certificate, rest);
            c.conditional = conditional || tail.certificate->conditional;
            c.strong = true;
            for (const auto& p : c.parts) c.strong = c.strong && p.ids.size() == 1;
            if (!best || c.parts.size() > best->parts.size() ||
                (c.parts.size() == best->parts.size() && !c.conditional && best->conditional))
                best = std::move(c);
        }

        if (!endpoint) {
            if (!best || best->parts.size() < live.size()) try_ledger_cuts(live, best);
            if (!best || best->parts.size() < live.size()) try_ledger_real_cuts(live, best);
            if ((!best || best->parts.size() < live.size()) &&
                static_cast<int>(live.size()) <= budget.gtree_enum_limit)
                try_gtree_partitions(live, best);
            if (!best) {
                if (auto i = ledger.find_real(poly_of_subgraph(g, live))) {
                    QuochainCertificate c = shell(live);
                    QuochainPart p = make_part(live, true);
                    p.real = PartReal{PartReal::Rule::Ledger, *i, nullptr};
                    std::map<VertexId, int> pos;
                    for (size_t k = 0; k < live.size(); ++k) pos[live[k]] = static_cast<int>(k);
                    for (auto& v : p.ids) v = pos.at(v);
                    c.parts.push_back(std::move(p));
                    c.conditional = true;
                    best = std::move(c);
                }
            }
        }

        if (best) finish(out, live, std::move(*best));
        return out;
    }

    // non-singleton rds cuts along the operands of pair facts; the fact only
    // suggests the candidate, the steps justify it
    void try_ledger_cuts(const VertexSet& live, std::optional<QuochainCertificate>& best) {
        if (ledger.empty() || live.size() > 20) return;
        DrinfeldPoly whole = poly_of_subgraph(g, live);
        std::set<VertexSet> tried;
        for (size_t fi = 0; fi < ledger.facts.size(); ++fi) {
            const LedgerFact& f = ledger.facts[fi];
            if (!f.right) continue;
            if (f.kind == LedgerFact::Kind::KkopLe && f.k > 1) continue;
            for (int orient = 0; orient < 2; ++orient) {
                const DrinfeldPoly& target = orient == 0 ? f.left : *f.right;
                if (target.is_identity() || target.degree() >= whole.degree()) continue;
                for_each_matching_subset(live, target, [&](const VertexSet& sub) {
                    if (best && best->parts.size() == live.size()) return;
                    if (!tried.insert(sub).second) return;
                    VertexSet rest = live_difference(live, sub);
                    bool conditional = false;
                    auto hlw = hlw_step_for(g, ledger, live, sub, &conditional);
                    if (!hlw) return;
                    auto simp = simplicity_step_for(g, ledger, budget, live, sub, &conditional);
                    if (!simp) return;
                    CertifyResult part_cert = certify(sub, std::nullopt);
                    if (!part_cert.certificate) return;
                    CertifyResult tail = certify(rest, std::nullopt);
                    if (!tail.certificate) return;
                    QuochainCertificate c = shell(live);
                    QuochainPart head = make_part(sub, false);
                    if (sub.size() == 1)
                        head.real = PartReal{PartReal::Rule::SingletonKr, -1, nullptr};
                    else
                        head.real =
                            PartReal{PartReal::Rule::SubChain, -1,
                                     std::make_shared<QuochainCertificate>(*part_cert.certificate)};
                    head.hlw = *hlw;
                    head.simplicity = *simp;
                    splice(c, live, head, *tail.certificate, rest);
                    c.conditional = conditional || part_cert.certificate->conditional ||
                                    tail.certificate->conditional;
                    c.strong = true;
                    for (const auto& p : c.parts) c.strong = c.strong && p.ids.size() == 1;
                    if (!best || c.parts.size() > best->parts.size()) best = std::move(c);
                });
            }
        }
    }

    // two-part compositions cut out along an assumed-real subgraph
    void try_ledger_real_cuts(const VertexSet& live, std::optional<QuochainCertificate>& best) {
        if (ledger.empty() || live.size() > 20 || live.size() < 2) return;
        QFGraph sub = induced_subgraph(g, live);
        DrinfeldPoly whole = poly_of_subgraph(g, live);
        std::map<VertexId, int> pos;
        for (size_t k = 0; k < live.size(); ++k) pos[live[k]] = static_cast<int>(k);
        for (const LedgerFact& f : ledger.facts) {
            if (f.kind != LedgerFact::Kind::Real) continue;
            if (f.left.is_identity() || f.left.degree() >= whole.degree()) continue;
            for_each_matching_subset(live, f.left, [&](const VertexSet& amb) {
                if (best && best->parts.size() == live.size()) return;
                VertexSet part_local, rest_local;
                for (VertexId v : live)
                    (std::binary_search(amb.begin(), amb.end(), v) ? part_local : rest_local)
                        .push_back(pos.at(v));
                auto cert = kkop_tree_impl(sub, {part_local, rest_local}, ledger, budget);
                if (cert && (!best || cert->parts.size() > best->parts.size()))
                    best = std::move(*cert);
            });
        }
    }

    template <typename F>
    void for_each_matching_subset(const VertexSet& live, const DrinfeldPoly& target, F&& fn) {
        std::set<VertexSet> found;
        VertexSet current;
        int want = target.degree();
        std::function<void(size_t, int)> rec = [&](size_t idx, int got) {
            if (got == want) {
                if (equal_up_to_shift(poly_of_subgraph(g, current), target))
                    found.insert(current);
                return;
            }
            if (idx >= live.size()) return;
            int deg = g.vertices[static_cast<size_t>(live[idx])].width;
            if (got + deg <= want) {
                current.push_back(live[idx]);
                rec(idx + 1, got + deg);
                current.pop_back();
            }
            rec(idx + 1, got);
        };
        rec(0, 0);
        for (const auto& s : found) fn(s);
    }

    // exhaustive tree-of-parts composition on small graphs
    void try_gtree_partitions(const VertexSet& live, std::optional<QuochainCertificate>& best) {
        const size_t n = live.size();
        if (n < 2) return;
        QFGraph sub = induced_subgraph(g, live);
        if (!is_connected(sub)) return;
        std::vector<int> assign(n, 0);
        std::function<void(size_t, int)> rec = [&](size_t idx, int max_part) {
            if (nodes_left <= 0) return;
            if (best && best->parts.size() == n) return;
            if (idx == n) {
                int l = max_part + 1;
                if (l < 2 || l == static_cast<int>(n)) return;
                --nodes_left;
                Multicut m(static_cast<size_t>(l));
                for (size_t i = 0; i < n; ++i)
                    m[static_cast<size_t>(assign[i])].push_back(static_cast<int>(i));
                if (cut_set(sub, m).size() != m.size() - 1) return;
                auto cert = kkop_tree_impl(sub, m, ledger, budget);
                if (cert && (!best || cert->parts.size() > best->parts.size()))
                    best = std::move(*cert);
                return;
            }
            for (int p = 0; p <= max_part + 1 && p < static_cast<int>(n); ++p) {
                assign[idx] = p;
                rec(idx + 1, std::max(max_part, p));
            }
        };
        rec(1, 0);
    }
};

// Chain builder for the invariant-bound composition: parts arrive in peel
// order; every part but the last is justified as a whole-part rds.
std::optional<QuochainCertificate> tree_chain(const QFGraph& g, const Multicut& ordered,
                                              const AssumptionLedger& ledger,
                                              const RealityBudget& budget) {
    Search search(g, ledger, budget);
    VertexSet live = full_vertex_set(g);
    QuochainCertificate out = search.shell(live);
    bool conditional = false;

    VertexSet remaining = live;
    for (size_t k = 0; k < ordered.size(); ++k) {
        VertexSet part = ordered[k];
        std::sort(part.begin(), part.end());
        bool terminal = k + 1 == ordered.size();
        QuochainPart p = search.make_part(part, terminal);

        DrinfeldPoly ppoly = poly_of_subgraph(g, part);
        if (part.size() == 1) {
            p.real = PartReal{PartReal::Rule::SingletonKr, -1, nullptr};
        } else if (auto i = ledger.find_real(ppoly)) {
            p.real = PartReal{PartReal::Rule::Ledger, *i, nullptr};
            conditional = true;
        } else {
            QFGraph subg = induced_subgraph(g, part);
            Search sub_search(subg, ledger, budget);
            CertifyResult pc = sub_search.certify(full_vertex_set(subg), std::nullopt);
            if (!pc.certificate) return std::nullopt;
            p.real = PartReal{PartReal::Rule::SubChain, -1,
                              std::make_shared<QuochainCertificate>(*pc.certificate)};
            conditional = conditional || pc.certificate->conditional;
        }

        if (!terminal) {
            bool cond_step = false;
            auto hlw = hlw_step_for(g, ledger, remaining, part, &cond_step);
            if (!hlw) return std::nullopt;
            auto simp = simplicity_step_for(g, ledger, budget, remaining, part, &cond_step);
            if (!simp) return std::nullopt;
            p.hlw = *hlw;
            p.simplicity = *simp;
            conditional = conditional || cond_step;
        }
        out.parts.push_back(std::move(p));
        remaining = live_difference(remaining, part);
    }
    out.conditional = conditional;
    out.strong = true;
    for (const auto& p : out.parts) out.strong = out.strong && p.ids.size() == 1;
    return out;
}

// The composition also covers the degenerate case of parts in distinct
// components: the part-level graph only has to be a forest with one arrow per
// linked pair.
bool is_part_forest(const QFGraph& g, const Multicut& m) {
    validate_multicut(g, m);
    std::vector<int> part_of(static_cast<size_t>(g.size()), -1);
    for (size_t k = 0; k < m.size(); ++k)
        for (VertexId v : m[k]) part_of[static_cast<size_t>(v)] = static_cast<int>(k);
    std::map<std::pair<int, int>, int> link_count;
    for (const auto& [v, w] : g.arrows) {
        int p = part_of[static_cast<size_t>(v)], q = part_of[static_cast<size_t>(w)];
        if (p == q) continue;
        ++link_count[{std::min(p, q), std::max(p, q)}];
    }
    for (const auto& [pq, count] : link_count)
        if (count != 1) return false;
    // acyclic over parts: union-find
    std::vector<int> parent(m.size());
    for (size_t k = 0; k < m.size(); ++k) parent[k] = static_cast<int>(k);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    for (const auto& [pq, count] : link_count) {
        int a = find(pq.first), b = find(pq.second);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
    }
    return true;
}

// Peels valence-<=1 parts of a part forest, smallest part index first.
Multicut forest_order(const QFGraph& g, const Multicut& m) {
    std::vector<int> part_of(static_cast<size_t>(g.size()), -1);
    for (size_t k = 0; k < m.size(); ++k)
        for (VertexId v : m[k]) part_of[static_cast<size_t>(v)] = static_cast<int>(k);
    std::vector<std::set<int>> nbr(m.size());
    for (const auto& [v, w] : g.arrows) {
        int p = part_of[static_cast<size_t>(v)], q = part_of[static_cast<size_t>(w)];
        if (p == q) continue;
        nbr[static_cast<size_t>(p)].insert(q);
        nbr[static_cast<size_t>(q)].insert(p);
    }
    std::vector<char> removed(m.size(), 0);
    Multicut out;
    for (size_t step = 0; step + 1 < m.size(); ++step) {
        int pick = -1;
        for (size_t k = 0; k < m.size() && pick < 0; ++k) {
            if (removed[k]) continue;
            int deg = 0;
            for (int q : nbr[k])
                if (!removed[static_cast<size_t>(q)]) ++deg;
            if (deg <= 1) pick = static_cast<int>(k);
        }
        if (pick < 0) throw std::logic_error("forest peel failed");
        removed[static_cast<size_t>(pick)] = 1;
        out.push_back(m[static_cast<size_t>(pick)]);
    }
    for (size_t k = 0; k < m.size(); ++k)
        if (!removed[k]) out.push_back(m[k]);
    return out;
}

std::optional<QuochainCertificate> kkop_tree_impl(const QFGraph& g, const Multicut& m,
                                                  const AssumptionLedger& ledger,
                                                  const RealityBudget& budget) {
    if (!is_part_forest(g, m)) return std::nullopt;
    Multicut ordered = forest_order(g, m);
    KkopOptions opts = kkop_options(ledger, budget);
    for (size_t a = 0; a < ordered.size(); ++a)
        for (size_t b = a + 1; b < ordered.size(); ++b) {
            KkopBound kb =
                bound(poly_of_subgraph(g, ordered[a]), poly_of_subgraph(g, ordered[b]), opts);
            if (!kb.bounded() || kb.upper > 1) return std::nullopt;
        }
    return tree_chain(g, ordered, ledger, budget);
}

}  // namespace

// ---- public operations --------------------------------------------------------

std::optional<RestrictionWitness> refute_hlw_by_restriction(const QFGraph& g, const VertexSet& h) {
    VertexSet hc = complement(g, h);
    if (h.empty() || hc.empty()) return std::nullopt;
    DrinfeldPoly ph = poly_of_subgraph(g, h);
    DrinfeldPoly pc = poly_of_subgraph(g, hc);

    // a reducible wrong-way string pair, each string detached from the rest of
    // its own side, survives in the ordered product (X, Y)
    auto fires = [](const CartanContext& sctx, const PseudoFactorization& X,
                    const PseudoFactorization& Y, std::string* what) {
        for (size_t xi = 0; xi < X.factors.size(); ++xi) {
            bool x_detached = true;
            for (size_t xo = 0; xo < X.factors.size() && x_detached; ++xo)
                if (xo != xi && arrow_between(sctx, X.factors[xi], X.factors[xo]) != ArrowDir::None)
                    x_detached = false;
            if (!x_detached) continue;
            for (size_t yi = 0; yi < Y.factors.size(); ++yi) {
                if (arrow_between(sctx, X.factors[xi], Y.factors[yi]) != ArrowDir::Backward)
                    continue;
                bool y_detached = true;
                for (size_t yo = 0; yo < Y.factors.size() && y_detached; ++yo)
                    if (yo != yi &&
                        arrow_between(sctx, Y.factors[yi], Y.factors[yo]) != ArrowDir::None)
                        y_detached = false;
                if (!y_detached) continue;
                if (what)
                    *what = vertex_label(X.factors[xi]) + " (x) " + vertex_label(Y.factors[yi]);
                return true;
            }
        }
        return false;
    };

    const int n = g.ctx.rank;
    for (int len = 1; len <= n; ++len) {
        for (int lo = 1; lo + len - 1 <= n; ++lo) {
            Subdiagram J{lo, lo + len - 1};
            Restriction ra = restrict(ph, J);
            Restriction rb = restrict(pc, J);
            if (ra.poly.is_identity() || rb.poly.is_identity()) continue;
            PseudoFactorization A = q_factorize(ra.poly);
            PseudoFactorization B = q_factorize(rb.poly);
            CartanContext sctx = ra.poly.ctx;
            std::string w1, w2;
            if (fires(sctx, A, B, &w1) && fires(sctx, B, A, &w2)) {
                std::ostringstream os;
                os << "restriction to [" << J.lo << "," << J.hi
                   << "] leaves a reducible non-highest-weight pair in both orders: " << w1
                   << " and " << w2;
                return RestrictionWitness{J, os.str()};
            }
        }
    }
    return std::nullopt;
}

RdsCheck check_rds(const QFGraph& g, const VertexSet& h, const AssumptionLedger& ledger,
                   const RealityBudget& budget) {
    VertexSet sorted = h;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != h.size()) throw std::invalid_argument("subgraph has repeated vertices");
    for (VertexId v : sorted) g.require_vertex(v);
    if (sorted.empty()) throw std::invalid_argument("empty subgraph");
    VertexSet hc = complement(g, sorted);

    RdsCheck out;
    if (hc.empty()) {
        if (sorted.size() == 1) {
            out.outcome = RdsOutcome::Certified;
            out.part_real = PartReal{PartReal::Rule::SingletonKr, -1, nullptr};
            out.hlw = HlwStep{HlwStep::Rule::Top, -1};
            out.simplicity = SimplicityStep{SimplicityStep::Rule::Dissociate, -1, nullptr};
            return out;
        }
        throw std::invalid_argument("subgraph must be proper, or a singleton whole graph");
    }

    VertexSet live = full_vertex_set(g);
    bool conditional = false;
    auto hlw = hlw_step_for(g, ledger, live, sorted, &conditional);
    if (!hlw) {
        if (auto w = refute_hlw_by_restriction(g, sorted)) {
            out.outcome = RdsOutcome::Refuted;
            out.witness = w->window;
            out.explanation = w->explanation;
            return out;
        }
        out.outcome = RdsOutcome::Inconclusive;
        out.explanation = "no justification for the highest-weight condition";
        return out;
    }

    Search search(g, ledger, budget);
    CertifyResult part_cert = search.certify(sorted, std::nullopt);
    CertifyResult comp_cert = search.certify(hc, std::nullopt);
    if (!part_cert.certificate || !comp_cert.certificate) {
        out.outcome = RdsOutcome::Inconclusive;
        out.explanation = "real cut not established";
        return out;
    }
    conditional = conditional || part_cert.certificate->conditional ||
                  comp_cert.certificate->conditional;

    auto simp = simplicity_step_for(g, ledger, budget, live, sorted, &conditional);
    if (!simp) {
        out.outcome = RdsOutcome::Inconclusive;
        out.explanation = "no simplicity rule applies";
        return out;
    }

    out.outcome = RdsOutcome::Certified;
    out.conditional = conditional;
    out.hlw = *hlw;
    out.simplicity = *simp;
    embed_assumptions(*part_cert.certificate, ledger);
    embed_assumptions(*comp_cert.certificate, ledger);
    if (sorted.size() == 1)
        out.part_real = PartReal{PartReal::Rule::SingletonKr, -1, nullptr};
    else
        out.part_real = PartReal{PartReal::Rule::SubChain, -1,
                                 std::make_shared<QuochainCertificate>(*part_cert.certificate)};
    out.complement_real = PartReal{PartReal::Rule::SubChain, -1,
                                   std::make_shared<QuochainCertificate>(*comp_cert.certificate)};
    return out;
}

CertifyResult certify_real(const QFGraph& g, const AssumptionLedger& ledger,
                           const RealityBudget& budget, std::optional<VertexId> endpoint) {
    if (endpoint) g.require_vertex(*endpoint);
    Search search(g, ledger, budget);
    CertifyResult r = search.certify(full_vertex_set(g), endpoint);
    if (r.certificate) embed_assumptions(*r.certificate, ledger);
    return r;
}

CertifyResult certify_real(const DrinfeldPoly& pi, const AssumptionLedger& ledger,
                           const RealityBudget& budget) {
    return certify_real(build_graph(q_factorize(pi)), ledger, budget);
}

std::optional<QuochainCertificate> gtree_compose(
    const QFGraph& g, const Multicut& m,
    const std::vector<std::optional<VertexId>>& endpoint_requests, const AssumptionLedger& ledger,
    const RealityBudget& budget) {
    if (!is_gtree(g, m)) throw std::invalid_argument("multicut is not a tree of parts");
    Multicut ordered = leaf_order(g, m);
    for (auto& part : ordered) std::sort(part.begin(), part.end());

    auto requested_for = [&](const VertexSet& part) -> std::optional<VertexId> {
        for (size_t i = 0; i < m.size(); ++i) {
            VertexSet mi = m[i];
            std::sort(mi.begin(), mi.end());
            if (mi == part) return i < endpoint_requests.size() ? endpoint_requests[i]
                                                                : std::nullopt;
        }
        return std::nullopt;
    };

    // required chain endpoints: the unique linking vertex for every part but
    // the last; any cut-incident vertex for the last
    std::vector<std::optional<VertexId>> ends(ordered.size());
    VertexSet remaining = full_vertex_set(g);
    auto all_cut = cut_set(g, m);
    for (size_t k = 0; k < ordered.size(); ++k) {
        const VertexSet& part = ordered[k];
        std::optional<VertexId> req = requested_for(part);
        if (k + 1 < ordered.size()) {
            auto links = live_linking_arrows(g, remaining, part);
            if (links.size() != 1) return std::nullopt;
            VertexId link = std::binary_search(part.begin(), part.end(), links[0].first)
                                ? links[0].first
                                : links[0].second;
            if (req && *req != link) return std::nullopt;
            ends[k] = link;
        } else if (req) {
            bool incident = false;
            for (const auto& a : all_cut)
                if (a.first == *req || a.second == *req) incident = true;
            if (!incident && ordered.size() > 1) return std::nullopt;
            ends[k] = req;
        } else if (!all_cut.empty()) {
            VertexId pick = -1;
            for (const auto& a : all_cut)
                for (VertexId v : {a.first, a.second})
                    if (std::binary_search(part.begin(), part.end(), v) && (pick < 0 || v < pick))
                        pick = v;
            if (pick >= 0) ends[k] = pick;
        }
        remaining = live_difference(remaining, part);
    }

    // build the per-part singleton chains, then splice them into one global
    // chain whose steps are re-justified in the ambient remaining graph
    std::vector<VertexSet> steps;
    for (size_t k = 0; k < ordered.size(); ++k) {
        const VertexSet& part = ordered[k];
        if (part.size() == 1) {
            steps.push_back(part);
            continue;
        }
        QFGraph subg = induced_subgraph(g, part);
        std::optional<VertexId> sub_end;
        if (ends[k]) {
            auto it = std::find(part.begin(), part.end(), *ends[k]);
            if (it == part.end()) return std::nullopt;
            sub_end = static_cast<VertexId>(it - part.begin());
        }
        CertifyResult pc = certify_real(subg, ledger, budget, sub_end);
        if (!pc.certificate || !pc.certificate->strong) return std::nullopt;
        for (const auto& sp : pc.certificate->parts) {
            VertexSet amb;
            for (VertexId local : sp.ids) amb.push_back(part[static_cast<size_t>(local)]);
            std::sort(amb.begin(), amb.end());
            steps.push_back(std::move(amb));
        }
    }

    QuochainCertificate flat;
    Search search(g, ledger, budget);
    VertexSet live = full_vertex_set(g);
    flat = search.shell(live);
    for (size_t s = 0; s < steps.size(); ++s) {
        bool terminal = s + 1 == steps.size();
        QuochainPart p = search.make_part(steps[s], terminal);
        p.real = PartReal{PartReal::Rule::SingletonKr, -1, nullptr};
        if (!terminal) {
            bool cond = false;
            auto hlw = hlw_step_for(g, ledger, live, steps[s], &cond);
            if (!hlw) return std::nullopt;
            auto simp = simplicity_step_for(g, ledger, budget, live, steps[s], &cond);
            if (!simp) return std::nullopt;
            p.hlw = *hlw;
            p.simplicity = *simp;
            flat.conditional = flat.conditional || cond;
        }
        flat.parts.push_back(std::move(p));
        live = live_difference(live, steps[s]);
    }
    flat.strong = true;
    for (const auto& p : flat.parts) flat.strong = flat.strong && p.ids.size() == 1;
    embed_assumptions(flat, ledger);
    return flat;
}

std::optional<QuochainCertificate> kkop_tree_compose(const QFGraph& g, const Multicut& m,
                                                     const AssumptionLedger& ledger,
                                                     const RealityBudget& budget) {
    if (!is_part_forest(g, m)) throw std::invalid_argument("multicut is not a forest of parts");
    auto cert = kkop_tree_impl(g, m, ledger, budget);
    if (cert) embed_assumptions(*cert, ledger);
    return cert;
}

// ---- certificate replay --------------------------------------------------------

namespace {

bool fail(std::string* error, const std::string& message) {
    if (error) *error = message;
    return false;
}

bool validate_chain(const QuochainCertificate& cert, std::string* error);

bool validate_part_real(const QFGraph& g, const QuochainCertificate& cert,
                        const QuochainPart& part, std::string* error) {
    DrinfeldPoly ppoly = poly_of_subgraph(g, part.ids);
    switch (part.real.rule) {
        case PartReal::Rule::SingletonKr:
            if (part.ids.size() != 1) return fail(error, "singleton rule on a non-singleton part");
            return true;
        case PartReal::Rule::Ledger: {
            if (part.real.fact_index < 0 ||
                part.real.fact_index >= static_cast<int>(cert.assumptions.size()))
                return fail(error, "missing reality assumption");
            const LedgerFact& f = cert.assumptions[static_cast<size_t>(part.real.fact_index)];
            if (f.kind != LedgerFact::Kind::Real || !equal_up_to_shift(f.left, ppoly))
                return fail(error, "reality assumption does not match the part");
            return true;
        }
        case PartReal::Rule::SubChain: {
            if (!part.real.subchain) return fail(error, "missing sub-certificate");
            std::vector<KRFactor> expect;
            for (VertexId v : part.ids) expect.push_back(g.vertices[static_cast<size_t>(v)]);
            std::vector<KRFactor> got = part.real.subchain->graph_vertices;
            std::sort(expect.begin(), expect.end());
            std::sort(got.begin(), got.end());
            if (expect != got) return fail(error, "sub-certificate covers a different part");
            return validate_chain(*part.real.subchain, error);
        }
    }
    return fail(error, "bad part-reality rule");
}

bool validate_chain(const QuochainCertificate& cert, std::string* error) {
    QFGraph g = build_graph(cert.ctx, PseudoFactorization{cert.ctx, cert.graph_vertices});
    AssumptionLedger assumed{cert.assumptions};

    VertexSet remaining = full_vertex_set(g);
    if (cert.parts.empty())
        return remaining.empty() ? true : fail(error, "empty chain on a nonempty graph");

    for (size_t k = 0; k < cert.parts.size(); ++k) {
        const QuochainPart& part = cert.parts[k];
        bool terminal = k + 1 == cert.parts.size();
        if (part.terminal != terminal) return fail(error, "terminal flag out of place");
        if (part.ids.empty()) return fail(error, "empty part");
        if (!is_subset(part.ids, remaining)) return fail(error, "part not inside remaining graph");
        if (part.factors.size() != part.ids.size())
            return fail(error, "part factors disagree with the graph");
        for (size_t i = 0; i < part.ids.size(); ++i)
            if (g.vertices[static_cast<size_t>(part.ids[i])] != part.factors[i])
                return fail(error, "part factors disagree with the graph");

        if (!validate_part_real(g, cert, part, error)) return false;

        if (!terminal) {
            VertexSet rest = live_difference(remaining, part.ids);
            DrinfeldPoly ph = poly_of_subgraph(g, part.ids);
            DrinfeldPoly pc = poly_of_subgraph(g, rest);
            Extremality e = live_extremality(g, remaining, part.ids);
            switch (part.hlw.rule) {
                case HlwStep::Rule::Top:
                    if (e != Extremality::Top) return fail(error, "claimed top subgraph is not");
                    break;
                case HlwStep::Rule::Bottom:
                    if (e == Extremality::No)
                        return fail(error, "claimed bottom subgraph is not extremal");
                    break;
                case HlwStep::Rule::Ledger: {
                    if (part.hlw.fact_index < 0 ||
                        part.hlw.fact_index >= static_cast<int>(cert.assumptions.size()))
                        return fail(error, "missing highest-weight assumption");
                    const LedgerFact& f =
                        cert.assumptions[static_cast<size_t>(part.hlw.fact_index)];
                    AssumptionLedger one{{f}};
                    if (f.kind != LedgerFact::Kind::Hlw ||
                        (!one.find_hlw(ph, pc) && !one.find_hlw(pc, ph)))
                        return fail(error, "highest-weight assumption does not match the cut");
                    break;
                }
                case HlwStep::Rule::LedgerKkopCut: {
                    if (part.hlw.fact_index < 0 ||
                        part.hlw.fact_index >= static_cast<int>(cert.assumptions.size()))
                        return fail(error, "missing invariant-bound assumption");
                    const LedgerFact& f =
                        cert.assumptions[static_cast<size_t>(part.hlw.fact_index)];
                    AssumptionLedger one{{f}};
                    if (f.kind != LedgerFact::Kind::KkopLe || !one.find_kkop_le(ph, pc, 1))
                        return fail(error, "invariant-bound assumption does not match the cut");
                    break;
                }
            }
            switch (part.simplicity.rule) {
                case SimplicityStep::Rule::Dissociate:
                    if (!live_linking_arrows(g, remaining, part.ids).empty())
                        return fail(error, "claimed dissociate part has linking arrows");
                    break;
                case SimplicityStep::Rule::ValenceLeOne:
                    if (part.ids.size() != 1 ||
                        live_adjacency(g, remaining, part.ids[0]).size() > 2)
                        return fail(error, "valence-1 rule does not apply");
                    break;
                case SimplicityStep::Rule::SnakeAdjacency: {
                    if (part.ids.size() != 1)
                        return fail(error, "adjacency rule on a non-singleton part");
                    VertexSet adj = live_adjacency(g, remaining, part.ids[0]);
                    if (!is_prime_snake(poly_of_subgraph(g, adj)))
                        return fail(error, "adjacency subgraph is not a prime snake");
                    break;
                }
                case SimplicityStep::Rule::KkopLeOne: {
                    if (!part.simplicity.kkop) return fail(error, "missing invariant trace");
                    const KkopTrace& t = *part.simplicity.kkop;
                    bool orient_ok =
                        (t.left.factors == ph.factors && t.right.factors == pc.factors) ||
                        (t.left.factors == pc.factors && t.right.factors == ph.factors);
                    if (!orient_ok) return fail(error, "invariant trace covers a different pair");
                    if (t.upper > 1) return fail(error, "invariant trace bound exceeds 1");
                    if (!validate_trace(t, &assumed))
                        return fail(error, "invariant trace replay failed");
                    break;
                }
                case SimplicityStep::Rule::Ledger: {
                    if (part.simplicity.fact_index < 0 ||
                        part.simplicity.fact_index >= static_cast<int>(cert.assumptions.size()))
                        return fail(error, "missing simplicity assumption");
                    const LedgerFact& f =
                        cert.assumptions[static_cast<size_t>(part.simplicity.fact_index)];
                    AssumptionLedger one{{f}};
                    if (f.kind != LedgerFact::Kind::Simple ||
                        !one.find_simple(poly_of_subgraph(g, remaining), ph))
                        return fail(error, "simplicity assumption does not match");
                    break;
                }
            }
        } else if (part.ids != remaining) {
            return fail(error, "terminal part does not close the chain");
        }
        remaining = live_difference(remaining, part.ids);
    }
    if (!remaining.empty()) return fail(error, "chain does not exhaust the graph");
    return true;
}

}  // namespace

namespace {

bool cites_assumptions(const QuochainCertificate& cert) {
    for (const auto& p : cert.parts) {
        if (p.real.fact_index >= 0 || p.hlw.fact_index >= 0 || p.simplicity.fact_index >= 0)
            return true;
        if (p.real.rule == PartReal::Rule::Ledger || p.hlw.rule == HlwStep::Rule::Ledger ||
            p.hlw.rule == HlwStep::Rule::LedgerKkopCut ||
            p.simplicity.rule == SimplicityStep::Rule::Ledger)
            return true;
        if (p.simplicity.kkop) {
            std::vector<int> used;
            gather_trace_facts(*p.simplicity.kkop, used);
            if (!used.empty()) return true;
        }
        if (p.real.subchain && cites_assumptions(*p.real.subchain)) return true;
    }
    return false;
}

}  // namespace

bool validate_certificate(const QuochainCertificate& cert, std::string* error) {
    bool all_singleton = true;
    for (const auto& p : cert.parts) all_singleton = all_singleton && p.ids.size() == 1;
    if (cert.strong && !all_singleton)
        return fail(error, "strong flag on a chain with non-singleton parts");
    if (!cert.conditional && cites_assumptions(cert))
        return fail(error, "chain cites assumptions but is not flagged conditional");
    return validate_chain(cert, error);
}

// ---- survey ---------------------------------------------------------------------

SurveyReport survey(const SurveyParams& params) {
    CartanContext ctx = make_type_a(params.rank);
    if (params.node_lo < 1 || params.node_hi > params.rank || params.node_lo > params.node_hi)
        throw std::invalid_argument("node window out of range");
    if (params.center_lo > params.center_hi) throw std::invalid_argument("empty center window");
    if (params.max_degree < 1) throw std::invalid_argument("max degree must be positive");

    std::vector<FundamentalWeight> alphabet;
    for (int i = params.node_lo; i <= params.node_hi; ++i)
        for (int a = params.center_lo; a <= params.center_hi; ++a) alphabet.push_back({i, a});

    long double total = 0;
    {
        long double c = 1;
        for (int k = 1; k <= params.max_degree; ++k) {
            c = c * (static_cast<long double>(alphabet.size()) + k - 1) / k;
            total += c;
            if (total > static_cast<long double>(params.enum_budget) * 4) break;
        }
    }
    if (total > static_cast<long double>(params.enum_budget))
        throw std::invalid_argument(
            "window too large for the enumeration budget; shrink the window or raise the budget");

    SurveyReport report;
    std::set<std::string> seen;

    std::vector<size_t> pick;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (!pick.empty()) {
            ++report.enumerated;
            std::vector<FundamentalWeight> fs;
            for (size_t idx : pick) fs.push_back(alphabet[idx]);
            DrinfeldPoly pi = make_poly(ctx, std::move(fs));
            std::string key = canonical_key(pi);
            std::string dual_key = canonical_key(dualize(pi, DualityKind::KappaStar));
            std::string canon = std::min(key, dual_key);
            if (key == canon && seen.insert(canon).second) {
                QFGraph g = build_graph(q_factorize(pi));
                if (is_connected(g) && g.size() >= 1) {
                    ++report.connected;
                    CertifyResult r = certify_real(g, AssumptionLedger{}, params.budget);
                    SurveyEntry e;
                    e.key = key;
                    e.status = r.index.status;
                    e.vertex_count = g.size();
                    ++report.status_counts[status_name(e.status)];
                    if (e.status == RealityIndex::Status::Inconclusive && g.size() >= 2 &&
                        g.size() <= params.candidate_vertex_limit) {
                        bool any_rds = false;
                        for (unsigned mask = 1; mask + 1 < (1u << g.size()) && !any_rds; ++mask) {
                            VertexSet hset;
                            for (int v = 0; v < g.size(); ++v)
                                if (mask & (1u << v)) hset.push_back(v);
                            RdsCheck rc = check_rds(g, hset, AssumptionLedger{}, params.budget);
                            any_rds = rc.outcome == RdsOutcome::Certified;
                        }
                        e.basic_candidate = !any_rds;
                        if (e.basic_candidate) report.candidates.push_back(e);
                    }
                    report.entries.push_back(e);
                }
            }
        }
        if (pick.size() == static_cast<size_t>(params.max_degree)) return;
        for (size_t i = start; i < alphabet.size(); ++i) {
            pick.push_back(i);
            rec(i);
            pick.pop_back();
        }
    };
    rec(0);
    return report;
}

}  // namespace qfg
