#include "qfg/primality.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace qfg {

bool is_prime_snake(const DrinfeldPoly& pi) {
    if (pi.is_identity()) return false;
    return is_totally_ordered(build_graph(fundamental_factorization(pi)));
}

std::vector<DrinfeldPoly> dissociate_factorization(const QFGraph& g) {
    std::vector<DrinfeldPoly> out;
    for (const auto& comp : connected_components(g)) out.push_back(poly_of_subgraph(g, comp));
    return out;
}

namespace {

void require_actual_q_factorization(const QFGraph& g) {
    PseudoFactorization f{g.ctx, g.vertices};
    if (!is_q_factorization(f))
        throw std::invalid_argument("vertex factors are not an actual q-factorization");
}

// Minimal interval containing {i, j} on which the exponent m becomes a
// reducibility value for widths (r, s); grows outward one node at a time,
// expanding first toward the side with the smaller boundary margin.
std::optional<Subdiagram> minimal_membership_interval(const CartanContext& ctx, int i, int j,
                                                      int r, int s, int m) {
    int lo = std::min(i, j), hi = std::max(i, j);
    Subdiagram J{lo, hi};
    while (true) {
        if (set_contains(red_set_restricted(ctx, J, i, j, r, s), m)) return J;
        bool can_left = J.lo > 1, can_right = J.hi < ctx.rank;
        if (!can_left && !can_right) return std::nullopt;
        int margin_left = lo - J.lo, margin_right = J.hi - hi;
        if (can_left && (!can_right || margin_left <= margin_right))
            --J.lo;
        else
            ++J.hi;
    }
}

}  // namespace

PrimalityVerdict three_vertex_primality(const QFGraph& g) {
    require_actual_q_factorization(g);
    if (g.size() != 3) throw std::invalid_argument("criterion needs exactly 3 vertices");

    // locate the alternating-line shape: middle adjacent to both ends, ends
    // mutually non-adjacent, middle a source or a sink
    int middle = -1;
    for (VertexId v = 0; v < 3; ++v)
        if (classify_vertex(g, v).valence == 2) middle = v;
    if (middle < 0) throw std::invalid_argument("graph is not an alternating 3-line");
    VertexId e1 = -1, e2 = -1;
    for (VertexId v = 0; v < 3; ++v) {
        if (v == middle) continue;
        (e1 < 0 ? e1 : e2) = v;
    }
    auto cm = classify_vertex(g, middle);
    if (!cm.is_source && !cm.is_sink)
        throw std::invalid_argument("middle vertex is neither a source nor a sink");
    if (classify_vertex(g, e1).valence != 1 || classify_vertex(g, e2).valence != 1)
        throw std::invalid_argument("end vertices must be adjacent to the middle only");

    const KRFactor mid = g.vertices[static_cast<size_t>(middle)];
    const KRFactor ends[2] = {g.vertices[static_cast<size_t>(e1)],
                              g.vertices[static_cast<size_t>(e2)]};
    int exps[2];
    for (int t = 0; t < 2; ++t) {
        VertexId e = t == 0 ? e1 : e2;
        exps[t] = cm.is_source ? g.arrow_exponent(middle, e) : g.arrow_exponent(e, middle);
    }

    const CartanContext& ctx = g.ctx;
    for (int j = 0; j < 2; ++j) {
        int jp = 1 - j;
        auto Ij = minimal_membership_interval(ctx, mid.node, ends[j].node, mid.width,
                                              ends[j].width, exps[j]);
        if (!Ij) continue;
        if (!Ij->contains(ends[jp].node)) continue;
        if (!set_contains(
                red_set_restricted(ctx, *Ij, mid.node, ends[jp].node, mid.width, ends[jp].width),
                exps[jp]))
            continue;
        int w0_j = Ij->lo + Ij->hi - ends[j].node;
        if (!set_contains(red_set_restricted(ctx, *Ij, w0_j, ends[jp].node, ends[j].width,
                                             ends[jp].width),
                          exps[jp] - exps[j] + Ij->dual_coxeter()))
            continue;
        if (!(exps[j] + ends[j].width <=
              exps[jp] + ends[jp].width + distance(ctx, ends[0].node, ends[1].node)))
            continue;
        PrimalityVerdict v;
        v.kind = PrimalityVerdict::Kind::Factors;
        v.factor = poly_of_factor(ctx, ends[j]);
        v.cofactor = multiply(poly_of_factor(ctx, mid), poly_of_factor(ctx, ends[jp]));
        v.justification = "3-line splitting at end vertex " + vertex_label(ends[j]);
        return v;
    }
    PrimalityVerdict v;
    v.kind = PrimalityVerdict::Kind::Prime;
    v.justification = "no end vertex satisfies the 3-line splitting conditions";
    return v;
}

PrimalityVerdict totally_ordered_prime(const QFGraph& g) {
    require_actual_q_factorization(g);
    PrimalityVerdict v;
    if (g.size() > 0 && is_totally_ordered(g)) {
        v.kind = PrimalityVerdict::Kind::Prime;
        v.justification = "totally ordered q-factorization graph";
    } else {
        v.kind = PrimalityVerdict::Kind::Unknown;
        v.justification = "graph is not totally ordered";
    }
    return v;
}

PrimalityVerdict decide_primality(const QFGraph& g) {
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        PrimalityVerdict v;
        v.kind = PrimalityVerdict::Kind::Factors;
        v.factor = poly_of_subgraph(g, comps[0]);
        VertexSet rest;
        for (size_t k = 1; k < comps.size(); ++k)
            rest.insert(rest.end(), comps[k].begin(), comps[k].end());
        std::sort(rest.begin(), rest.end());
        v.cofactor = poly_of_subgraph(g, rest);
        v.justification = "dissociate components split the module";
        return v;
    }
    if (auto v = totally_ordered_prime(g); v.kind == PrimalityVerdict::Kind::Prime) return v;
    if (g.size() == 3) {
        try {
            return three_vertex_primality(g);
        } catch (const std::invalid_argument&) {
            // falls through to Unknown when the shape does not apply
        }
    }
    PrimalityVerdict v;
    v.kind = PrimalityVerdict::Kind::Unknown;
    v.justification = "no applicable primality criterion";
    return v;
}

}  // namespace qfg
