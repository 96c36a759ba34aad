#include "qfg/redsets.hpp"

#include <algorithm>

namespace qfg {

bool set_contains(const ReducibilitySet& s, int m) {
    return std::binary_search(s.begin(), s.end(), m);
}

ReducibilitySet sl2_set(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("string widths must be positive");
    ReducibilitySet out;
    int lo = std::min(r, s);
    for (int p = lo - 1; p >= 0; --p) out.push_back(r + s - 2 * p);
    return out;
}

namespace {

ReducibilitySet red_set_in(const Subdiagram& ambient, int i, int j, int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("string widths must be positive");
    Subdiagram span{std::min(i, j), std::max(i, j)};
    int d = span.hi - span.lo;
    int bd = boundary_distance_within(ambient, span);
    ReducibilitySet out;
    for (int p = std::min(r, s) - 1; p >= -bd; --p) out.push_back(r + s + d - 2 * p);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ReducibilitySet red_set(const CartanContext& ctx, int i, int j, int r, int s) {
    ctx.require_node(i);
    ctx.require_node(j);
    return red_set_in(full_diagram(ctx), i, j, r, s);
}

ReducibilitySet red_set_restricted(const CartanContext& ctx, const Subdiagram& J, int i, int j,
                                   int r, int s) {
    ctx.require_node(J.lo);
    ctx.require_node(J.hi);
    if (!J.contains(i) || !J.contains(j))
        throw std::invalid_argument("node outside the restricting subdiagram");
    return red_set_in(J, i, j, r, s);
}

ArrowDir arrow_between(const CartanContext& ctx, const KRFactor& v, const KRFactor& w) {
    int m = v.center - w.center;
    if (m == 0) return ArrowDir::None;
    const ReducibilitySet set = red_set(ctx, v.node, w.node, v.width, w.width);
    if (!set_contains(set, m > 0 ? m : -m)) return ArrowDir::None;
    return m > 0 ? ArrowDir::Forward : ArrowDir::Backward;
}

ArrowDir arrow_between(const CartanContext& ctx, const FundamentalWeight& v,
                       const FundamentalWeight& w) {
    return arrow_between(ctx, KRFactor{v.node, v.center, 1}, KRFactor{w.node, w.center, 1});
}

}  // namespace qfg
