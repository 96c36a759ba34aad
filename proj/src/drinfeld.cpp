#include "qfg/drinfeld.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qfg/redsets.hpp"

namespace qfg {

std::vector<FundamentalWeight> expand(const KRFactor& f) {
    if (f.width < 1) throw std::invalid_argument("KR factor width must be positive");
    std::vector<FundamentalWeight> out;
    out.reserve(static_cast<size_t>(f.width));
    for (int p = 0; p < f.width; ++p) out.push_back({f.node, f.center + f.width - 1 - 2 * p});
    std::sort(out.begin(), out.end());
    return out;
}

DrinfeldPoly make_poly(const CartanContext& ctx, std::vector<FundamentalWeight> factors) {
    for (const auto& w : factors) ctx.require_node(w.node);
    std::sort(factors.begin(), factors.end());
    return DrinfeldPoly{ctx, std::move(factors)};
}

DrinfeldPoly poly_of(const PseudoFactorization& f) {
    std::vector<FundamentalWeight> all;
    for (const auto& kr : f.factors) {
        auto part = expand(kr);
        all.insert(all.end(), part.begin(), part.end());
    }
    return make_poly(f.ctx, std::move(all));
}

DrinfeldPoly poly_of_factor(const CartanContext& ctx, const KRFactor& f) {
    return make_poly(ctx, expand(f));
}

DrinfeldPoly multiply(const DrinfeldPoly& a, const DrinfeldPoly& b) {
    if (a.ctx != b.ctx) throw std::invalid_argument("polynomials over different diagrams");
    std::vector<FundamentalWeight> all = a.factors;
    all.insert(all.end(), b.factors.begin(), b.factors.end());
    return make_poly(a.ctx, std::move(all));
}

DrinfeldPoly divide(const DrinfeldPoly& a, const DrinfeldPoly& b) {
    if (a.ctx != b.ctx) throw std::invalid_argument("polynomials over different diagrams");
    std::vector<FundamentalWeight> rest = a.factors;
    for (const auto& w : b.factors) {
        auto it = std::find(rest.begin(), rest.end(), w);
        if (it == rest.end()) throw std::invalid_argument("divisor does not divide polynomial");
        rest.erase(it);
    }
    return DrinfeldPoly{a.ctx, std::move(rest)};
}

PseudoFactorization fundamental_factorization(const DrinfeldPoly& pi) {
    PseudoFactorization out{pi.ctx, {}};
    out.factors.reserve(pi.factors.size());
    for (const auto& w : pi.factors) out.factors.push_back({w.node, w.center, 1});
    return out;
}

namespace {

// Overlap count p when two strings violate general position, -1 otherwise.
int violation_overlap(const KRFactor& a, const KRFactor& b) {
    if (a.node != b.node) return -1;
    int m = a.center - b.center;
    if (m < 0) m = -m;
    int lo = std::min(a.width, b.width);
    // m = r+s-2p with 0 <= p < min(r,s)
    int twice_p = a.width + b.width - m;
    if (twice_p < 0 || twice_p % 2 != 0) return -1;
    int p = twice_p / 2;
    return p < lo ? p : -1;
}

// Union and intersection of two overlapping-or-adjacent strings on one node.
std::pair<KRFactor, KRFactor> merge_strings(const KRFactor& a, const KRFactor& b, int p) {
    int width_union = a.width + b.width - p;
    // Fundamental exponents of a string span [center-width+1, center+width-1].
    int top = std::max(a.center + a.width - 1, b.center + b.width - 1);
    int bot = std::min(a.center - a.width + 1, b.center - b.width + 1);
    KRFactor u{a.node, (top + bot) / 2, width_union};
    KRFactor inter{a.node, 0, p};
    if (p > 0) {
        int itop = std::min(a.center + a.width - 1, b.center + b.width - 1);
        int ibot = std::max(a.center - a.width + 1, b.center - b.width + 1);
        inter.center = (itop + ibot) / 2;
    }
    return {u, inter};
}

}  // namespace

PseudoFactorization q_factorize(const DrinfeldPoly& pi) {
    PseudoFactorization f = fundamental_factorization(pi);
    auto& fs = f.factors;
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(fs.begin(), fs.end());
        for (size_t x = 0; x < fs.size() && !changed; ++x) {
            for (size_t y = x + 1; y < fs.size() && !changed; ++y) {
                int p = violation_overlap(fs[x], fs[y]);
                if (p < 0) continue;
                auto [u, inter] = merge_strings(fs[x], fs[y], p);
                fs.erase(fs.begin() + static_cast<long>(y));
                fs.erase(fs.begin() + static_cast<long>(x));
                fs.push_back(u);
                if (p > 0) fs.push_back(inter);
                changed = true;
            }
        }
    }
    std::sort(fs.begin(), fs.end());
    return f;
}

bool is_q_factorization(const PseudoFactorization& f) {
    for (size_t x = 0; x < f.factors.size(); ++x)
        for (size_t y = x + 1; y < f.factors.size(); ++y)
            if (violation_overlap(f.factors[x], f.factors[y]) >= 0) return false;
    return true;
}

Restriction restrict(const DrinfeldPoly& pi, const Subdiagram& J) {
    pi.ctx.require_node(J.lo);
    pi.ctx.require_node(J.hi);
    int offset = J.lo - 1;
    std::vector<FundamentalWeight> kept;
    for (const auto& w : pi.factors)
        if (J.contains(w.node)) kept.push_back({w.node - offset, w.center});
    return Restriction{make_poly(make_type_a(J.size()), std::move(kept)), J, offset};
}

DrinfeldPoly dualize(const DrinfeldPoly& pi, DualityKind kind) {
    const int h = pi.ctx.dual_coxeter();
    std::vector<FundamentalWeight> out;
    out.reserve(pi.factors.size());
    for (const auto& w : pi.factors) {
        switch (kind) {
            case DualityKind::Star:
                out.push_back({pi.ctx.dual_node(w.node), w.center - h});
                break;
            case DualityKind::Costar:
                out.push_back({pi.ctx.dual_node(w.node), w.center + h});
                break;
            case DualityKind::Kappa:
                // composite of center negation and star duality
                out.push_back({pi.ctx.dual_node(w.node), -w.center - h});
                break;
            case DualityKind::KappaStar:
                out.push_back({w.node, -w.center});
                break;
        }
    }
    return make_poly(pi.ctx, std::move(out));
}

DrinfeldPoly translate(const DrinfeldPoly& pi, int shift) {
    std::vector<FundamentalWeight> out = pi.factors;
    for (auto& w : out) w.center += shift;
    return DrinfeldPoly{pi.ctx, std::move(out)};
}

std::string canonical_key(const DrinfeldPoly& pi) {
    int shift = 0;
    if (!pi.factors.empty()) {
        int mn = pi.factors.front().center;
        for (const auto& w : pi.factors) mn = std::min(mn, w.center);
        shift = -mn;
    }
    std::ostringstream os;
    os << 'A' << pi.ctx.rank << ';';
    for (const auto& w : pi.factors) os << ' ' << w.node << ':' << (w.center + shift);
    return os.str();
}

bool equal_up_to_shift(const DrinfeldPoly& a, const DrinfeldPoly& b) {
    if (a.ctx != b.ctx || a.factors.size() != b.factors.size()) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace qfg
