#include "qfg/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace qfg {

void QFGraph::require_vertex(VertexId v) const {
    if (v < 0 || v >= size()) throw std::out_of_range("unknown vertex id");
}

bool QFGraph::has_arrow(VertexId v, VertexId w) const {
    return std::binary_search(arrows.begin(), arrows.end(), Arrow{v, w});
}

int QFGraph::arrow_exponent(VertexId v, VertexId w) const {
    if (!has_arrow(v, w)) throw std::invalid_argument("no such arrow");
    return vertices[static_cast<size_t>(v)].center - vertices[static_cast<size_t>(w)].center;
}

bool QFGraph::reaches(VertexId v, VertexId w) const {
    require_vertex(v);
    require_vertex(w);
    if (v == w) return true;
    if (!reach_.empty()) return (reach_[static_cast<size_t>(v)] >> w) & 1u;
    // BFS fallback for graphs beyond the bitmask width
    std::vector<char> seen(static_cast<size_t>(size()), 0);
    std::queue<VertexId> q;
    q.push(v);
    seen[static_cast<size_t>(v)] = 1;
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (VertexId x : out_adj[static_cast<size_t>(u)]) {
            if (x == w) return true;
            if (!seen[static_cast<size_t>(x)]) {
                seen[static_cast<size_t>(x)] = 1;
                q.push(x);
            }
        }
    }
    return false;
}

namespace {

void finalize(QFGraph& g) {
    std::sort(g.arrows.begin(), g.arrows.end());
    g.out_adj.assign(g.vertices.size(), {});
    g.in_adj.assign(g.vertices.size(), {});
    for (const auto& [v, w] : g.arrows) {
        g.out_adj[static_cast<size_t>(v)].push_back(w);
        g.in_adj[static_cast<size_t>(w)].push_back(v);
    }
    g.reach_.clear();
    const int n = g.size();
    if (n <= 64) {
        // arrows strictly decrease the center, so ids sorted by descending
        // center give a topological order
        std::vector<VertexId> order(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
        std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
            return g.vertices[static_cast<size_t>(a)].center <
                   g.vertices[static_cast<size_t>(b)].center;
        });
        g.reach_.assign(static_cast<size_t>(n), 0);
        for (VertexId v : order) {
            uint64_t mask = 0;
            for (VertexId w : g.out_adj[static_cast<size_t>(v)])
                mask |= g.reach_[static_cast<size_t>(w)] | (uint64_t{1} << w);
            g.reach_[static_cast<size_t>(v)] = mask;
        }
    }
}

}  // namespace

QFGraph build_graph(const CartanContext& ctx, const PseudoFactorization& f) {
    if (f.ctx != ctx) throw std::invalid_argument("factorization over a different diagram");
    QFGraph g;
    g.ctx = ctx;
    g.vertices = f.factors;
    for (const auto& v : g.vertices) ctx.require_node(v.node);
    const int n = g.size();
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w = 0; w < n; ++w) {
            if (v == w) continue;
            if (arrow_between(ctx, g.vertices[static_cast<size_t>(v)],
                              g.vertices[static_cast<size_t>(w)]) == ArrowDir::Forward)
                g.arrows.push_back({v, w});
        }
    finalize(g);
    return g;
}

QFGraph build_graph(const PseudoFactorization& f) { return build_graph(f.ctx, f); }

VertexSet full_vertex_set(const QFGraph& g) {
    VertexSet s(static_cast<size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) s[static_cast<size_t>(i)] = i;
    return s;
}

VertexSet complement(const QFGraph& g, const VertexSet& s) {
    VertexSet out;
    size_t k = 0;
    for (VertexId v = 0; v < g.size(); ++v) {
        if (k < s.size() && s[k] == v)
            ++k;
        else
            out.push_back(v);
    }
    return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

DrinfeldPoly poly_of_subgraph(const QFGraph& g, const VertexSet& s) {
    std::vector<FundamentalWeight> all;
    for (VertexId v : s) {
        g.require_vertex(v);
        auto part = expand(g.vertices[static_cast<size_t>(v)]);
        all.insert(all.end(), part.begin(), part.end());
    }
    return make_poly(g.ctx, std::move(all));
}

DrinfeldPoly poly_of_graph(const QFGraph& g) { return poly_of_subgraph(g, full_vertex_set(g)); }

QFGraph induced_subgraph(const QFGraph& g, const VertexSet& s) {
    QFGraph out;
    out.ctx = g.ctx;
    std::vector<int> pos(static_cast<size_t>(g.size()), -1);
    for (size_t k = 0; k < s.size(); ++k) {
        g.require_vertex(s[k]);
        pos[static_cast<size_t>(s[k])] = static_cast<int>(k);
        out.vertices.push_back(g.vertices[static_cast<size_t>(s[k])]);
    }
    for (const auto& [v, w] : g.arrows) {
        int pv = pos[static_cast<size_t>(v)], pw = pos[static_cast<size_t>(w)];
        if (pv >= 0 && pw >= 0) out.arrows.push_back({pv, pw});
    }
    finalize(out);
    return out;
}

VertexClass classify_vertex(const QFGraph& g, VertexId v) {
    g.require_vertex(v);
    VertexClass c;
    c.is_source = g.in_adj[static_cast<size_t>(v)].empty();
    c.is_sink = g.out_adj[static_cast<size_t>(v)].empty();
    VertexSet adj;
    adj.push_back(v);
    for (VertexId w : g.out_adj[static_cast<size_t>(v)]) adj.push_back(w);
    for (VertexId w : g.in_adj[static_cast<size_t>(v)]) adj.push_back(w);
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    c.valence = static_cast<int>(adj.size()) - 1;
    c.adjacency = std::move(adj);
    return c;
}

std::vector<Arrow> linking_arrows(const QFGraph& g, const VertexSet& s) {
    std::vector<Arrow> out;
    std::vector<char> in_s(static_cast<size_t>(g.size()), 0);
    for (VertexId v : s) {
        g.require_vertex(v);
        in_s[static_cast<size_t>(v)] = 1;
    }
    for (const auto& a : g.arrows)
        if (in_s[static_cast<size_t>(a.first)] != in_s[static_cast<size_t>(a.second)])
            out.push_back(a);
    return out;
}

Extremality is_extremal(const QFGraph& g, const VertexSet& s) {
    std::vector<char> in_s(static_cast<size_t>(g.size()), 0);
    for (VertexId v : s) {
        g.require_vertex(v);
        in_s[static_cast<size_t>(v)] = 1;
    }
    bool top = true, bottom = true;
    for (const auto& [v, w] : g.arrows) {
        bool tv = in_s[static_cast<size_t>(v)], hw = in_s[static_cast<size_t>(w)];
        if (tv == hw) continue;
        if (!tv) top = false;
        if (!hw) bottom = false;
    }
    if (top) return Extremality::Top;
    if (bottom) return Extremality::Bottom;
    return Extremality::No;
}

bool is_totally_ordered(const QFGraph& g) {
    const int n = g.size();
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w = v + 1; w < n; ++w)
            if (!g.reaches(v, w) && !g.reaches(w, v)) return false;
    return true;
}

std::vector<VertexSet> connected_components(const QFGraph& g) {
    const int n = g.size();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int ncomp = 0;
    for (VertexId start = 0; start < n; ++start) {
        if (comp[static_cast<size_t>(start)] >= 0) continue;
        std::queue<VertexId> q;
        q.push(start);
        comp[static_cast<size_t>(start)] = ncomp;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            auto visit = [&](VertexId w) {
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = ncomp;
                    q.push(w);
                }
            };
            for (VertexId w : g.out_adj[static_cast<size_t>(v)]) visit(w);
            for (VertexId w : g.in_adj[static_cast<size_t>(v)]) visit(w);
        }
        ++ncomp;
    }
    std::vector<VertexSet> out(static_cast<size_t>(ncomp));
    for (VertexId v = 0; v < n; ++v) out[static_cast<size_t>(comp[static_cast<size_t>(v)])].push_back(v);
    return out;
}

bool is_connected(const QFGraph& g) { return connected_components(g).size() == 1; }

void validate_multicut(const QFGraph& g, const Multicut& m) {
    if (m.empty()) throw std::invalid_argument("multicut must have at least one part");
    std::vector<char> seen(static_cast<size_t>(g.size()), 0);
    for (const auto& part : m) {
        if (part.empty()) throw std::invalid_argument("multicut part is empty");
        for (VertexId v : part) {
            g.require_vertex(v);
            if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("multicut parts overlap");
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    for (char s : seen)
        if (!s) throw std::invalid_argument("multicut does not cover the vertex set");
}

std::vector<Arrow> cut_set(const QFGraph& g, const Multicut& m) {
    validate_multicut(g, m);
    std::vector<int> part_of(static_cast<size_t>(g.size()), -1);
    for (size_t k = 0; k < m.size(); ++k)
        for (VertexId v : m[k]) part_of[static_cast<size_t>(v)] = static_cast<int>(k);
    std::vector<Arrow> out;
    for (const auto& a : g.arrows)
        if (part_of[static_cast<size_t>(a.first)] != part_of[static_cast<size_t>(a.second)])
            out.push_back(a);
    return out;
}

bool is_gtree(const QFGraph& g, const Multicut& m) {
    validate_multicut(g, m);
    if (!is_connected(g)) return false;
    return cut_set(g, m).size() == m.size() - 1;
}

Multicut leaf_order(const QFGraph& g, const Multicut& m) {
    if (!is_gtree(g, m)) throw std::invalid_argument("multicut is not a tree of parts");
    const size_t l = m.size();
    std::vector<int> part_of(static_cast<size_t>(g.size()), -1);
    for (size_t k = 0; k < l; ++k)
        for (VertexId v : m[k]) part_of[static_cast<size_t>(v)] = static_cast<int>(k);
    // part-level undirected adjacency
    std::vector<std::vector<int>> nbr(l);
    for (const auto& a : cut_set(g, m)) {
        int p = part_of[static_cast<size_t>(a.first)], q = part_of[static_cast<size_t>(a.second)];
        nbr[static_cast<size_t>(p)].push_back(q);
        nbr[static_cast<size_t>(q)].push_back(p);
    }
    std::vector<char> removed(l, 0);
    std::vector<int> degree(l, 0);
    for (size_t k = 0; k < l; ++k) {
        auto& v = nbr[k];
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        degree[k] = static_cast<int>(v.size());
    }
    Multicut out;
    for (size_t step = 0; step + 1 < l; ++step) {
        int pick = -1;
        for (size_t k = 0; k < l; ++k)
            if (!removed[k] && degree[k] == 1) {
                pick = static_cast<int>(k);
                break;
            }
        if (pick < 0) throw std::logic_error("leaf peel failed on a tree of parts");
        removed[static_cast<size_t>(pick)] = 1;
        out.push_back(m[static_cast<size_t>(pick)]);
        for (int q : nbr[static_cast<size_t>(pick)])
            if (!removed[static_cast<size_t>(q)]) --degree[static_cast<size_t>(q)];
    }
    for (size_t k = 0; k < l; ++k)
        if (!removed[k]) out.push_back(m[k]);
    return out;
}

QFGraph arrow_dual(const QFGraph& g) {
    QFGraph out;
    out.ctx = g.ctx;
    out.vertices.reserve(g.vertices.size());
    for (const auto& f : g.vertices) out.vertices.push_back({f.node, -f.center, f.width});
    for (const auto& [v, w] : g.arrows) out.arrows.push_back({w, v});
    finalize(out);
    return out;
}

std::string vertex_label(const KRFactor& f) {
    std::ostringstream os;
    os << f.node << '_' << f.center;
    if (f.width != 1) os << '^' << f.width;
    return os.str();
}

std::string to_dot(const QFGraph& g) {
    std::ostringstream os;
    os << "digraph G {\n";
    for (int v = 0; v < g.size(); ++v)
        os << "  v" << v << " [label=\"" << vertex_label(g.vertices[static_cast<size_t>(v)])
           << "\"];\n";
    for (const auto& [v, w] : g.arrows) os << "  v" << v << " -> v" << w << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace qfg
