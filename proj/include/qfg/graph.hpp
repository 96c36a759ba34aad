#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qfg/drinfeld.hpp"
#include "qfg/redsets.hpp"

namespace qfg {

using VertexId = int;
using Arrow = std::pair<VertexId, VertexId>;  // (tail, head)

// Pseudo q-factorization digraph: an indexed multiset of KR factors with all
// arrows dictated by the pairwise reducibility sets. Immutable after
// construction; arrow exponents are positive, so the graph is a DAG.
struct QFGraph {
    CartanContext ctx;
    std::vector<KRFactor> vertices;  // stable ids 0..n-1
    std::vector<Arrow> arrows;       // sorted

    std::vector<std::vector<VertexId>> out_adj;
    std::vector<std::vector<VertexId>> in_adj;

    int size() const { return static_cast<int>(vertices.size()); }
    bool has_arrow(VertexId v, VertexId w) const;
    // Center difference along an arrow.
    int arrow_exponent(VertexId v, VertexId w) const;
    void require_vertex(VertexId v) const;
    // true when w is reachable from v through arrows
    bool reaches(VertexId v, VertexId w) const;

    std::vector<uint64_t> reach_;  // reachability bitmask per vertex when size <= 64
};

QFGraph build_graph(const CartanContext& ctx, const PseudoFactorization& f);
QFGraph build_graph(const PseudoFactorization& f);

// Vertex-id subset of a graph, kept sorted and duplicate-free.
using VertexSet = std::vector<VertexId>;

VertexSet full_vertex_set(const QFGraph& g);
VertexSet complement(const QFGraph& g, const VertexSet& s);
bool is_subset(const VertexSet& a, const VertexSet& b);

DrinfeldPoly poly_of_subgraph(const QFGraph& g, const VertexSet& s);
DrinfeldPoly poly_of_graph(const QFGraph& g);

// Induced subgraph with vertices renumbered 0..k-1 in the order of `s`.
QFGraph induced_subgraph(const QFGraph& g, const VertexSet& s);

struct VertexClass {
    bool is_source = false;
    bool is_sink = false;
    int valence = 0;
    VertexSet adjacency;  // vertex together with its neighbours
};

VertexClass classify_vertex(const QFGraph& g, VertexId v);

enum class Extremality { Top, Bottom, No };

// Arrows crossing between s and its complement.
std::vector<Arrow> linking_arrows(const QFGraph& g, const VertexSet& s);

Extremality is_extremal(const QFGraph& g, const VertexSet& s);

bool is_totally_ordered(const QFGraph& g);

std::vector<VertexSet> connected_components(const QFGraph& g);
bool is_connected(const QFGraph& g);

// Ordered partition of the vertex set into disjoint nonempty parts.
using Multicut = std::vector<VertexSet>;

void validate_multicut(const QFGraph& g, const Multicut& m);
std::vector<Arrow> cut_set(const QFGraph& g, const Multicut& m);

// G-tree: connected graph whose multicut cut set has exactly l-1 arrows.
bool is_gtree(const QFGraph& g, const Multicut& m);

// Reorders a G-tree multicut by peeling leaves of the part-level tree, so that
// every part except the last has valence 1 among the parts still remaining.
Multicut leaf_order(const QFGraph& g, const Multicut& m);

// Vertices dualized by center negation, arrows reversed.
QFGraph arrow_dual(const QFGraph& g);

// Deterministic DOT export; nodes labeled "i_a^r" with the width suffix
// omitted for width 1.
std::string to_dot(const QFGraph& g);

std::string vertex_label(const KRFactor& f);

}  // namespace qfg
