#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qfg {

enum class CartanType { A };

// Type-A Dynkin diagram data: nodes are 1..rank on a line, all symmetrizers 1.
struct CartanContext {
    int rank = 1;
    CartanType type = CartanType::A;

    bool valid_node(int i) const { return 1 <= i && i <= rank; }

    void require_node(int i) const {
        if (!valid_node(i))
            throw std::out_of_range("node " + std::to_string(i) + " outside diagram of rank " +
                                    std::to_string(rank));
    }

    int symmetrizer(int i) const {
        require_node(i);
        return 1;
    }

    // Dual Coxeter number of A_n.
    int dual_coxeter() const { return rank + 1; }

    // Diagram involution induced by the longest Weyl element.
    int dual_node(int i) const {
        require_node(i);
        return rank + 1 - i;
    }

    bool operator==(const CartanContext&) const = default;
};

inline CartanContext make_type_a(int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be at least 1");
    return CartanContext{rank, CartanType::A};
}

// Connected subdiagram [lo, hi].
struct Subdiagram {
    int lo = 1;
    int hi = 1;

    int size() const { return hi - lo + 1; }
    bool contains(int i) const { return lo <= i && i <= hi; }
    bool contains(const Subdiagram& other) const { return lo <= other.lo && other.hi <= hi; }

    // Monovalent nodes of the subdiagram: {lo, hi}, a singleton when lo == hi.
    std::vector<int> boundary() const {
        if (lo == hi) return {lo};
        return {lo, hi};
    }

    int dual_coxeter() const { return size() + 1; }

    bool operator==(const Subdiagram&) const = default;
};

inline Subdiagram make_subdiagram(const CartanContext& ctx, int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("subdiagram endpoints out of order");
    ctx.require_node(lo);
    ctx.require_node(hi);
    return Subdiagram{lo, hi};
}

inline Subdiagram full_diagram(const CartanContext& ctx) { return Subdiagram{1, ctx.rank}; }

inline int distance(const CartanContext& ctx, int i, int j) {
    ctx.require_node(i);
    ctx.require_node(j);
    return i < j ? j - i : i - j;
}

inline int node_distance_to_set(int i, const std::vector<int>& nodes) {
    int best = -1;
    for (int k : nodes) {
        int d = i < k ? k - i : i - k;
        if (best < 0 || d < best) best = d;
    }
    return best;
}

inline int set_distance(const CartanContext& ctx, const Subdiagram& J, const Subdiagram& K) {
    ctx.require_node(J.lo);
    ctx.require_node(J.hi);
    ctx.require_node(K.lo);
    ctx.require_node(K.hi);
    if (J.hi < K.lo) return K.lo - J.hi;
    if (K.hi < J.lo) return J.lo - K.hi;
    return 0;  // intervals intersect
}

inline int set_distance(const CartanContext& ctx, const Subdiagram& J, const std::vector<int>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("set_distance against empty node set");
    int best = -1;
    for (int k : nodes) {
        ctx.require_node(k);
        int d = J.contains(k) ? 0 : (k < J.lo ? J.lo - k : k - J.hi);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

// d(J, boundary of the full diagram).
inline int boundary_distance(const CartanContext& ctx, const Subdiagram& J) {
    return set_distance(ctx, J, full_diagram(ctx).boundary());
}

// d(J, boundary of `outer`), distances taken inside `outer`.
inline int boundary_distance_within(const Subdiagram& outer, const Subdiagram& J) {
    if (!outer.contains(J)) throw std::invalid_argument("subdiagram not contained in outer diagram");
    int d = J.lo - outer.lo;
    int d2 = outer.hi - J.hi;
    return d < d2 ? d : d2;
}

struct DualData {
    int dual_node;     // image under the full-diagram involution
    int w0_image;      // image of the longest element of the subdiagram
    int dual_coxeter;  // of the subdiagram
};

inline DualData dual_data(const CartanContext& ctx, const Subdiagram& J, int i) {
    ctx.require_node(J.lo);
    ctx.require_node(J.hi);
    if (!J.contains(i)) throw std::invalid_argument("node not in subdiagram");
    return DualData{ctx.dual_node(i), J.lo + J.hi - i, J.dual_coxeter()};
}

}  // namespace qfg
