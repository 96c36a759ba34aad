#pragma once

#include <string>
#include <vector>

#include "qfg/graph.hpp"

namespace qfg {

struct PrimalityVerdict {
    enum class Kind { Prime, Factors, Unknown };
    Kind kind = Kind::Unknown;
    DrinfeldPoly factor;    // for Factors: a nontrivial tensor factor
    DrinfeldPoly cofactor;  // for Factors: the complementary factor
    std::string justification;
};

// True iff the fundamental factorization graph of pi is nonempty and totally
// ordered.
bool is_prime_snake(const DrinfeldPoly& pi);

// One polynomial per connected component; more than one certifies that the
// module splits as a tensor product.
std::vector<DrinfeldPoly> dissociate_factorization(const QFGraph& g);

// Executable criterion for 3-vertex alternating lines: the middle vertex is a
// source or a sink and the end vertices are mutually non-adjacent. The graph
// must carry an actual q-factorization. Throws on precondition violations.
PrimalityVerdict three_vertex_primality(const QFGraph& g);

// Prime when the actual q-factorization graph is totally ordered; Unknown
// otherwise. Throws when the vertex factors are not in general position.
PrimalityVerdict totally_ordered_prime(const QFGraph& g);

// Combined routine used by the command line: dissociate factorization, then
// total order, then the 3-vertex criterion when it applies.
PrimalityVerdict decide_primality(const QFGraph& g);

}  // namespace qfg
