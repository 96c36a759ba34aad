#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "qfg/drinfeld.hpp"
#include "qfg/redsets.hpp"

namespace oracles {

// Exhaustive q-factorization oracle for single-node multisets: enumerates all
// partitions of the exponent multiset into blocks, keeps those where every
// block is a string and every block pair is in general position. Independent
// of the merge algorithm.

inline std::optional<qfg::KRFactor> block_as_string(int node, std::vector<int> centers) {
    std::sort(centers.begin(), centers.end());
    for (size_t i = 0; i + 1 < centers.size(); ++i)
        if (centers[i + 1] - centers[i] != 2) return std::nullopt;
    int width = static_cast<int>(centers.size());
    return qfg::KRFactor{node, (centers.front() + centers.back()) / 2, width};
}

inline bool pair_in_general_position(const qfg::KRFactor& a, const qfg::KRFactor& b) {
    int m = a.center - b.center;
    if (m < 0) m = -m;
    return !qfg::set_contains(qfg::sl2_set(a.width, b.width), m);
}

// all valid factorizations, each sorted; a correct implementation must agree
// with the unique element of this set
inline std::set<std::vector<qfg::KRFactor>> all_valid_factorizations(int node,
                                                                     std::vector<int> centers) {
    std::sort(centers.begin(), centers.end());
    const size_t n = centers.size();
    std::set<std::vector<qfg::KRFactor>> results;
    if (n == 0) {
        results.insert({});
        return results;
    }
    std::vector<int> assign(n, 0);
    auto emit = [&](int blocks) {
        std::vector<qfg::KRFactor> factors;
        for (int b = 0; b < blocks; ++b) {
            std::vector<int> block;
            for (size_t i = 0; i < n; ++i)
                if (assign[i] == b) block.push_back(centers[i]);
            if (block.empty()) continue;
            auto s = block_as_string(node, block);
            if (!s) return;
            factors.push_back(*s);
        }
        for (size_t x = 0; x < factors.size(); ++x)
            for (size_t y = x + 1; y < factors.size(); ++y)
                if (!pair_in_general_position(factors[x], factors[y])) return;
        std::sort(factors.begin(), factors.end());
        results.insert(factors);
    };
    // restricted-growth enumeration of set partitions
    std::function<void(size_t, int)> rec = [&](size_t idx, int max_block) {
        if (idx == n) {
            emit(max_block + 1);
            return;
        }
        for (int b = 0; b <= max_block + 1 && b < static_cast<int>(n); ++b) {
            assign[idx] = b;
            rec(idx + 1, std::max(max_block, b));
        }
    };
    rec(0, -1);
    return results;
}

}  // namespace oracles
