// Lexicographic machinery for r-element subsets of {0, ..., n-1}.
//
// Basis/subset indexing everywhere in the library is the lexicographic order
// of sorted index tuples, e.g. for n=4, r=2: 01, 02, 03, 12, 13, 23.
#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace omwb {

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t acc = 1;
    for (int i = 1; i <= k; ++i) acc = acc * static_cast<std::uint64_t>(n - k + i) / i;
    return acc;
}

// All r-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> all_subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    if (r < 0 || r > n) return out;
    std::vector<int> cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == n - r + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    if (r == 0) out.assign(1, {});
    return out;
}

// Rank of a sorted r-subset in the lexicographic order above.
inline std::size_t lex_rank(const std::vector<int>& subset, int n) {
    const int r = static_cast<int>(subset.size());
    std::size_t rank = 0;
    int prev = -1;
    for (int i = 0; i < r; ++i) {
        for (int v = prev + 1; v < subset[i]; ++v)
            rank += binomial(n - 1 - v, r - 1 - i);
        prev = subset[i];
    }
    return rank;
}

// Parity sign of the permutation that sorts `perm` (+1 even, -1 odd).
inline int permutation_sign(std::vector<int> perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        while (perm[i] != static_cast<int>(i)) {
            std::swap(perm[i], perm[perm[i]]);
            sign = -sign;
        }
    }
    return sign;
}

} // namespace omwb
