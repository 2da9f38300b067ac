// Bipartite matching by augmenting paths (Kuhn), deterministic: left nodes
// are processed in index order and adjacency lists in their given order, so
// equal inputs yield equal matchings.
#pragma once

#include <functional>
#include <vector>

namespace omwb {

struct Matching {
    std::vector<int> left_to_right; // -1 when unmatched
    std::vector<int> right_to_left;
    int size = 0;
};

inline Matching max_bipartite_matching(int nleft, int nright,
                                       const std::vector<std::vector<int>>& adj) {
    Matching m;
    m.left_to_right.assign(nleft, -1);
    m.right_to_left.assign(nright, -1);
    std::vector<char> used;
    std::function<bool(int)> try_augment = [&](int l) {
        for (int r : adj[l]) {
            if (used[r]) continue;
            used[r] = 1;
            if (m.right_to_left[r] == -1 || try_augment(m.right_to_left[r])) {
                m.left_to_right[l] = r;
                m.right_to_left[r] = l;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < nleft; ++l) {
        used.assign(nright, 0);
        if (try_augment(l)) ++m.size;
    }
    return m;
}

// Right side with capacities: returns left -> right-class assignment (-1 when
// unmatched), by expanding each right class into capacity-many unit slots.
inline std::vector<int> max_bipartite_matching_capacitated(
    int nleft, const std::vector<int>& capacities, const std::vector<std::vector<int>>& adj,
    int* matched_count = nullptr) {
    std::vector<int> slot_class, class_offset(capacities.size() + 1, 0);
    for (std::size_t c = 0; c < capacities.size(); ++c) {
        class_offset[c + 1] = class_offset[c] + capacities[c];
        for (int s = 0; s < capacities[c]; ++s) slot_class.push_back(static_cast<int>(c));
    }
    std::vector<std::vector<int>> slot_adj(nleft);
    for (int l = 0; l < nleft; ++l)
        for (int c : adj[l])
            for (int s = class_offset[c]; s < class_offset[c + 1]; ++s) slot_adj[l].push_back(s);
    const Matching m =
        max_bipartite_matching(nleft, static_cast<int>(slot_class.size()), slot_adj);
    if (matched_count) *matched_count = m.size;
    std::vector<int> out(nleft, -1);
    for (int l = 0; l < nleft; ++l)
        if (m.left_to_right[l] >= 0) out[l] = slot_class[m.left_to_right[l]];
    return out;
}

} // namespace omwb
