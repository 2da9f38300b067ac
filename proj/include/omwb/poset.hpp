// Heights in the big face lattice of vectors, ordered by conformal refinement
// (0 is the bottom; circuits are the atoms, so a circuit has height 1).
//
// height(X) = length of the longest chain 0 = X_0 < X_1 < ... < X_h = X.
// Because Y <= X forces supp(Y) <= supp(X), a longest-chain DP over elements
// sorted by support size is exact.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "covectors.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "sign_vector.hpp"

namespace omwb {

struct VectorPoset {
    std::vector<SignVector> elems; // sorted by (support size, text)
    std::vector<int> height;       // same indexing; 0 exactly at the zero vector

    int height_of(const SignVector& x) const {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == x) return height[i];
        throw parse_error("height_of: sign vector is not in the poset");
    }
};

// Longest-chain heights for an arbitrary conformally-closed family containing
// the zero vector.
inline VectorPoset heights_by_longest_chain(std::vector<SignVector> elems) {
    std::stable_sort(elems.begin(), elems.end(), [](const SignVector& a, const SignVector& b) {
        if (a.support_size() != b.support_size()) return a.support_size() < b.support_size();
        return text_less(a, b);
    });
    VectorPoset p;
    p.height.assign(elems.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i].is_zero()) continue;
        int best = 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (elems[j].support_size() >= elems[i].support_size()) break;
            if (conforms(elems[j], elems[i])) best = std::max(best, p.height[j] + 1);
        }
        p.height[i] = best;
    }
    p.elems = std::move(elems);
    return p;
}

inline VectorPoset build_vector_poset(const Chirotope& chi, const Limits& lim = {}) {
    return heights_by_longest_chain(vectors_of(chi, lim));
}

inline VectorPoset build_positive_vector_poset(const Chirotope& chi, const Limits& lim = {}) {
    return heights_by_longest_chain(positive_vectors_of(chi, lim));
}

// Height of one vector, via the interval [0, X]: the vectors below X are the
// closure of the circuits conformal to X, so the DP can run on that small set.
inline int height(const Chirotope& chi, const SignVector& x, const Limits& lim = {}) {
    if (x.size() != static_cast<std::size_t>(chi.n))
        throw parse_error("height: sign vector length differs from ground set size");
    if (x.is_zero()) return 0;
    std::vector<SignVector> gens;
    for (const auto& c : circuits_from_chirotope(chi))
        if (conforms(c, x)) gens.push_back(c);
    const auto interval = compose_closure(gens, chi.n, lim);
    const auto p = heights_by_longest_chain(interval);
    for (std::size_t i = 0; i < p.elems.size(); ++i)
        if (p.elems[i] == x) return p.height[i];
    throw parse_error("height: sign vector " + x.str() + " is not a vector of this sign map");
}

// Every vector X satisfies |supp(X)| <= r + height(X).  Returns a violating
// vector's text if one exists.
inline std::optional<std::string> height_bound_violation(const Chirotope& chi,
                                                         const Limits& lim = {}) {
    const auto p = build_vector_poset(chi, lim);
    for (std::size_t i = 0; i < p.elems.size(); ++i)
        if (static_cast<int>(p.elems[i].support_size()) > chi.r + p.height[i])
            return p.elems[i].str() + " has support " + std::to_string(p.elems[i].support_size()) +
                   " > " + std::to_string(chi.r) + " + height " + std::to_string(p.height[i]);
    return std::nullopt;
}

// V+_{e,h}: positive vectors X with 1 <= height(X) <= h such that every
// positive circuit conformally below X is positive at e.
inline std::vector<SignVector> positive_vectors_eh(const Chirotope& chi, int e, int h,
                                                   const Limits& lim = {}) {
    if (e < 0 || e >= chi.n) throw parse_error("positive_vectors_eh: element out of range");
    const auto pos_circuits = positive_circuits_of(chi);
    const auto p = heights_by_longest_chain(positive_vectors_of(chi, lim));
    std::vector<SignVector> out;
    for (std::size_t i = 0; i < p.elems.size(); ++i) {
        if (p.height[i] < 1 || p.height[i] > h) continue;
        bool ok = true;
        for (const auto& c : pos_circuits)
            if (conforms(c, p.elems[i]) && c[e] <= 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(p.elems[i]);
    }
    return out;
}

// L_{J+,J-}: non-zero covectors that are non-negative on J+ and non-positive
// on J-.  J+ and J- must be disjoint subsets of the ground set.
inline std::vector<SignVector> covector_set_jj(const Chirotope& chi, const std::vector<int>& jp,
                                               const std::vector<int>& jm,
                                               const Limits& lim = {}) {
    std::vector<int> mark(chi.n, 0);
    for (int j : jp) {
        if (j < 0 || j >= chi.n) throw parse_error("covector_set_jj: element out of range");
        mark[j] = +1;
    }
    for (int j : jm) {
        if (j < 0 || j >= chi.n) throw parse_error("covector_set_jj: element out of range");
        if (mark[j] != 0) throw parse_error("covector_set_jj: J+ and J- overlap");
        mark[j] = -1;
    }
    std::vector<SignVector> out;
    for (const auto& x : covectors_of(chi, lim)) {
        if (x.is_zero()) continue;
        bool ok = true;
        for (int j = 0; j < chi.n && ok; ++j) {
            if (mark[j] > 0 && x[j] < 0) ok = false;
            if (mark[j] < 0 && x[j] > 0) ok = false;
        }
        if (ok) out.push_back(x);
    }
    return out;
}

} // namespace omwb
