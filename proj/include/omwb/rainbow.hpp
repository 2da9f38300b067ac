// Rainbow-simplex engine: given a family of complexes {K^I} indexed by the
// non-empty subsets I of [k] colors such that
//   (a) K^I is a subcomplex of K^J whenever I is a subset of J, and
//   (b) K^I has trivial reduced Z2 homology up to dimension |I|-2,
// build chains c^I with boundary(c^I) = sum over i in I of c^{I minus i}
// (mod 2), supported on K^I, by induction on |I| with a GF(2) solve per
// subset.  Any vertex labeling with label(v) in I for every vertex v of K^I
// then forces a face of c^{[k]} with k pairwise distinct labels.
#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "gf2.hpp"
#include "limits.hpp"
#include "simplicial.hpp"

namespace omwb {

// Index = color bitmask over colors 1..k (bit i-1 = color i); entry 0 unused.
struct ComplexFamily {
    int k = 0;
    std::vector<SimplicialComplex> by_mask; // size 1 << k

    const SimplicialComplex& at(std::uint32_t mask) const { return by_mask[mask]; }
    SimplicialComplex& at(std::uint32_t mask) { return by_mask[mask]; }

    static ComplexFamily with_colors(int k) {
        if (k < 1 || k > 8) throw refusal_error("complex family: color count outside 1..8");
        ComplexFamily f;
        f.k = k;
        f.by_mask.resize(std::size_t{1} << k);
        return f;
    }
};

using Labeling = std::unordered_map<int, int>; // vertex id -> color in 1..k

// A mod-2 chain of fixed dimension: canonical sorted list of faces.
using Z2Chain = std::vector<Face>;

struct ChainFamily {
    int k = 0;
    std::vector<Z2Chain> by_mask;
};

namespace detail {

inline std::vector<int> mask_colors(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) out.push_back(i + 1);
    return out;
}

inline std::string mask_str(std::uint32_t mask) {
    std::string s = "{";
    for (int c : mask_colors(mask)) {
        if (s.size() > 1) s += ",";
        s += std::to_string(c);
    }
    return s + "}";
}

inline void xor_face(Z2Chain& chain, const Face& f) {
    const auto it = std::lower_bound(chain.begin(), chain.end(), f);
    if (it != chain.end() && *it == f) chain.erase(it);
    else chain.insert(it, f);
}

} // namespace detail

// Boundary of a chain, recomputed face by face (independent of any matrix).
inline Z2Chain chain_boundary(const Z2Chain& chain) {
    Z2Chain out;
    for (const Face& f : chain)
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face sub(f);
            sub.erase(sub.begin() + i);
            if (!sub.empty()) detail::xor_face(out, sub);
        }
    return out;
}

// Monotonicity of the family: every face of K^I lies in K^{I u {i}}.
// One-element supersets suffice by transitivity.
inline void verify_family_monotone(const ComplexFamily& f) {
    const std::uint32_t full = (1u << f.k) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        for (int i = 0; i < f.k; ++i) {
            if (mask & (1u << i)) continue;
            const auto& small = f.at(mask);
            const auto& big = f.at(mask | (1u << i));
            for (int d = 0; d <= small.dim(); ++d)
                for (const auto& face : small.faces(d))
                    if (!big.contains(face))
                        throw parse_error("complex family is not monotone: a face of K^" +
                                          detail::mask_str(mask) + " is missing from K^" +
                                          detail::mask_str(mask | (1u << i)));
        }
    }
}

// Connectivity certificate: K^I must have trivial reduced Z2 homology in all
// dimensions up to |I|-2 (for |I| = 1 this just means non-empty).
inline void verify_family_connectivity(const ComplexFamily& f) {
    const std::uint32_t full = (1u << f.k) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int need = __builtin_popcount(mask) - 2;
        for (int q = -1; q <= need; ++q)
            if (betti_z2(f.at(mask), q) != 0)
                throw theorem_violation("connectivity certificate fails: K^" +
                                        detail::mask_str(mask) + " has reduced betti_" +
                                        std::to_string(q) + " = " +
                                        std::to_string(betti_z2(f.at(mask), q)) +
                                        " but must vanish up to dimension " +
                                        std::to_string(need));
    }
}

inline void verify_labeling(const ComplexFamily& f, const Labeling& lab) {
    const std::uint32_t full = (1u << f.k) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        for (const auto& vf : f.at(mask).faces(0)) {
            const auto it = lab.find(vf[0]);
            if (it == lab.end())
                throw parse_error("labeling: vertex " + std::to_string(vf[0]) + " has no label");
            if (it->second < 1 || it->second > f.k || !(mask & (1u << (it->second - 1))))
                throw parse_error("labeling: vertex " + std::to_string(vf[0]) + " of K^" +
                                  detail::mask_str(mask) + " carries label " +
                                  std::to_string(it->second) + " outside its color set");
        }
}

// Inductive chain construction; verifies the family first, re-verifies every
// boundary identity from scratch after each solve.
inline ChainFamily build_chain_family(const ComplexFamily& f, const Limits& lim = {}) {
    verify_family_monotone(f);
    verify_family_connectivity(f);
    ChainFamily cf;
    cf.k = f.k;
    cf.by_mask.resize(f.by_mask.size());
    const std::uint32_t full = (1u << f.k) - 1;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m <= full; ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (const std::uint32_t mask : masks) {
        const int card = __builtin_popcount(mask);
        const auto& k = f.at(mask);
        if (card == 1) {
            cf.by_mask[mask] = {k.faces(0).front()}; // lex-first vertex
            continue;
        }
        // target = sum of c^{I minus i}, lives in dimension card-2
        Z2Chain target;
        for (int i = 0; i < f.k; ++i)
            if (mask & (1u << i))
                for (const Face& face : cf.by_mask[mask ^ (1u << i)]) detail::xor_face(target, face);
        const int d = card - 1;
        lim.check_faces(k.faces(d).size() + k.faces(d - 1).size(), "chain solve");
        Gf2Matrix a = boundary_matrix(k, d);
        std::vector<std::uint8_t> rhs(a.rows, 0);
        for (const Face& face : target) {
            const long row = k.face_index(face);
            if (row < 0)
                throw parse_error("chain solve: target face escapes K^" + detail::mask_str(mask));
            rhs[static_cast<std::size_t>(row)] = 1;
        }
        const auto x = gf2_solve(a, rhs);
        if (!x)
            throw theorem_violation(
                "no chain with the required boundary exists in K^" + detail::mask_str(mask) +
                ": the target cycle represents a non-trivial Z2 homology class in dimension " +
                std::to_string(d - 1));
        Z2Chain chain;
        const auto& level = k.faces(d);
        for (std::size_t j = 0; j < level.size(); ++j)
            if ((*x)[j]) chain.push_back(level[j]);
        if (chain_boundary(chain) != target)
            throw theorem_violation("chain solve self-check failed at K^" + detail::mask_str(mask));
        cf.by_mask[mask] = std::move(chain);
    }
    return cf;
}

// Push a chain through the labeling, dropping faces with repeated labels;
// returns the mod-2 count of faces whose labels are pairwise distinct (for a
// chain of K^I those label sets necessarily equal I).
inline int rainbow_coefficient(const Z2Chain& chain, const Labeling& lab) {
    int count = 0;
    for (const Face& f : chain) {
        std::vector<int> labels;
        for (int v : f) labels.push_back(lab.at(v));
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) == labels.end()) count ^= 1;
    }
    return count;
}

// Extraction from a prebuilt chain family.
inline Face find_rainbow_simplex(const ComplexFamily& f, const Labeling& lab,
                                 const ChainFamily& cf) {
    verify_labeling(f, lab);
    const std::uint32_t full = (1u << f.k) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        if (rainbow_coefficient(cf.by_mask[mask], lab) != 1)
            throw theorem_violation("labeled chain family inconsistency: c^" +
                                    detail::mask_str(mask) +
                                    " maps to an even rainbow count under the labeling");
    for (const Face& face : cf.by_mask[full]) {
        std::vector<int> labels;
        for (int v : face) labels.push_back(lab.at(v));
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) == labels.end()) return face;
    }
    throw theorem_violation("no rainbow face in the top chain despite odd rainbow count");
}

inline Face find_rainbow_simplex(const ComplexFamily& f, const Labeling& lab,
                                 const Limits& lim = {}) {
    return find_rainbow_simplex(f, lab, build_chain_family(f, lim));
}

// ---- special-case wrappers --------------------------------------------------

// Family for a labeled triangulation of the standard simplex on colors [k]:
// carrier(v) = color set of the minimal simplex face whose triangulation
// contains v; K^I = the faces all of whose vertices have carrier inside I.
inline ComplexFamily sperner_family(const SimplicialComplex& t,
                                    const std::unordered_map<int, std::uint32_t>& carrier,
                                    int k) {
    ComplexFamily f = ComplexFamily::with_colors(k);
    const std::uint32_t full = (1u << k) - 1;
    for (const auto& vf : t.faces(0)) {
        const auto it = carrier.find(vf[0]);
        if (it == carrier.end())
            throw parse_error("sperner family: vertex " + std::to_string(vf[0]) + " has no carrier");
        if (it->second == 0 || (it->second & ~full) != 0)
            throw parse_error("sperner family: carrier of vertex " + std::to_string(vf[0]) +
                              " is not a non-empty subset of the color set");
    }
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::vector<Face> faces;
        for (int d = 0; d <= t.dim(); ++d)
            for (const auto& face : t.faces(d)) {
                bool inside = true;
                for (int v : face)
                    if (carrier.at(v) & ~mask) {
                        inside = false;
                        break;
                    }
                if (inside) faces.push_back(face);
            }
        f.at(mask) = SimplicialComplex::from_closed_set(std::move(faces));
    }
    return f;
}

// A labeling is a valid Sperner labeling when label(v) lies in carrier(v).
inline void verify_sperner_labeling(const std::unordered_map<int, std::uint32_t>& carrier,
                                    const Labeling& lab) {
    for (const auto& [v, m] : carrier) {
        const auto it = lab.find(v);
        if (it == lab.end()) throw parse_error("sperner labeling: unlabeled vertex");
        if (!(m & (1u << (it->second - 1))))
            throw parse_error("sperner labeling: label of vertex " + std::to_string(v) +
                              " is outside its carrier");
    }
}

// Family induced by the labels themselves: K^I = subcomplex of K induced by
// the vertices whose label lies in I.
inline ComplexFamily meshulam_family(const SimplicialComplex& k_full, const Labeling& lab, int k) {
    ComplexFamily f = ComplexFamily::with_colors(k);
    const std::uint32_t full = (1u << k) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::vector<Face> faces;
        for (int d = 0; d <= k_full.dim(); ++d)
            for (const auto& face : k_full.faces(d)) {
                bool inside = true;
                for (int v : face) {
                    const int c = lab.at(v);
                    if (c < 1 || c > k || !(mask & (1u << (c - 1)))) {
                        inside = false;
                        break;
                    }
                }
                if (inside) faces.push_back(face);
            }
        f.at(mask) = SimplicialComplex::from_closed_set(std::move(faces));
    }
    return f;
}

} // namespace omwb
