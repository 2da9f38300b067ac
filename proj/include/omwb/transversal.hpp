// Tope-transversal engines for uniform oriented matroids.
//
// Square mode: given topes T_1..T_n on n elements that all agree on some
// element, there is a tope agreeing with each T_i on a distinct element
// (a bijection between topes and elements).  Rank mode: for any topes
// T_1..T_r (r = rank) and multiplicities n_1+...+n_r = n, a tope exists that
// agrees with T_i on n_i elements, partitioning [n].  Both have direct
// matching-based searches and a proof pipeline through the rainbow engine on
// the simplotope complex L^I.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "chirotope.hpp"
#include "covectors.hpp"
#include "errors.hpp"
#include "matching.hpp"
#include "rainbow.hpp"
#include "sign_vector.hpp"
#include "simplicial.hpp"

namespace omwb {

struct TopeCollection {
    Chirotope chi;
    std::vector<SignVector> topes;
    std::vector<int> multiplicities; // empty in square mode
};

struct TransversalCertificate {
    SignVector tope;
    std::vector<int> element_color; // element j -> tope index (1-based)
};

// Precomputed tope membership for repeated composite tests.
struct TopeSet {
    std::unordered_set<std::uint64_t> keys;
    std::vector<SignVector> list; // deterministic enumeration order

    static TopeSet of(const Chirotope& chi, const Limits& lim = {}) {
        TopeSet t;
        t.list = topes_of(chi, lim);
        for (const auto& x : t.list) t.keys.insert(x.key());
        return t;
    }
    bool contains(const SignVector& x) const { return keys.count(x.key()) != 0; }
};

inline void validate_tope_collection(const TopeCollection& tc, const TopeSet& ts,
                                     bool force_nonuniform = false) {
    if (!force_nonuniform && !tc.chi.is_uniform())
        throw parse_error("tope collection: uniformity is required (pass force to override)");
    for (const auto& t : tc.topes) {
        if (t.size() != static_cast<std::size_t>(tc.chi.n))
            throw parse_error("tope collection: tope length differs from ground set size");
        if (!t.full_support()) throw parse_error("tope collection: " + t.str() + " has zero entries");
        if (!ts.contains(t)) throw parse_error("tope collection: " + t.str() + " is not a tope");
    }
    if (!tc.multiplicities.empty()) {
        if (tc.multiplicities.size() != tc.topes.size())
            throw parse_error("tope collection: one multiplicity per tope required");
        int sum = 0;
        for (int m : tc.multiplicities) {
            if (m <= 0) throw parse_error("tope collection: multiplicities must be positive");
            sum += m;
        }
        if (sum != tc.chi.n)
            throw parse_error("tope collection: multiplicities sum to " + std::to_string(sum) +
                              ", not the ground set size " + std::to_string(tc.chi.n));
    }
}

// Membership in F^I: compose the tuple's topes coordinatewise and test the
// result for being a tope (tuple values are 1-based indices into `topes`).
inline bool fI_member(const TopeSet& ts, const std::vector<SignVector>& topes,
                      const std::vector<int>& tuple) {
    SignVector composite(tuple.size());
    for (std::size_t j = 0; j < tuple.size(); ++j) {
        if (tuple[j] < 1 || tuple[j] > static_cast<int>(topes.size()))
            throw parse_error("tuple index out of range");
        composite[j] = topes[tuple[j] - 1][j];
    }
    return ts.contains(composite);
}

inline bool fI_member(const Chirotope& chi, const std::vector<SignVector>& topes,
                      const std::vector<int>& tuple, const Limits& lim = {}) {
    return fI_member(TopeSet::of(chi, lim), topes, tuple);
}

// ---- certificates -----------------------------------------------------------

inline void verify_transversal_certificate(const TopeCollection& tc, const TopeSet& ts,
                                           const TransversalCertificate& cert) {
    const int n = tc.chi.n;
    const int k = static_cast<int>(tc.topes.size());
    if (!ts.contains(cert.tope)) throw theorem_violation("certificate tope is not a tope");
    if (cert.element_color.size() != static_cast<std::size_t>(n))
        throw theorem_violation("certificate must assign every element");
    std::vector<int> count(k + 1, 0);
    for (int j = 0; j < n; ++j) {
        const int i = cert.element_color[j];
        if (i < 1 || i > k) throw theorem_violation("certificate color out of range");
        ++count[i];
        if (cert.tope[j] != tc.topes[i - 1][j])
            throw theorem_violation("certificate tope disagrees with tope " + std::to_string(i) +
                                    " on its assigned element " + std::to_string(j));
    }
    if (tc.multiplicities.empty()) {
        for (int i = 1; i <= k; ++i)
            if (count[i] != 1) throw theorem_violation("certificate assignment is not a bijection");
    } else {
        for (int i = 1; i <= k; ++i)
            if (count[i] != tc.multiplicities[i - 1])
                throw theorem_violation("certificate part " + std::to_string(i) + " has size " +
                                        std::to_string(count[i]) + ", expected " +
                                        std::to_string(tc.multiplicities[i - 1]));
    }
}

// ---- direct searches --------------------------------------------------------

// Square mode (as many topes as elements): first tope in lex order (+ before
// -) admitting a perfect tope-element matching; NONE is a legitimate result.
inline std::optional<TransversalCertificate> find_transversal(const TopeCollection& tc,
                                                              bool force_nonuniform = false,
                                                              const Limits& lim = {}) {
    const TopeSet ts = TopeSet::of(tc.chi, lim);
    validate_tope_collection(tc, ts, force_nonuniform);
    const int n = tc.chi.n;
    if (static_cast<int>(tc.topes.size()) != n)
        throw parse_error("square-mode search needs exactly as many topes as elements");
    for (const auto& cand : ts.list) {
        std::vector<std::vector<int>> adj(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (cand[j] == tc.topes[i][j]) adj[i].push_back(j);
        const Matching m = max_bipartite_matching(n, n, adj);
        if (m.size == n) {
            TransversalCertificate cert;
            cert.tope = cand;
            cert.element_color.assign(n, 0);
            for (int i = 0; i < n; ++i) cert.element_color[m.left_to_right[i]] = i + 1;
            verify_transversal_certificate(tc, ts, cert);
            return cert;
        }
    }
    return std::nullopt;
}

// Hypothesis-checked wrapper: all topes agree on some element, so the search
// must succeed; exhaustion is a theorem violation.
inline TransversalCertificate verify_common_element(const TopeCollection& tc,
                                                    const Limits& lim = {}) {
    const int n = tc.chi.n;
    bool agree = false;
    for (int e = 0; e < n && !agree; ++e) {
        agree = true;
        for (const auto& t : tc.topes)
            if (t[e] != tc.topes.front()[e]) { agree = false; break; }
    }
    if (!agree)
        throw parse_error("hypothesis fails: the topes agree on no element");
    const auto cert = find_transversal(tc, false, lim);
    if (!cert)
        throw theorem_violation("topes agree on an element but no transversal tope exists; "
                                "sign map " + std::string(write_chi(tc.chi)));
    return *cert;
}

// Rank mode: capacitated matching, capacity n_i on tope i.
inline TransversalCertificate find_partition_transversal(const TopeCollection& tc,
                                                         const Limits& lim = {}) {
    const TopeSet ts = TopeSet::of(tc.chi, lim);
    validate_tope_collection(tc, ts, false);
    const int n = tc.chi.n;
    const int k = static_cast<int>(tc.topes.size());
    if (k != tc.chi.r)
        throw parse_error("rank-mode search needs exactly rank-many topes");
    if (tc.multiplicities.empty())
        throw parse_error("rank-mode search needs multiplicities");
    for (const auto& cand : ts.list) {
        std::vector<std::vector<int>> adj(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < k; ++i)
                if (cand[j] == tc.topes[i][j]) adj[j].push_back(i);
        int matched = 0;
        const auto asg = max_bipartite_matching_capacitated(n, tc.multiplicities, adj, &matched);
        if (matched == n) {
            TransversalCertificate cert;
            cert.tope = cand;
            cert.element_color.assign(n, 0);
            for (int j = 0; j < n; ++j) cert.element_color[j] = asg[j] + 1;
            verify_transversal_certificate(tc, ts, cert);
            return cert;
        }
    }
    throw theorem_violation("no tope admits a capacitated assignment; sign map " +
                            std::string(write_chi(tc.chi)));
}

// ---- the simplotope complex L^I ----------------------------------------------

// A box is one coordinate mask per element: tau_j = non-empty subset of the
// k colors (bit i-1 = color i).  Its cell dimension is sum(|tau_j| - 1).
struct BoxComplex {
    int k = 0, n = 0;
    std::vector<std::vector<std::uint8_t>> boxes; // each of length n, lex order
    std::unordered_map<std::string, int> index;   // box bytes -> position

    int dim_of(const std::vector<std::uint8_t>& box) const {
        int d = 0;
        for (std::uint8_t m : box) d += __builtin_popcount(m) - 1;
        return d;
    }
    int find(const std::vector<std::uint8_t>& box) const {
        const auto it = index.find(std::string(box.begin(), box.end()));
        return it == index.end() ? -1 : it->second;
    }
};

// All boxes of L^I whose cell dimension is at most max_dim (pass a large
// max_dim for the whole complex).  A box survives iff every vertex tuple of
// it lies in F^I.
inline BoxComplex build_boxes(const Chirotope& chi, const std::vector<SignVector>& topes,
                              int max_dim, const Limits& lim = {}) {
    const int n = chi.n;
    const int k = static_cast<int>(topes.size());
    if (k < 1 || k > 8) throw refusal_error("box complex: color count outside 1..8");
    const TopeSet ts = TopeSet::of(chi, lim);
    // vertex tuples first: k^n composites
    std::unordered_set<std::uint64_t> f_tuples;
    std::vector<int> tuple(n, 1);
    auto tuple_code = [&](const std::vector<int>& t) {
        std::uint64_t code = 0;
        for (int v : t) code = code * 8 + static_cast<std::uint64_t>(v);
        return code;
    };
    while (true) {
        if (fI_member(ts, topes, tuple)) f_tuples.insert(tuple_code(tuple));
        int j = n - 1;
        while (j >= 0 && tuple[j] == k) tuple[j--] = 1;
        if (j < 0) break;
        ++tuple[j];
    }
    BoxComplex bc;
    bc.k = k;
    bc.n = n;
    const int full_mask = (1 << k) - 1;
    std::vector<std::uint8_t> box(n, 1);
    auto all_vertices_in_f = [&](const std::vector<std::uint8_t>& b) {
        std::vector<std::vector<int>> choices(n);
        for (int j = 0; j < n; ++j)
            for (int i = 1; i <= k; ++i)
                if (b[j] & (1 << (i - 1))) choices[j].push_back(i);
        std::vector<int> t(n);
        std::vector<int> pos(n, 0);
        int j = 0;
        while (true) {
            if (j == n) {
                if (!f_tuples.count(tuple_code(t))) return false;
                --j;
                while (j >= 0 && pos[j] + 1 == static_cast<int>(choices[j].size())) pos[j--] = 0;
                if (j < 0) return true;
                ++pos[j];
                t[j] = choices[j][pos[j]];
                ++j;
                continue;
            }
            t[j] = choices[j][pos[j]];
            ++j;
        }
    };
    while (true) {
        if (bc.dim_of(box) <= max_dim && all_vertices_in_f(box)) {
            bc.index[std::string(box.begin(), box.end())] = static_cast<int>(bc.boxes.size());
            bc.boxes.push_back(box);
            lim.check_faces(bc.boxes.size(), "box complex");
        }
        int j = n - 1;
        while (j >= 0 && box[j] == full_mask) box[j--] = 1;
        if (j < 0) break;
        ++box[j];
    }
    return bc;
}

// Subcomplex of the boxes whose per-element color sets all lie inside
// color_mask (bit i-1 = color i).  A vertex tuple of such a box only uses
// the retained colors, so the tope test is unchanged and the restriction is
// simply a filter.
inline BoxComplex restrict_boxes(const BoxComplex& bc, std::uint32_t color_mask) {
    BoxComplex out;
    out.k = bc.k;
    out.n = bc.n;
    for (const auto& box : bc.boxes) {
        bool inside = true;
        for (std::uint8_t m : box)
            if (m & ~color_mask) { inside = false; break; }
        if (!inside) continue;
        out.index[std::string(box.begin(), box.end())] = static_cast<int>(out.boxes.size());
        out.boxes.push_back(box);
    }
    return out;
}

// The order complex of the box poset (componentwise inclusion) — the
// barycentric subdivision of L^I.  Vertex v is box bc.boxes[v].
inline SimplicialComplex build_LI(const Chirotope& chi, const std::vector<SignVector>& topes,
                                  const Limits& lim = {}) {
    const BoxComplex bc = build_boxes(chi, topes, 8 * chi.n, lim);
    return order_complex(
        bc.boxes.size(),
        [&bc](int a, int b) {
            const auto& x = bc.boxes[a];
            const auto& y = bc.boxes[b];
            bool strict = false;
            for (std::size_t j = 0; j < x.size(); ++j) {
                if (x[j] & ~y[j]) return false;
                if (x[j] != y[j]) strict = true;
            }
            return strict;
        },
        lim);
}

// Reduced Z2 homology of L^I computed on its cells directly (the boxes form
// a regular CW structure; over Z2 the boundary of a box is the sum of the
// boxes obtained by removing one color from one non-singleton coordinate).
inline std::size_t li_betti_cellular(const BoxComplex& bc, int q) {
    if (q < -1) return 0;
    if (q == -1) return bc.boxes.empty() ? 1 : 0;
    int maxd = -1;
    for (const auto& b : bc.boxes) maxd = std::max(maxd, bc.dim_of(b));
    if (q > maxd) return 0;
    std::vector<std::vector<int>> by_dim(maxd + 1);
    std::vector<int> pos_in_dim(bc.boxes.size());
    for (std::size_t i = 0; i < bc.boxes.size(); ++i) {
        const int d = bc.dim_of(bc.boxes[i]);
        pos_in_dim[i] = static_cast<int>(by_dim[d].size());
        by_dim[d].push_back(static_cast<int>(i));
    }
    auto boundary_rank = [&](int d) -> std::size_t {
        if (d < 0 || d > maxd || by_dim[d].empty()) return 0;
        if (d == 0) {
            Gf2Matrix m(1, by_dim[0].size());
            for (std::size_t j = 0; j < by_dim[0].size(); ++j) m.set(0, j);
            return gf2_rank(std::move(m));
        }
        if (by_dim[d - 1].empty()) return 0;
        Gf2Matrix m(by_dim[d - 1].size(), by_dim[d].size());
        for (std::size_t j = 0; j < by_dim[d].size(); ++j) {
            const auto& box = bc.boxes[by_dim[d][j]];
            for (std::size_t c = 0; c < box.size(); ++c) {
                if (__builtin_popcount(box[c]) < 2) continue;
                for (int i = 0; i < bc.k; ++i) {
                    if (!(box[c] & (1 << i))) continue;
                    std::vector<std::uint8_t> child(box);
                    child[c] = static_cast<std::uint8_t>(box[c] & ~(1 << i));
                    const int idx = bc.find(child);
                    if (idx < 0) throw parse_error("box complex: boundary box missing");
                    m.set(static_cast<std::size_t>(pos_in_dim[idx]), j);
                }
            }
        }
        return gf2_rank(std::move(m));
    };
    const std::size_t nq = by_dim[q].size();
    if (nq == 0) return 0;
    return nq - boundary_rank(q) - boundary_rank(q + 1);
}

// ---- proof pipeline ---------------------------------------------------------

// K^I = barycentric subdivision of the (|I|-1)-skeleton of L^I (boxes with
// coordinates inside I), labels by singleton coordinates; the rainbow chain's
// bottom is a vertex tuple which converts into the certificate.
inline TransversalCertificate transversal_pipeline(const TopeCollection& tc,
                                                   const Limits& lim = {}) {
    const TopeSet ts = TopeSet::of(tc.chi, lim);
    validate_tope_collection(tc, ts, false);
    const int n = tc.chi.n;
    const int k = static_cast<int>(tc.topes.size());
    const bool rank_mode = !tc.multiplicities.empty();
    if (!rank_mode && k != n)
        throw parse_error("pipeline square mode needs as many topes as elements");
    if (rank_mode && k != tc.chi.r)
        throw parse_error("pipeline rank mode needs rank-many topes");
    if (n > 4 || k > 4)
        throw refusal_error("pipeline: supported only at tiny scale (n, colors <= 4)");

    const BoxComplex bc = build_boxes(tc.chi, tc.topes, k - 1, lim);
    // label of a box: smallest color i with >= needed(i) singleton coordinates {i}
    auto label_of = [&](const std::vector<std::uint8_t>& box) -> int {
        for (int i = 1; i <= k; ++i) {
            const int needed = rank_mode ? tc.multiplicities[i - 1] : 1;
            int have = 0;
            for (std::uint8_t m : box)
                if (m == (1 << (i - 1))) ++have;
            if (have >= needed) return i;
        }
        return 0;
    };
    Labeling lab;
    for (std::size_t v = 0; v < bc.boxes.size(); ++v) {
        const int l = label_of(bc.boxes[v]);
        if (l == 0)
            throw theorem_violation("pipeline: a box of the skeleton carries no label");
        lab[static_cast<int>(v)] = l;
    }
    auto box_lt = [&bc](int a, int b) {
        const auto& x = bc.boxes[a];
        const auto& y = bc.boxes[b];
        bool strict = false;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] & ~y[j]) return false;
            if (x[j] != y[j]) strict = true;
        }
        return strict;
    };
    ComplexFamily fam = ComplexFamily::with_colors(k);
    const std::uint32_t full = (1u << k) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int card = __builtin_popcount(mask);
        std::vector<int> members;
        for (std::size_t v = 0; v < bc.boxes.size(); ++v) {
            bool inside = true;
            int d = 0;
            for (std::uint8_t m : bc.boxes[v]) {
                if (m & ~mask) { inside = false; break; }
                d += __builtin_popcount(m) - 1;
            }
            if (inside && d <= card - 1) members.push_back(static_cast<int>(v));
        }
        SimplicialComplex local = order_complex(
            members.size(), [&](int a, int b) { return box_lt(members[a], members[b]); }, lim);
        std::vector<Face> remapped;
        for (int d = 0; d <= local.dim(); ++d)
            for (Face f : local.faces(d)) {
                for (int& v : f) v = members[v];
                std::sort(f.begin(), f.end());
                remapped.push_back(std::move(f));
            }
        fam.at(mask) = SimplicialComplex::from_closed_set(std::move(remapped));
    }

    const Face rainbow = find_rainbow_simplex(fam, lab, lim);
    // bottom of the chain = the box of minimal dimension: a vertex tuple
    int bottom = rainbow[0];
    for (int v : rainbow)
        if (bc.dim_of(bc.boxes[v]) < bc.dim_of(bc.boxes[bottom])) bottom = v;
    const auto& base = bc.boxes[bottom];
    if (bc.dim_of(base) != 0)
        throw theorem_violation("pipeline: rainbow chain has no vertex tuple at its bottom");
    TransversalCertificate cert;
    cert.tope = SignVector(static_cast<std::size_t>(n));
    cert.element_color.assign(n, 0);
    for (int j = 0; j < n; ++j) {
        const int i = __builtin_ctz(base[j]) + 1;
        cert.element_color[j] = i;
        cert.tope[j] = tc.topes[i - 1][j];
    }
    verify_transversal_certificate(tc, ts, cert);
    return cert;
}

} // namespace omwb
