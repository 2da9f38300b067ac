// Colorful Caratheodory engines over oriented matroids.
//
// Conic version: given positive circuits C_1..C_r of a rank-r chirotope, all
// containing a common element e, there is a positive circuit through e that
// picks at most one element from each C_i \ {e}.  Convex version: rank r-1,
// r positive circuits, no shared element required.  Both are searched
// directly (tope-free: enumerate positive circuits, test a bipartite matching
// between support elements and colors); the conic statement additionally has
// a full proof-pipeline realization through the rainbow engine.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "chirotope.hpp"
#include "circuits.hpp"
#include "covectors.hpp"
#include "errors.hpp"
#include "matching.hpp"
#include "poset.hpp"
#include "rainbow.hpp"
#include "rational_matrix.hpp"
#include "sign_vector.hpp"

namespace omwb {

struct ConicInstance {
    Chirotope chi;
    int e = 0;
    std::vector<SignVector> circuits; // one per color, all positive, all containing e
};

struct RainbowCertificate {
    SignVector circuit;                          // the positive circuit found
    std::vector<std::pair<int, int>> assignment; // (element, color), sorted by element
};

namespace detail {

inline bool support_lex_less(const SignVector& a, const SignVector& b) {
    const auto sa = a.support(), sb = b.support();
    return sa < sb;
}

inline bool is_positive_circuit_of(const std::vector<SignVector>& circuits, const SignVector& c) {
    if (!c.is_positive() || c.is_zero()) return false;
    for (const auto& x : circuits)
        if (x == c) return true;
    return false;
}

// Injective color assignment covering `elements`, where allowed(f) lists the
// colors whose circuit contains f (ascending).  Deterministic via Kuhn.
inline std::optional<std::vector<std::pair<int, int>>> color_matching(
    const std::vector<int>& elements, const std::vector<SignVector>& circuits) {
    std::vector<std::vector<int>> adj(elements.size());
    for (std::size_t l = 0; l < elements.size(); ++l)
        for (std::size_t i = 0; i < circuits.size(); ++i)
            if (circuits[i][elements[l]] != 0) adj[l].push_back(static_cast<int>(i));
    const Matching m = max_bipartite_matching(static_cast<int>(elements.size()),
                                              static_cast<int>(circuits.size()), adj);
    if (m.size != static_cast<int>(elements.size())) return std::nullopt;
    std::vector<std::pair<int, int>> out;
    for (std::size_t l = 0; l < elements.size(); ++l)
        out.emplace_back(elements[l], m.left_to_right[l] + 1); // colors are 1-based
    return out;
}

} // namespace detail

inline void validate_conic_instance(const ConicInstance& inst) {
    if (inst.e < 0 || inst.e >= inst.chi.n)
        throw parse_error("conic instance: shared element out of range");
    if (static_cast<int>(inst.circuits.size()) != inst.chi.r)
        throw parse_error("conic instance: need exactly rank-many circuits, got " +
                          std::to_string(inst.circuits.size()) + " for rank " +
                          std::to_string(inst.chi.r));
    const auto all = circuits_from_chirotope(inst.chi);
    for (const auto& c : inst.circuits) {
        if (c.size() != static_cast<std::size_t>(inst.chi.n))
            throw parse_error("conic instance: circuit length differs from ground set size");
        if (!detail::is_positive_circuit_of(all, c))
            throw parse_error("conic instance: " + c.str() + " is not a positive circuit");
        if (c[inst.e] != +1)
            throw parse_error("conic instance: circuit " + c.str() +
                              " misses the shared element " + std::to_string(inst.e));
    }
}

// Independent re-verification of a certificate against its instance.
inline void verify_conic_certificate(const ConicInstance& inst, const RainbowCertificate& cert) {
    const auto all = circuits_from_chirotope(inst.chi);
    if (!detail::is_positive_circuit_of(all, cert.circuit))
        throw theorem_violation("certificate circuit is not a positive circuit");
    if (cert.circuit[inst.e] != +1)
        throw theorem_violation("certificate circuit misses the shared element");
    std::vector<int> expected = cert.circuit.support();
    expected.erase(std::find(expected.begin(), expected.end(), inst.e));
    std::vector<int> got;
    std::vector<bool> color_used(inst.circuits.size() + 1, false);
    for (const auto& [f, i] : cert.assignment) {
        got.push_back(f);
        if (i < 1 || i > static_cast<int>(inst.circuits.size()))
            throw theorem_violation("certificate assigns an out-of-range color");
        if (color_used[i]) throw theorem_violation("certificate assignment is not injective");
        color_used[i] = true;
        if (inst.circuits[i - 1][f] == 0)
            throw theorem_violation("certificate assigns element " + std::to_string(f) +
                                    " to a circuit that does not contain it");
    }
    std::sort(got.begin(), got.end());
    if (got != expected)
        throw theorem_violation("certificate assignment domain is not the support minus e");
}

// Direct search: enumerate positive circuits through e in support-lex order,
// return the first admitting an injective color assignment.
inline RainbowCertificate find_rainbow_conic(const ConicInstance& inst) {
    validate_conic_instance(inst);
    std::vector<SignVector> candidates;
    for (const auto& c : circuits_from_chirotope(inst.chi))
        if (c.is_positive() && c[inst.e] == +1) candidates.push_back(c);
    std::sort(candidates.begin(), candidates.end(), detail::support_lex_less);
    for (const auto& c : candidates) {
        std::vector<int> elements = c.support();
        elements.erase(std::find(elements.begin(), elements.end(), inst.e));
        if (const auto asg = detail::color_matching(elements, inst.circuits)) {
            RainbowCertificate cert{c, *asg};
            verify_conic_certificate(inst, cert);
            return cert;
        }
    }
    throw theorem_violation("no positive circuit through element " + std::to_string(inst.e) +
                            " admits an injective color assignment; instance sign map " +
                            std::string(write_chi(inst.chi)));
}

// Convex version: rank(chi) + 1 positive circuits, certificate circuit's full
// support injectively assigned.
inline void verify_convex_certificate(const Chirotope& chi,
                                      const std::vector<SignVector>& circuits,
                                      const RainbowCertificate& cert) {
    const auto all = circuits_from_chirotope(chi);
    if (!detail::is_positive_circuit_of(all, cert.circuit))
        throw theorem_violation("certificate circuit is not a positive circuit");
    std::vector<int> expected = cert.circuit.support();
    std::vector<int> got;
    std::vector<bool> color_used(circuits.size() + 1, false);
    for (const auto& [f, i] : cert.assignment) {
        got.push_back(f);
        if (i < 1 || i > static_cast<int>(circuits.size()))
            throw theorem_violation("certificate assigns an out-of-range color");
        if (color_used[i]) throw theorem_violation("certificate assignment is not injective");
        color_used[i] = true;
        if (circuits[i - 1][f] == 0)
            throw theorem_violation("certificate assigns element " + std::to_string(f) +
                                    " to a circuit that does not contain it");
    }
    std::sort(got.begin(), got.end());
    if (got != expected) throw theorem_violation("certificate assignment domain is not the support");
}

inline RainbowCertificate find_rainbow_convex(const Chirotope& chi,
                                              const std::vector<SignVector>& circuits) {
    if (static_cast<int>(circuits.size()) != chi.r + 1)
        throw parse_error("convex search: need rank+1 circuits, got " +
                          std::to_string(circuits.size()) + " for rank " + std::to_string(chi.r));
    const auto all = circuits_from_chirotope(chi);
    for (const auto& c : circuits)
        if (!detail::is_positive_circuit_of(all, c))
            throw parse_error("convex search: " + c.str() + " is not a positive circuit");
    std::vector<SignVector> candidates;
    for (const auto& c : all)
        if (c.is_positive()) candidates.push_back(c);
    std::sort(candidates.begin(), candidates.end(), detail::support_lex_less);
    for (const auto& c : candidates) {
        if (const auto asg = detail::color_matching(c.support(), circuits)) {
            RainbowCertificate cert{c, *asg};
            verify_convex_certificate(chi, circuits, cert);
            return cert;
        }
    }
    throw theorem_violation("no positive circuit admits an injective full-support assignment; "
                            "instance sign map " + std::string(write_chi(chi)));
}

// ---- proof pipeline ---------------------------------------------------------

// Runs the conic proof end to end on a matrix realization:
//   1. duplicate columns so the circuit supports pairwise meet only at e and
//      the ground set is exactly the union of supports (colors own their
//      copies); row-reduce to full row rank;
//   2. K^I = order complex of the positive vectors X of the extended matroid
//      with (every positive circuit below X positive at e), 1 <= height(X)
//      <= |I|, support inside the colors of I;
//   3. label X by the color whose extended circuit meets its support the
//      most (ties: smallest color), build the chain family, take a rainbow
//      chain X_1 < ... < X_r;
//   4. X_1 has height 1, i.e. is a positive circuit; project its copies back
//      and read the colors off as the assignment.
// The projection steps re-verify every property they rely on and the final
// certificate is re-verified against the original instance.
inline RainbowCertificate conic_pipeline(const RationalMatrix& m, int e,
                                         const std::vector<SignVector>& given_circuits,
                                         const Limits& lim = {}) {
    lim.check_ground_set(m.cols, "conic_pipeline");
    ConicInstance inst{chirotope_from_matrix(m), e, given_circuits};
    validate_conic_instance(inst);
    const int r = inst.chi.r;

    // Loop shortcut: the single-element positive circuit on e certifies.
    {
        bool zero_col = true;
        for (int i = 0; i < m.rows; ++i)
            if (m.at(i, e) != 0) zero_col = false;
        if (zero_col) {
            SignVector c(static_cast<std::size_t>(m.cols));
            c[e] = +1;
            RainbowCertificate cert{c, {}};
            verify_conic_certificate(inst, cert);
            return cert;
        }
    }

    // Extended matrix: column 0 = e, then per color the copies of its
    // support away from e.  The configured ground-set limit applies to the
    // input; the extension is bounded by 1 + r * r and gets its own budget.
    std::vector<int> col_origin{e}, col_color{0};
    RationalMatrix ext(m.rows, 0);
    {
        std::vector<std::vector<BigRat>> cols;
        auto push_col = [&](int src) {
            std::vector<BigRat> c;
            for (int i = 0; i < m.rows; ++i) c.push_back(m.at(i, src));
            cols.push_back(std::move(c));
        };
        push_col(e);
        for (int i = 1; i <= r; ++i)
            for (int f : given_circuits[i - 1].support())
                if (f != e) {
                    push_col(f);
                    col_origin.push_back(f);
                    col_color.push_back(i);
                }
        ext = RationalMatrix(m.rows, static_cast<int>(cols.size()));
        for (int i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                ext.at(i, static_cast<int>(j)) = cols[j][i];
    }
    const RationalMatrix reduced = row_reduced(ext);
    const Chirotope ext_chi = chirotope_from_matrix(reduced);
    Limits ext_lim = lim;
    ext_lim.max_ground_set = std::max(lim.max_ground_set, ext_chi.n);

    const auto ext_pos_circuits = positive_circuits_of(ext_chi);
    const auto poset = heights_by_longest_chain(positive_vectors_of(ext_chi, ext_lim));

    // Vertices: positive vectors through e only (element 0), height >= 1.
    std::vector<int> vert_ids;         // indices into poset.elems
    std::vector<std::uint32_t> vsupp;  // extended-column support mask
    std::vector<int> vheight, vlabel;
    std::vector<std::uint32_t> color_support(r + 1, 0); // extended support mask per color
    for (std::size_t j = 0; j < col_origin.size(); ++j)
        for (int i = 1; i <= r; ++i)
            if (j == 0 || col_color[j] == i) color_support[i] |= 1u << j;
    for (std::size_t idx = 0; idx < poset.elems.size(); ++idx) {
        if (poset.height[idx] < 1 || poset.height[idx] > r) continue;
        const SignVector& x = poset.elems[idx];
        bool ok = true;
        for (const auto& c : ext_pos_circuits)
            if (conforms(c, x) && c[0] != +1) { ok = false; break; }
        if (!ok) continue;
        std::uint32_t support_mask = 0;
        for (int f : x.support()) support_mask |= 1u << f;
        int best = 0, best_i = 0;
        for (int i = 1; i <= r; ++i) {
            const int overlap = __builtin_popcount(support_mask & color_support[i]);
            if (overlap > best) { best = overlap; best_i = i; }
        }
        vert_ids.push_back(static_cast<int>(idx));
        vsupp.push_back(support_mask);
        vheight.push_back(poset.height[idx]);
        vlabel.push_back(best_i);
    }

    ComplexFamily fam = ComplexFamily::with_colors(r);
    Labeling lab;
    for (std::size_t v = 0; v < vert_ids.size(); ++v) lab[static_cast<int>(v)] = vlabel[v];
    const std::uint32_t full = (1u << r) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int card = __builtin_popcount(mask);
        std::uint32_t union_support = 0;
        for (int i = 1; i <= r; ++i)
            if (mask & (1u << (i - 1))) union_support |= color_support[i];
        std::vector<int> members;
        for (std::size_t v = 0; v < vert_ids.size(); ++v)
            if ((vsupp[v] & ~union_support) == 0 && vheight[v] <= card)
                members.push_back(static_cast<int>(v));
        fam.at(mask) = order_complex(
            members.size(),
            [&](int a, int b) {
                return strictly_below(poset.elems[vert_ids[members[a]]],
                                      poset.elems[vert_ids[members[b]]]);
            },
            ext_lim);
        // order_complex numbers vertices 0..members-1; remap to global ids
        std::vector<Face> remapped;
        for (int d = 0; d <= fam.at(mask).dim(); ++d)
            for (Face f : fam.at(mask).faces(d)) {
                for (int& v : f) v = members[v];
                std::sort(f.begin(), f.end());
                remapped.push_back(std::move(f));
            }
        fam.at(mask) = SimplicialComplex::from_closed_set(std::move(remapped));
    }

    const Face rainbow = find_rainbow_simplex(fam, lab, ext_lim);

    // Bottom of the chain = unique member of height 1: a positive circuit.
    int bottom = rainbow[0];
    for (int v : rainbow)
        if (vheight[v] < vheight[bottom]) bottom = v;
    if (vheight[bottom] != 1)
        throw theorem_violation("pipeline: rainbow chain has no height-1 element");
    const SignVector& x1 = poset.elems[vert_ids[bottom]];
    {
        bool is_circ = false;
        for (const auto& c : ext_pos_circuits)
            if (c == x1) is_circ = true;
        if (!is_circ) throw theorem_violation("pipeline: height-1 vector is not a circuit");
    }
    if (x1[0] != +1) throw theorem_violation("pipeline: extracted circuit misses the element");

    // Project copies back to original columns; colors must be pairwise
    // distinct and origins must not collide.
    SignVector projected(static_cast<std::size_t>(m.cols));
    projected[e] = +1;
    std::vector<std::pair<int, int>> assignment;
    std::vector<bool> color_used(r + 1, false);
    for (int j : x1.support()) {
        if (j == 0) continue;
        const int f = col_origin[j], color = col_color[j];
        if (projected[f] != 0)
            throw theorem_violation("pipeline: two copies of one element in the circuit");
        if (color_used[color])
            throw theorem_violation("pipeline: two elements drawn from one color");
        projected[f] = +1;
        color_used[color] = true;
        assignment.emplace_back(f, color);
    }
    std::sort(assignment.begin(), assignment.end());
    RainbowCertificate cert{projected, assignment};
    verify_conic_certificate(inst, cert);
    return cert;
}

} // namespace omwb
