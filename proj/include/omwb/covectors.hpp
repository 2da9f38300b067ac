// Cocircuits, covectors, vectors, topes: the sign-vector families attached to
// a chirotope.
//
// Cocircuits are computed as the circuits of the dual sign map.  Covectors
// (resp. vectors) are the composition closure of the cocircuits (resp.
// circuits) together with the zero vector; topes are the conformally maximal
// covectors.
#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "chirotope.hpp"
#include "circuits.hpp"
#include "limits.hpp"
#include "sign_vector.hpp"

namespace omwb {

inline std::vector<SignVector> cocircuits_from_chirotope(const Chirotope& chi) {
    return circuits_from_chirotope(dual(chi));
}

// Closure of {0} u gens under left-biased composition, deterministically
// ordered.  Composition is associative and idempotent on a fixed generator
// set, so a work-list pass that composes every known element with every
// generator reaches the full closure.
inline std::vector<SignVector> compose_closure(const std::vector<SignVector>& gens, int n,
                                               const Limits& lim = {}) {
    lim.check_ground_set(n, "compose_closure");
    std::vector<SignVector> out;
    std::unordered_set<std::uint64_t> seen;
    auto push = [&](const SignVector& x) {
        if (seen.insert(x.key()).second) out.push_back(x);
    };
    push(SignVector(static_cast<std::size_t>(n)));
    for (const auto& g : gens) push(g);
    for (std::size_t i = 0; i < out.size(); ++i) {
        lim.check_faces(out.size(), "compose_closure");
        for (const auto& g : gens) push(compose(out[i], g));
    }
    sort_sign_vectors(out);
    return out;
}

inline std::vector<SignVector> covectors_of(const Chirotope& chi, const Limits& lim = {}) {
    return compose_closure(cocircuits_from_chirotope(chi), chi.n, lim);
}

inline std::vector<SignVector> vectors_of(const Chirotope& chi, const Limits& lim = {}) {
    return compose_closure(circuits_from_chirotope(chi), chi.n, lim);
}

// Conformally maximal covectors.
inline std::vector<SignVector> topes_of(const Chirotope& chi, const Limits& lim = {}) {
    const auto cov = covectors_of(chi, lim);
    std::vector<SignVector> out;
    for (const auto& x : cov) {
        bool maximal = true;
        for (const auto& y : cov)
            if (strictly_below(x, y)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(x);
    }
    return out;
}

inline std::vector<SignVector> positive_circuits_of(const Chirotope& chi) {
    std::vector<SignVector> out;
    for (const auto& c : circuits_from_chirotope(chi))
        if (c.is_positive()) out.push_back(c);
    return out;
}

// All positive vectors: every vector decomposes into a conformal union of
// circuits, so the positive ones are exactly the closure of the positive
// circuits (the interval [0, X] of a positive X stays positive).
inline std::vector<SignVector> positive_vectors_of(const Chirotope& chi, const Limits& lim = {}) {
    return compose_closure(positive_circuits_of(chi), chi.n, lim);
}

// Orthogonality route: X is a covector iff it is orthogonal to every circuit.
inline bool is_covector_by_orthogonality(const std::vector<SignVector>& circuits,
                                         const SignVector& x) {
    for (const auto& c : circuits)
        if (!orthogonal(x, c)) return false;
    return true;
}

} // namespace omwb
