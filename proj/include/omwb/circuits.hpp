// Circuits of a chirotope, and the circuit-axiom validity check.
//
// For every (r+1)-subset L = {l_0 < ... < l_r} the sign vector
//     C(l_i) = (-1)^i * chi(L \ {l_i})
// is (when non-zero) a circuit up to sign.  We collect all such candidates,
// close under negation, and keep the support-minimal ones; for a valid
// chirotope the minimality filter is a no-op, but it keeps the output
// well-defined on malformed inputs fed to the checker.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "chirotope.hpp"
#include "sign_vector.hpp"
#include "subsets.hpp"

namespace omwb {

namespace detail {

inline std::vector<SignVector> circuit_candidates(const Chirotope& chi) {
    std::vector<SignVector> out;
    if (chi.r >= chi.n) return out; // free: no dependent sets
    std::unordered_set<std::uint64_t> seen;
    for (const auto& lam : all_subsets(chi.n, chi.r + 1)) {
        SignVector c(chi.n);
        bool nonzero = false;
        std::vector<int> sub(lam.begin() + 1, lam.end());
        for (int i = 0; i <= chi.r; ++i) {
            // sub = lam with lam[i] removed
            const Sign s = chi(sub);
            const Sign signed_s = (i % 2 == 0) ? s : static_cast<Sign>(-s);
            c[lam[i]] = signed_s;
            if (s != 0) nonzero = true;
            if (i < chi.r) sub[i] = lam[i];
        }
        if (!nonzero) continue;
        for (const SignVector& s : {c, -c})
            if (seen.insert(s.key()).second) out.push_back(s);
    }
    return out;
}

// Keep elements whose support is inclusion-minimal among all supports present.
inline std::vector<SignVector> support_minimal(const std::vector<SignVector>& xs) {
    std::vector<std::uint32_t> supp;
    supp.reserve(xs.size());
    for (const auto& x : xs) {
        std::uint32_t m = 0;
        for (int e : x.support()) m |= 1u << e;
        supp.push_back(m);
    }
    std::vector<SignVector> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < xs.size() && minimal; ++j)
            if (supp[j] != supp[i] && (supp[j] & ~supp[i]) == 0) minimal = false;
        if (minimal) out.push_back(xs[i]);
    }
    return out;
}

} // namespace detail

// All circuits, closed under negation, deterministically ordered.
inline std::vector<SignVector> circuits_from_chirotope(const Chirotope& chi) {
    auto out = detail::support_minimal(detail::circuit_candidates(chi));
    sort_sign_vectors(out);
    return out;
}

// Circuit-axiom check of the candidate family (and hence of the sign map it
// was derived from).  Returns the first violated axiom, or nullopt if the
// family is a valid circuit system:
//   (C0) no member is the zero vector
//   (C1) the family is closed under negation
//   (C2) supports are incomparable: supp(C) <= supp(D) implies C = +/-D
//   (C3) weak elimination: C != -D and C(e) = +, D(e) = - imply some member Z
//        with Z+ <= (C+ u D+) \ e and Z- <= (C- u D-) \ e.
inline std::optional<std::string> circuit_axiom_failure(const std::vector<SignVector>& cs) {
    const std::size_t m = cs.size();
    std::vector<std::uint32_t> plus(m, 0), minus(m, 0);
    std::unordered_set<std::uint64_t> keys;
    for (std::size_t i = 0; i < m; ++i) {
        if (cs[i].is_zero()) return "zero vector listed as a circuit";
        for (std::size_t e = 0; e < cs[i].size(); ++e) {
            if (cs[i][e] > 0) plus[i] |= 1u << e;
            if (cs[i][e] < 0) minus[i] |= 1u << e;
        }
        keys.insert(cs[i].key());
    }
    for (std::size_t i = 0; i < m; ++i)
        if (!keys.count((-cs[i]).key()))
            return "family not closed under negation at " + cs[i].str();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const std::uint32_t si = plus[i] | minus[i], sj = plus[j] | minus[j];
            if ((si & ~sj) == 0 && si != sj)
                return "support of " + cs[i].str() + " strictly inside support of " + cs[j].str();
            if (si == sj && cs[i].key() != cs[j].key() && cs[i].key() != (-cs[j]).key() &&
                !((plus[i] == plus[j]) || (plus[i] == minus[j])))
                return "equal supports with non-opposite signs: " + cs[i].str() + " vs " + cs[j].str();
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (plus[i] == minus[j] && minus[i] == plus[j]) continue; // C = -D
            std::uint32_t both = plus[i] & minus[j];
            while (both) {
                const std::uint32_t e_bit = both & (0u - both);
                both ^= e_bit;
                const std::uint32_t zp_cap = (plus[i] | plus[j]) & ~e_bit;
                const std::uint32_t zm_cap = (minus[i] | minus[j]) & ~e_bit;
                bool found = false;
                for (std::size_t k = 0; k < m && !found; ++k)
                    if ((plus[k] & ~zp_cap) == 0 && (minus[k] & ~zm_cap) == 0) found = true;
                if (!found)
                    return "weak elimination fails for " + cs[i].str() + " and " + cs[j].str() +
                           " at element " + std::to_string(__builtin_ctz(e_bit));
            }
        }
    return std::nullopt;
}

// True iff the sign map's derived candidate family satisfies the circuit
// axioms.  Support-minimality is deliberately not applied first: a malformed
// map whose candidates are support-comparable must fail here.
inline bool check_chirotope(const Chirotope& chi) {
    if (chi.is_identically_zero()) return false;
    return !circuit_axiom_failure(detail::circuit_candidates(chi)).has_value();
}

inline std::optional<std::string> check_chirotope_diagnostic(const Chirotope& chi) {
    if (chi.is_identically_zero()) return "identically zero sign map";
    return circuit_axiom_failure(detail::circuit_candidates(chi));
}

} // namespace omwb
