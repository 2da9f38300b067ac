// Chirotopes: rank-r basis sign maps on ground set {0, ..., n-1}.
//
// Values are stored in the lexicographic order of sorted r-subsets.  The .chi
// interchange format is exactly two lines:
//
//     n r
//     <C(n,r) characters over {+,-,0}>
//
// followed by an optional trailing newline; any other byte is a parse error.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational_matrix.hpp"
#include "subsets.hpp"

namespace omwb {

struct Chirotope {
    int n = 0;
    int r = 0;
    std::vector<Sign> v; // size C(n,r), lex order of sorted r-subsets

    std::size_t basis_count() const { return v.size(); }

    Sign at_rank(std::size_t rank) const { return v[rank]; }

    // Value on a sorted r-subset.
    Sign operator()(const std::vector<int>& sorted_subset) const {
        return v[lex_rank(sorted_subset, n)];
    }

    bool is_uniform() const {
        for (Sign s : v)
            if (s == 0) return false;
        return true;
    }

    bool is_identically_zero() const {
        for (Sign s : v)
            if (s != 0) return false;
        return true;
    }

    friend bool operator==(const Chirotope& a, const Chirotope& b) {
        return a.n == b.n && a.r == b.r && a.v == b.v;
    }
};

// chi(B) = sign det M[B] for every r-subset B.  Requires rank(M) = r exactly.
inline Chirotope chirotope_from_matrix(const RationalMatrix& m) {
    const int r = m.rows, n = m.cols;
    if (r < 0 || n < 1 || r > n) throw parse_error("chirotope_from_matrix: need 0 <= r <= n, n >= 1");
    if (rank(m) != r) throw parse_error("chirotope_from_matrix: matrix rank is below its row count");
    Chirotope chi;
    chi.n = n;
    chi.r = r;
    chi.v.reserve(binomial(n, r));
    for (const auto& b : all_subsets(n, r))
        chi.v.push_back(static_cast<Sign>(det_sign(m.select_columns(b))));
    return chi;
}

// The all-plus chirotope; realized e.g. by the Vandermonde matrix on nodes
// 1 < 2 < ... < n.
inline Chirotope alternating_chirotope(int n, int r) {
    if (r < 1 || r > n) throw parse_error("alternating_chirotope: need 1 <= r <= n");
    Chirotope chi;
    chi.n = n;
    chi.r = r;
    chi.v.assign(binomial(n, r), +1);
    return chi;
}

// Dual chirotope: chi*(x) = chi(complement(x)) * sign of the permutation
// (x, complement(x)) of the ground set.
inline Chirotope dual(const Chirotope& chi) {
    Chirotope d;
    d.n = chi.n;
    d.r = chi.n - chi.r;
    d.v.reserve(binomial(chi.n, d.r));
    for (const auto& x : all_subsets(chi.n, d.r)) {
        std::vector<bool> in_x(chi.n, false);
        for (int e : x) in_x[e] = true;
        std::vector<int> y;
        y.reserve(chi.r);
        for (int e = 0; e < chi.n; ++e)
            if (!in_x[e]) y.push_back(e);
        std::vector<int> perm(x);
        perm.insert(perm.end(), y.begin(), y.end());
        d.v.push_back(static_cast<Sign>(permutation_sign(perm) * chi(y)));
    }
    return d;
}

// e is a loop iff no basis contains it (equivalently, every cocircuit
// vanishes at e); a coloop iff every basis contains it.
inline std::vector<int> loops(const Chirotope& chi) {
    std::vector<bool> in_basis(chi.n, false);
    std::size_t idx = 0;
    for (const auto& b : all_subsets(chi.n, chi.r)) {
        if (chi.v[idx++] != 0)
            for (int e : b) in_basis[e] = true;
    }
    std::vector<int> out;
    for (int e = 0; e < chi.n; ++e)
        if (!in_basis[e]) out.push_back(e);
    return out;
}

inline std::vector<int> coloops(const Chirotope& chi) {
    std::vector<bool> missed(chi.n, false);
    std::size_t idx = 0;
    for (const auto& b : all_subsets(chi.n, chi.r)) {
        if (chi.v[idx++] != 0) {
            std::vector<bool> in_b(chi.n, false);
            for (int e : b) in_b[e] = true;
            for (int e = 0; e < chi.n; ++e)
                if (!in_b[e]) missed[e] = true;
        }
    }
    std::vector<int> out;
    for (int e = 0; e < chi.n; ++e)
        if (!missed[e]) out.push_back(e);
    return out;
}

// ---- .chi serialization ----------------------------------------------------

inline std::string write_chi(const Chirotope& chi) {
    std::string out = std::to_string(chi.n) + " " + std::to_string(chi.r) + "\n";
    for (Sign s : chi.v) out.push_back(sign_to_char(s));
    out.push_back('\n');
    return out;
}

// Strict parser for the two-line format described above.
inline Chirotope parse_chi(const std::string& bytes) {
    std::size_t p = 0;
    auto read_uint = [&](const char* what) {
        std::size_t start = p;
        while (p < bytes.size() && bytes[p] >= '0' && bytes[p] <= '9') ++p;
        if (p == start) throw parse_error(std::string("chi: expected decimal ") + what);
        if (p - start > 6) throw parse_error(std::string("chi: ") + what + " out of range");
        return std::stoi(bytes.substr(start, p - start));
    };
    const int n = read_uint("n");
    if (p >= bytes.size() || bytes[p] != ' ') throw parse_error("chi: expected single space after n");
    ++p;
    const int r = read_uint("r");
    if (p >= bytes.size() || bytes[p] != '\n') throw parse_error("chi: expected newline after header");
    ++p;
    if (n < 1 || r < 0 || r > n) throw parse_error("chi: need 1 <= n and 0 <= r <= n");
    const std::uint64_t count = binomial(n, r);
    Chirotope chi;
    chi.n = n;
    chi.r = r;
    chi.v.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (p >= bytes.size()) throw parse_error("chi: value line shorter than C(n,r)");
        chi.v.push_back(sign_from_char(bytes[p++]));
    }
    if (p < bytes.size() && bytes[p] == '\n') ++p;
    if (p != bytes.size()) throw parse_error("chi: trailing bytes after value line");
    if (chi.is_identically_zero()) throw parse_error("chi: identically zero sign map");
    return chi;
}

} // namespace omwb
