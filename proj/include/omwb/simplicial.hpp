// Finite simplicial complexes on integer vertex ids, with mod-2 homology.
//
// Faces are sorted vertex lists, stored per dimension in lexicographic order,
// always downward closed.  Reduced homology uses the augmented chain complex:
// C_{-1} = Z2 generated by the empty face, so betti(-1) = 1 exactly for the
// empty complex ("(-1)-connected" = non-empty).
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "gf2.hpp"
#include "limits.hpp"

namespace omwb {

using Face = std::vector<int>; // sorted ascending, distinct vertex ids

namespace detail {
struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::uint64_t h = 14695981039346656037ull;
        for (int v : f) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};
} // namespace detail

class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    // Downward closure of the given faces.
    static SimplicialComplex from_faces(const std::vector<Face>& faces, const Limits& lim = {}) {
        std::unordered_set<Face, detail::FaceHash> all;
        for (Face f : faces) {
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw parse_error("complex: face lists a vertex twice");
            if (f.empty()) continue;
            if (f.size() > 20) throw refusal_error("complex: face dimension beyond supported scale");
            const std::uint32_t full = (f.size() >= 32) ? 0 : (1u << f.size());
            for (std::uint32_t m = 1; m < full; ++m) {
                Face sub;
                for (std::size_t b = 0; b < f.size(); ++b)
                    if (m & (1u << b)) sub.push_back(f[b]);
                all.insert(std::move(sub));
                lim.check_faces(all.size(), "complex closure");
            }
        }
        return from_closed_set(std::vector<Face>(all.begin(), all.end()));
    }

    // The input must already be downward closed (e.g. a family of chains).
    static SimplicialComplex from_closed_set(std::vector<Face> faces) {
        SimplicialComplex k;
        for (Face& f : faces) {
            const std::size_t d = f.size() - 1;
            if (k.by_dim_.size() <= d) k.by_dim_.resize(d + 1);
            k.by_dim_[d].push_back(std::move(f));
        }
        for (auto& level : k.by_dim_) {
            std::sort(level.begin(), level.end());
            level.erase(std::unique(level.begin(), level.end()), level.end());
        }
        while (!k.by_dim_.empty() && k.by_dim_.back().empty()) k.by_dim_.pop_back();
        for (std::size_t d = 0; d + 1 < k.by_dim_.size(); ++d)
            if (k.by_dim_[d].empty())
                throw parse_error("complex: empty dimension below a non-empty one");
        return k;
    }

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }

    std::size_t face_count() const {
        std::size_t c = 0;
        for (const auto& level : by_dim_) c += level.size();
        return c;
    }

    const std::vector<Face>& faces(int d) const {
        static const std::vector<Face> none;
        if (d < 0 || d > dim()) return none;
        return by_dim_[static_cast<std::size_t>(d)];
    }

    bool contains(const Face& f) const {
        if (f.empty()) return !empty();
        const int d = static_cast<int>(f.size()) - 1;
        const auto& level = faces(d);
        return std::binary_search(level.begin(), level.end(), f);
    }

    // Index of a face within its dimension's lex-sorted list; -1 if absent.
    long face_index(const Face& f) const {
        const int d = static_cast<int>(f.size()) - 1;
        const auto& level = faces(d);
        const auto it = std::lower_bound(level.begin(), level.end(), f);
        if (it == level.end() || *it != f) return -1;
        return it - level.begin();
    }

    std::vector<int> vertex_ids() const {
        std::vector<int> out;
        for (const auto& f : faces(0)) out.push_back(f[0]);
        return out;
    }

    // Faces that are not proper subfaces of another face.
    std::vector<Face> facets() const {
        std::vector<Face> out;
        for (int d = 0; d <= dim(); ++d) {
            std::unordered_set<Face, detail::FaceHash> covered;
            for (const auto& f : faces(d + 1))
                for (std::size_t i = 0; i < f.size(); ++i) {
                    Face sub(f);
                    sub.erase(sub.begin() + i);
                    covered.insert(std::move(sub));
                }
            for (const auto& f : faces(d))
                if (!covered.count(f)) out.push_back(f);
        }
        return out;
    }

  private:
    std::vector<std::vector<Face>> by_dim_;
};

// Boundary map del_q : C_q -> C_{q-1} over GF(2); del_0 is the augmentation
// onto C_{-1} = Z2.  Out-of-range q yields an empty-column matrix.
inline Gf2Matrix boundary_matrix(const SimplicialComplex& k, int q) {
    if (q < 0) return Gf2Matrix(0, 0);
    if (q > k.dim()) return Gf2Matrix(q == 0 ? 1 : k.faces(q - 1).size(), 0);
    const auto& cols = k.faces(q);
    if (q == 0) {
        Gf2Matrix m(1, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) m.set(0, j);
        return m;
    }
    const auto& rows = k.faces(q - 1);
    Gf2Matrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) {
            Face sub(cols[j]);
            sub.erase(sub.begin() + i);
            const long r = k.face_index(sub);
            if (r < 0) throw parse_error("complex: not downward closed");
            m.set(static_cast<std::size_t>(r), j);
        }
    return m;
}

// Rank of reduced q-th homology over Z2.
inline std::size_t betti_z2(const SimplicialComplex& k, int q) {
    if (q < -1) return 0;
    if (q == -1) return k.empty() ? 1 : 0;
    if (q > k.dim()) return 0;
    const std::size_t nq = k.faces(q).size();
    const std::size_t rank_q = gf2_rank(boundary_matrix(k, q));
    const std::size_t rank_q1 = (q + 1 > k.dim()) ? 0 : gf2_rank(boundary_matrix(k, q + 1));
    return nq - rank_q - rank_q1;
}

// True iff reduced Z2 homology vanishes in every dimension q with
// -1 <= q <= m (so m = -1 just asks the complex to be non-empty).
inline bool reduced_homology_trivial_up_to(const SimplicialComplex& k, int m) {
    for (int q = -1; q <= m; ++q)
        if (betti_z2(k, q) != 0) return false;
    return true;
}

inline SimplicialComplex skeleton(const SimplicialComplex& k, int d) {
    std::vector<Face> fs;
    for (int q = 0; q <= std::min(d, k.dim()); ++q)
        for (const auto& f : k.faces(q)) fs.push_back(f);
    return SimplicialComplex::from_closed_set(std::move(fs));
}

// Order complex of a strict partial order on elements 0..count-1: faces are
// the chains.  The relation gets an irreflexivity/antisymmetry spot check,
// plus transitivity when small enough to afford it.
inline SimplicialComplex order_complex(std::size_t count,
                                       const std::function<bool(int, int)>& less,
                                       const Limits& lim = {}) {
    std::vector<std::vector<int>> above(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (less(static_cast<int>(i), static_cast<int>(i)))
            throw parse_error("order_complex: relation is not irreflexive");
        for (std::size_t j = 0; j < count; ++j)
            if (less(static_cast<int>(i), static_cast<int>(j))) {
                if (less(static_cast<int>(j), static_cast<int>(i)))
                    throw parse_error("order_complex: relation is not antisymmetric");
                above[i].push_back(static_cast<int>(j));
            }
    }
    if (count <= 300) {
        for (std::size_t i = 0; i < count; ++i)
            for (int j : above[i])
                for (int l : above[j])
                    if (!less(static_cast<int>(i), l))
                        throw parse_error("order_complex: relation is not transitive");
    }
    std::vector<Face> chains;
    Face cur;
    std::function<void(int)> grow = [&](int last) {
        chains.push_back(cur);
        lim.check_faces(chains.size(), "order_complex");
        for (int j : above[last]) {
            cur.push_back(j);
            grow(j);
            cur.pop_back();
        }
    };
    for (std::size_t i = 0; i < count; ++i) {
        cur.assign(1, static_cast<int>(i));
        grow(static_cast<int>(i));
    }
    // chains are ascending in the order, not by vertex id: sort each face
    for (Face& f : chains) std::sort(f.begin(), f.end());
    return SimplicialComplex::from_closed_set(std::move(chains));
}

struct Subdivision {
    SimplicialComplex complex;
    std::vector<Face> vertex_face; // subdivision vertex id -> original face
};

// Barycentric subdivision: order complex of the face poset (empty face
// excluded).  Vertex v of the result stands for the original face
// vertex_face[v]; ids are assigned by (dimension, lex) order.
inline Subdivision barycentric_subdivision_with_registry(const SimplicialComplex& k,
                                                         const Limits& lim = {}) {
    Subdivision s;
    for (int d = 0; d <= k.dim(); ++d)
        for (const auto& f : k.faces(d)) s.vertex_face.push_back(f);
    const auto& reg = s.vertex_face;
    s.complex = order_complex(
        reg.size(),
        [&reg](int a, int b) {
            return reg[a].size() < reg[b].size() &&
                   std::includes(reg[b].begin(), reg[b].end(), reg[a].begin(), reg[a].end());
        },
        lim);
    return s;
}

inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& k,
                                                 const Limits& lim = {}) {
    return barycentric_subdivision_with_registry(k, lim).complex;
}

// ---- .cpx serialization -----------------------------------------------------
//
// One face per line as space-separated integer vertex ids; the complex is the
// downward closure of the listed faces; lines whose first non-blank character
// is '#' are comments.

inline SimplicialComplex parse_cpx(const std::string& text, const Limits& lim = {}) {
    std::vector<Face> faces;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        Face f;
        bool comment = false;
        while (ls >> tok) {
            if (tok[0] == '#') {
                if (f.empty()) comment = true;
                else throw parse_error("cpx: comment marker after vertex tokens");
                break;
            }
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw parse_error("cpx: vertex token is not an integer: " + tok);
            }
            if (used != tok.size() || v < 0)
                throw parse_error("cpx: vertex token is not a non-negative integer: " + tok);
            f.push_back(v);
        }
        if (comment || f.empty()) continue;
        faces.push_back(std::move(f));
    }
    return SimplicialComplex::from_faces(faces, lim);
}

inline std::string write_cpx(const SimplicialComplex& k) {
    if (k.empty()) return "# empty complex\n";
    std::string out;
    for (const auto& f : k.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(f[i]);
        }
        out.push_back('\n');
    }
    return out;
}

} // namespace omwb
