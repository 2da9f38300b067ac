// Sign vectors over {+, -, 0} with the composition and conformal order used
// throughout the library.
//
// Conventions fixed here once and relied on everywhere:
//   * text form is one character per element, '+', '-' or '0';
//   * deterministic orderings of sign-vector lists are byte-lexicographic on
//     the text form (so '+' < '-' < '0');
//   * composition is the usual left-biased one: (X o Y)(e) = X(e) unless
//     X(e) = 0, in which case Y(e).
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace omwb {

using Sign = std::int8_t; // -1, 0, +1

inline char sign_to_char(Sign s) { return s > 0 ? '+' : (s < 0 ? '-' : '0'); }

inline Sign sign_from_char(char c) {
    switch (c) {
    case '+': return +1;
    case '-': return -1;
    case '0': return 0;
    default: throw parse_error(std::string("invalid sign character '") + c + "'");
    }
}

class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::size_t n) : s_(n, 0) {}
    explicit SignVector(std::vector<Sign> s) : s_(std::move(s)) {}

    static SignVector parse(const std::string& text) {
        std::vector<Sign> s;
        s.reserve(text.size());
        for (char c : text) s.push_back(sign_from_char(c));
        return SignVector(std::move(s));
    }

    std::size_t size() const { return s_.size(); }
    Sign operator[](std::size_t i) const { return s_[i]; }
    Sign& operator[](std::size_t i) { return s_[i]; }

    std::string str() const {
        std::string out;
        out.reserve(s_.size());
        for (Sign v : s_) out.push_back(sign_to_char(v));
        return out;
    }

    std::vector<int> support() const {
        std::vector<int> sup;
        for (std::size_t i = 0; i < s_.size(); ++i)
            if (s_[i] != 0) sup.push_back(static_cast<int>(i));
        return sup;
    }

    std::size_t support_size() const {
        std::size_t k = 0;
        for (Sign v : s_) k += (v != 0);
        return k;
    }

    bool is_zero() const {
        return std::all_of(s_.begin(), s_.end(), [](Sign v) { return v == 0; });
    }
    bool is_positive() const { // no negative entry; zero vector counts
        return std::all_of(s_.begin(), s_.end(), [](Sign v) { return v >= 0; });
    }
    bool full_support() const {
        return std::all_of(s_.begin(), s_.end(), [](Sign v) { return v != 0; });
    }

    SignVector operator-() const {
        std::vector<Sign> t(s_);
        for (Sign& v : t) v = static_cast<Sign>(-v);
        return SignVector(std::move(t));
    }

    friend bool operator==(const SignVector& a, const SignVector& b) { return a.s_ == b.s_; }
    friend bool operator!=(const SignVector& a, const SignVector& b) { return !(a == b); }

    // Packed 2-bit key (00 zero, 01 plus, 10 minus); usable for n <= 32.
    std::uint64_t key() const {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < s_.size(); ++i) {
            std::uint64_t bits = s_[i] > 0 ? 1u : (s_[i] < 0 ? 2u : 0u);
            k |= bits << (2 * i);
        }
        return k;
    }

private:
    std::vector<Sign> s_;
};

// X o Y, left-biased composition.
inline SignVector compose(const SignVector& x, const SignVector& y) {
    if (x.size() != y.size()) throw parse_error("compose: length mismatch");
    SignVector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] != 0 ? x[i] : y[i];
    return z;
}

// Conformal order: x <= y iff every non-zero entry of x agrees with y.
inline bool conforms(const SignVector& x, const SignVector& y) {
    if (x.size() != y.size()) throw parse_error("conforms: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0 && x[i] != y[i]) return false;
    return true;
}

inline bool strictly_below(const SignVector& x, const SignVector& y) {
    return conforms(x, y) && x != y;
}

// Sign-vector orthogonality: supports disjoint, or some position agrees in
// sign and some position disagrees.
inline bool orthogonal(const SignVector& x, const SignVector& y) {
    bool agree = false, disagree = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        int p = x[i] * y[i];
        if (p > 0) agree = true;
        else if (p < 0) disagree = true;
    }
    return agree == disagree;
}

// Deterministic listing order: byte order of the text form ('+' < '-' < '0').
inline bool text_less(const SignVector& a, const SignVector& b) { return a.str() < b.str(); }

inline void sort_sign_vectors(std::vector<SignVector>& v) {
    std::sort(v.begin(), v.end(), text_less);
}

struct SignVectorKeyHash {
    std::size_t operator()(std::uint64_t k) const { return std::hash<std::uint64_t>()(k); }
};

} // namespace omwb
