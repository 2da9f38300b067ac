// Dense GF(2) linear algebra with 64-wide word packing: rank and linear
// solves, sized for desk-scale boundary matrices (a few thousand rows/cols).
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace omwb {

struct Gf2Matrix {
    std::size_t rows = 0, cols = 0, words = 0;
    std::vector<std::uint64_t> bits; // row-major, `words` per row

    Gf2Matrix() = default;
    Gf2Matrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), words((c + 63) / 64), bits(r * words, 0) {}

    void set(std::size_t i, std::size_t j) { bits[i * words + j / 64] |= 1ull << (j % 64); }
    bool get(std::size_t i, std::size_t j) const {
        return (bits[i * words + j / 64] >> (j % 64)) & 1;
    }
    void xor_row_into(std::size_t src, std::size_t dst) {
        for (std::size_t w = 0; w < words; ++w) bits[dst * words + w] ^= bits[src * words + w];
    }
};

inline std::size_t gf2_rank(Gf2Matrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && !m.get(pivot, col)) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != rank)
            for (std::size_t w = 0; w < m.words; ++w)
                std::swap(m.bits[pivot * m.words + w], m.bits[rank * m.words + w]);
        for (std::size_t i = 0; i < m.rows; ++i)
            if (i != rank && m.get(i, col)) m.xor_row_into(rank, i);
        ++rank;
    }
    return rank;
}

// Solve A x = b over GF(2); returns one solution (free variables zero) or
// nullopt when inconsistent.
inline std::optional<std::vector<std::uint8_t>> gf2_solve(const Gf2Matrix& a,
                                                          const std::vector<std::uint8_t>& b) {
    Gf2Matrix m(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t w = 0; w < a.words; ++w) m.bits[i * m.words + w] = a.bits[i * a.words + w];
        // clear any copied bits beyond a.cols (none: a keeps its tail zero), set rhs
        if (b[i]) m.set(i, a.cols);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && !m.get(pivot, col)) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != rank)
            for (std::size_t w = 0; w < m.words; ++w)
                std::swap(m.bits[pivot * m.words + w], m.bits[rank * m.words + w]);
        for (std::size_t i = 0; i < m.rows; ++i)
            if (i != rank && m.get(i, col)) m.xor_row_into(rank, i);
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < m.rows; ++i)
        if (m.get(i, a.cols)) return std::nullopt; // 0 = 1 row
    std::vector<std::uint8_t> x(a.cols, 0);
    for (std::size_t k = 0; k < rank; ++k)
        if (m.get(k, a.cols)) x[pivot_col[k]] = 1;
    return x;
}

} // namespace omwb
