// Exact rational matrices.
//
// All numeric input is exact: entries are arbitrary-precision rationals and
// every rank/determinant decision is made by exact elimination.  There is no
// floating point anywhere in the library and no tolerance knob.  Determinant
// signs are computed by fraction-free Bareiss elimination after clearing
// denominators column-wise (positive column scalings do not change any
// maximal minor's sign).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"
#include "sign_vector.hpp"

namespace omwb {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

namespace detail {

inline BigInt parse_bigint(const std::string& tok) {
    if (tok.empty()) throw parse_error("empty integer token");
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) throw parse_error("sign with no digits: '" + tok + "'");
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9')
            throw parse_error("invalid integer token '" + tok + "'");
    return BigInt(tok);
}

inline BigRat parse_rational(const std::string& tok) {
    const auto slash = tok.find('/');
    if (slash == std::string::npos) return BigRat(parse_bigint(tok));
    const BigInt p = parse_bigint(tok.substr(0, slash));
    const BigInt q = parse_bigint(tok.substr(slash + 1));
    if (q == 0) throw parse_error("zero denominator in '" + tok + "'");
    return BigRat(p, q);
}

} // namespace detail

struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigRat> a; // row-major

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    BigRat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const BigRat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    // Lines are rows; tokens are integers or p/q fractions.  Row lengths must
    // agree.  Lines that are empty or start with '#' are skipped.
    static RationalMatrix parse(const std::string& text) {
        std::vector<std::vector<BigRat>> rows_acc;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::string tok;
            std::vector<BigRat> row;
            while (ls >> tok) {
                if (tok[0] == '#') break;
                row.push_back(detail::parse_rational(tok));
            }
            if (row.empty()) continue;
            if (!rows_acc.empty() && row.size() != rows_acc.front().size())
                throw parse_error("matrix rows have inconsistent lengths");
            rows_acc.push_back(std::move(row));
        }
        if (rows_acc.empty()) throw parse_error("matrix file contains no rows");
        RationalMatrix m(static_cast<int>(rows_acc.size()), static_cast<int>(rows_acc.front().size()));
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows_acc[i][j];
        return m;
    }

    std::string str() const {
        std::ostringstream out;
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                if (j) out << ' ';
                out << at(i, j);
            }
            out << '\n';
        }
        return out.str();
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    RationalMatrix select_columns(const std::vector<int>& idx) const {
        RationalMatrix s(rows, static_cast<int>(idx.size()));
        for (int i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) s.at(i, static_cast<int>(j)) = at(i, idx[j]);
        return s;
    }
};

// Exact rank by rational Gaussian elimination.
inline int rank(RationalMatrix m) {
    int rk = 0;
    for (int col = 0; col < m.cols && rk < m.rows; ++col) {
        int pivot = -1;
        for (int i = rk; i < m.rows; ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(rk, j), m.at(pivot, j));
        for (int i = rk + 1; i < m.rows; ++i) {
            if (m.at(i, col) == 0) continue;
            const BigRat f = m.at(i, col) / m.at(rk, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(rk, j);
        }
        ++rk;
    }
    return rk;
}

// Right-kernel basis (one vector per free column of the RREF).
inline std::vector<std::vector<BigRat>> nullspace(RationalMatrix m) {
    std::vector<int> pivot_col;
    int rk = 0;
    for (int col = 0; col < m.cols && rk < m.rows; ++col) {
        int pivot = -1;
        for (int i = rk; i < m.rows; ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(rk, j), m.at(pivot, j));
        const BigRat d = m.at(rk, col);
        for (int j = 0; j < m.cols; ++j) m.at(rk, j) /= d;
        for (int i = 0; i < m.rows; ++i) {
            if (i == rk || m.at(i, col) == 0) continue;
            const BigRat f = m.at(i, col);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(rk, j);
        }
        pivot_col.push_back(col);
        ++rk;
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<BigRat>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<BigRat> v(m.cols, BigRat(0));
        v[free] = 1;
        for (int i = 0; i < rk; ++i) v[pivot_col[i]] = -m.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Full-row-rank matrix with the same row space (the non-zero rows of the
// reduced row echelon form).
inline RationalMatrix row_reduced(RationalMatrix m) {
    int rk = 0;
    for (int col = 0; col < m.cols && rk < m.rows; ++col) {
        int pivot = -1;
        for (int i = rk; i < m.rows; ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(rk, j), m.at(pivot, j));
        const BigRat d = m.at(rk, col);
        for (int j = 0; j < m.cols; ++j) m.at(rk, j) /= d;
        for (int i = 0; i < m.rows; ++i) {
            if (i == rk || m.at(i, col) == 0) continue;
            const BigRat f = m.at(i, col);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(rk, j);
        }
        ++rk;
    }
    RationalMatrix out(rk, m.cols);
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

// Sign of det of a square rational matrix, via Bareiss on the
// denominator-cleared integer matrix (column scalings are positive).
inline int det_sign(const RationalMatrix& sq) {
    if (sq.rows != sq.cols) throw parse_error("det_sign: matrix not square");
    const int n = sq.rows;
    if (n == 0) return +1;
    std::vector<std::vector<BigInt>> b(n, std::vector<BigInt>(n));
    for (int j = 0; j < n; ++j) {
        BigInt scale = 1;
        for (int i = 0; i < n; ++i) scale = lcm(scale, denominator(sq.at(i, j)));
        for (int i = 0; i < n; ++i) {
            const BigRat v = sq.at(i, j) * scale;
            b[i][j] = numerator(v);
        }
    }
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (b[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (b[i][k] != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            std::swap(b[k], b[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]) / prev;
            b[i][k] = 0;
        }
        prev = b[k][k];
    }
    const BigInt d = b[n - 1][n - 1];
    return d == 0 ? 0 : (d > 0 ? sign : -sign);
}

// Uniform random integer matrix with entries in [-10, 10].
inline RationalMatrix random_matrix(int r, int n, Rng& rng) {
    RationalMatrix m(r, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = BigRat(rng.int_in(-10, 10));
    return m;
}

} // namespace omwb
