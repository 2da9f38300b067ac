// Cocircuits, covectors, and topes checked against independent routes:
// a hyperplane determinant oracle for realizable instances and the
// orthogonality description of covectors.
#include <catch2/catch_amalgamated.hpp>

#include "omwb/covectors.hpp"
#include "omwb/rational_matrix.hpp"
#include "omwb/rng.hpp"
#include "omwb/subsets.hpp"

#include <set>
#include <string>
#include <vector>

using namespace omwb;

namespace {

std::vector<SignVector> all_vectors(int n) {
    std::vector<SignVector> out;
    const Sign table[3] = {0, 1, -1};
    std::vector<int> digits(n, 0);
    while (true) {
        SignVector x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = table[digits[i]];
        out.push_back(x);
        int i = 0;
        while (i < n && digits[i] == 2) digits[i++] = 0;
        if (i == n) break;
        ++digits[i];
    }
    return out;
}

// Cocircuits of a full-row-rank matrix by hyperplane determinants: every
// independent (r-1)-subset B spans a hyperplane, and the sign vector
// j -> det sign of [columns B, column j] is the cocircuit pair for it.
std::vector<SignVector> cocircuits_by_hyperplanes(const RationalMatrix& m) {
    const int n = m.cols, r = m.rows;
    std::set<std::uint64_t> seen;
    std::vector<SignVector> out;
    for (const auto& b : all_subsets(n, r - 1)) {
        SignVector c(static_cast<std::size_t>(n));
        bool nonzero = false;
        for (int j = 0; j < n; ++j) {
            std::vector<int> cols(b);
            cols.push_back(j);
            const int d = det_sign(m.select_columns(cols));
            c[static_cast<std::size_t>(j)] = static_cast<Sign>(d);
            if (d != 0) nonzero = true;
        }
        if (!nonzero) continue;
        for (const SignVector& x : {c, -c})
            if (seen.insert(x.key()).second) out.push_back(x);
    }
    sort_sign_vectors(out);
    return out;
}

std::vector<SignVector> sorted(std::vector<SignVector> v) {
    sort_sign_vectors(v);
    return v;
}

} // namespace

TEST_CASE("cocircuits match the hyperplane oracle", "[covectors]") {
    std::vector<RationalMatrix> fixtures;
    for (const char* text : {"1 1 1 0\n0 0 0 1\n", "1 0 -1 1\n0 1 -1 1\n", "1 -1 1\n",
                             "1 0 0\n0 1 0\n0 0 1\n"})
        fixtures.push_back(RationalMatrix::parse(text));
    Rng rng(31337);
    int added = 0;
    while (added < 8) {
        const int r = 2 + static_cast<int>(rng.below(2));
        const int n = r + 2 + static_cast<int>(rng.below(3));
        RationalMatrix m = random_matrix(r, n, rng);
        if (rank(m) != r) continue;
        fixtures.push_back(std::move(m));
        ++added;
    }
    for (const auto& m : fixtures)
        REQUIRE(sorted(cocircuits_from_chirotope(chirotope_from_matrix(m))) ==
                cocircuits_by_hyperplanes(m));
}

TEST_CASE("free structures have one cocircuit pair per element", "[covectors]") {
    const Chirotope chi = chirotope_from_matrix(RationalMatrix::parse("1 0 0\n0 1 0\n0 0 1\n"));
    auto cc = sorted(cocircuits_from_chirotope(chi));
    std::vector<SignVector> expect = {SignVector::parse("+00"), SignVector::parse("-00"),
                                      SignVector::parse("0+0"), SignVector::parse("0-0"),
                                      SignVector::parse("00+"), SignVector::parse("00-")};
    sort_sign_vectors(expect);
    REQUIRE(cc == expect);
    REQUIRE(topes_of(chi).size() == 8); // every full sign vector
}

TEST_CASE("covectors equal the orthogonality description", "[covectors]") {
    std::vector<Chirotope> fixtures = {
        chirotope_from_matrix(RationalMatrix::parse("1 1 1 0\n0 0 0 1\n")),
        chirotope_from_matrix(RationalMatrix::parse("1 0 -1 1\n0 1 -1 1\n")),
        alternating_chirotope(5, 2)};
    for (const auto& chi : fixtures) {
        const auto circuits = circuits_from_chirotope(chi);
        std::vector<SignVector> expect;
        for (const auto& x : all_vectors(chi.n)) {
            bool ortho = true;
            for (const auto& c : circuits)
                if (!orthogonal(x, c)) {
                    ortho = false;
                    break;
                }
            if (ortho) expect.push_back(x);
        }
        sort_sign_vectors(expect);
        REQUIRE(sorted(covectors_of(chi)) == expect);
        // membership helper agrees pointwise
        for (const auto& x : all_vectors(chi.n)) {
            const bool in = std::binary_search(expect.begin(), expect.end(), x, text_less);
            REQUIRE(is_covector_by_orthogonality(circuits, x) == in);
        }
    }
}

TEST_CASE("covectors are closed under composition", "[covectors]") {
    for (const auto& chi : {alternating_chirotope(4, 2),
                            chirotope_from_matrix(RationalMatrix::parse("1 1 1 0\n0 0 0 1\n"))}) {
        const auto cov = covectors_of(chi);
        std::set<std::uint64_t> keys;
        for (const auto& x : cov) keys.insert(x.key());
        for (const auto& x : cov)
            for (const auto& y : cov) REQUIRE(keys.count(compose(x, y).key()) == 1);
    }
}

TEST_CASE("topes of the two-plane fixture", "[covectors]") {
    const Chirotope chi = chirotope_from_matrix(RationalMatrix::parse("1 1 1 0\n0 0 0 1\n"));
    auto ts = sorted(topes_of(chi));
    std::vector<SignVector> expect = {SignVector::parse("++++"), SignVector::parse("+++-"),
                                      SignVector::parse("---+"), SignVector::parse("----")};
    sort_sign_vectors(expect);
    REQUIRE(ts == expect);
}

TEST_CASE("tope counts of alternating sign maps", "[covectors]") {
    REQUIRE(topes_of(alternating_chirotope(6, 3)).size() == 32);
    REQUIRE(topes_of(alternating_chirotope(5, 3)).size() == 22);
    REQUIRE(cocircuits_from_chirotope(alternating_chirotope(5, 3)).size() == 20);
}

TEST_CASE("rank-2 alternating topes are the words with at most two runs", "[covectors]") {
    for (int n = 3; n <= 6; ++n) {
        const auto ts = sorted(topes_of(alternating_chirotope(n, 2)));
        std::vector<SignVector> expect;
        for (const auto& x : all_vectors(n)) {
            if (!x.full_support()) continue;
            int runs = 1;
            for (int i = 1; i < n; ++i)
                if (x[static_cast<std::size_t>(i)] != x[static_cast<std::size_t>(i - 1)]) ++runs;
            if (runs <= 2) expect.push_back(x);
        }
        REQUIRE(expect.size() == static_cast<std::size_t>(2 * n));
        sort_sign_vectors(expect);
        REQUIRE(ts == expect);
    }
}

TEST_CASE("topes are the maximal covectors", "[covectors]") {
    const Chirotope chi = alternating_chirotope(4, 2);
    const auto cov = covectors_of(chi);
    const auto ts = topes_of(chi);
    std::set<std::uint64_t> tope_keys;
    for (const auto& t : ts) {
        REQUIRE(t.full_support());
        tope_keys.insert(t.key());
    }
    for (const auto& x : cov) {
        bool below_some_tope = false;
        for (const auto& t : ts)
            if (conforms(x, t)) {
                below_some_tope = true;
                break;
            }
        REQUIRE(below_some_tope);
        if (x.full_support()) REQUIRE(tope_keys.count(x.key()) == 1);
    }
}

TEST_CASE("positive circuits and vectors", "[covectors]") {
    // all-plus sign maps have no positive circuit at all
    for (int r = 1; r <= 3; ++r)
        for (int n = r + 1; n <= 6; ++n) {
            REQUIRE(positive_circuits_of(alternating_chirotope(n, r)).empty());
            REQUIRE(positive_vectors_of(alternating_chirotope(n, r)).size() == 1); // zero only
        }
    const Chirotope cone = chirotope_from_matrix(RationalMatrix::parse("1 0 -1 1\n0 1 -1 1\n"));
    auto pc = sorted(positive_circuits_of(cone));
    std::vector<SignVector> expect_c = {SignVector::parse("+++0"), SignVector::parse("00++")};
    sort_sign_vectors(expect_c);
    REQUIRE(pc == expect_c);
    auto pv = sorted(positive_vectors_of(cone));
    std::vector<SignVector> expect_v = {SignVector::parse("0000"), SignVector::parse("+++0"),
                                        SignVector::parse("00++"), SignVector::parse("++++")};
    sort_sign_vectors(expect_v);
    REQUIRE(pv == expect_v);
}
