#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "limits.hpp"
#include "matching.hpp"

// Alternating binary words.
//
// Given n binary words of length n, each with at most two maximal constant
// runs, there is always a way to pick position 1 from one word, position 2
// from another, and so on (a permutation), so that the assembled word again
// has at most two runs.  The constructive solver below sorts the words by a
// dedicated total order, places them as the rows of an n-by-n table, and
// reads the answer off a diagonal of that table.  Which diagonal works is
// decided by a small piece of planar topology: the sign boundaries of the
// table form a closed walk on a toroidal grid digraph, and any diagonal
// cycle that the walk crosses at most once yields a valid answer.

namespace omwb {

// Number of maximal constant runs of a word over {+,-}.  This equals the
// longest alternating subsequence, so "alternation number at most two" means
// the word is s...st...t for two symbols s, t (possibly equal).
inline int alternation_number(const std::string& w) {
    if (w.empty()) throw parse_error("alternation_number: empty word");
    int runs = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != '+' && w[i] != '-')
            throw parse_error(std::string("alternation_number: invalid symbol '") + w[i] + "'");
        if (i > 0 && w[i] != w[i - 1]) ++runs;
    }
    return runs;
}

// Total order on equal-length words with alternation number at most two.
// Words ending in '+' come before words ending in '-'.  Within the words
// ending in '+' (each of the form -...-+...+), longer minus-prefixes come
// later; within the words ending in '-' (each +...+-...-), longer
// plus-prefixes come later.  Compactly: w precedes w' iff one of
//   * w ends '+' and w' ends '-',
//   * both end '+' and every '-' position of w is a '-' position of w',
//   * both end '-' and every '+' position of w is a '+' position of w'.
inline bool preceq_b(const std::string& w, const std::string& w2) {
    if (w.size() != w2.size())
        throw parse_error("preceq_b: words of different lengths");
    if (alternation_number(w) > 2 || alternation_number(w2) > 2)
        throw parse_error("preceq_b: word with alternation number above 2");
    const char a = w.back();
    const char b = w2.back();
    if (a == '+' && b == '-') return true;
    if (a == '-' && b == '+') return false;
    const char watched = (a == '+') ? '-' : '+';
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == watched && w2[i] != watched) return false;
    return true;
}

// Indices of `words` in stable non-decreasing preceq_b order.
inline std::vector<int> word_sort_order(const std::vector<std::string>& words) {
    std::vector<int> order(words.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return words[i] != words[j] && preceq_b(words[i], words[j]);
    });
    return order;
}

enum class ArcKind : std::uint8_t { horizontal, vertical, diagonal };

// An arc of the toroidal grid digraph on vertex set [0,n) x [0,n), named by
// its tail (x, y).  Horizontal arcs go to (x+1, y), vertical arcs to
// (x, y+1), diagonal arcs to (x+1, y+1), all coordinates modulo n.
struct GridArc {
    int x = 0;
    int y = 0;
    ArcKind kind = ArcKind::horizontal;

    bool operator==(const GridArc& o) const { return x == o.x && y == o.y && kind == o.kind; }
};

// A closed directed walk on the toroidal grid, stored as the cyclic arc
// sequence of an Eulerian traversal of the marked-arc multigraph.
struct GridWalk {
    int n = 0;
    std::vector<GridArc> arcs;      // Eulerian circuit, in traversal order
    int horizontal_arcs = 0;        // counted with multiplicity
    int vertical_arcs = 0;
    bool repaired = false;          // some horizontal arcs were doubled
    char repair_case = 0;           // 'a' (all-minus column) or 'b' (all-plus column)
    int sink_x = -1, sink_y = -1;   // in-degree-2 vertex fixed by the repair
    int source_x = -1, source_y = -1;
};

// A directed cycle using only diagonal arcs.  There are exactly n of them,
// one per offset k: the cycle through the vertices with (y - x) = k mod n.
struct DiagonalCycle {
    int n = 0;
    int offset = 0;
    std::vector<GridArc> arcs;
    int crossings = 0;              // crossings with the walk it was chosen for
};

namespace detail {

inline GridArc arc_head(const GridArc& a, int n) {
    GridArc h = a;
    if (a.kind != ArcKind::vertical) h.x = (a.x + 1) % n;
    if (a.kind != ArcKind::horizontal) h.y = (a.y + 1) % n;
    return h;
}

} // namespace detail

// Builds the marked-arc walk for words already sorted by preceq_b.
//
// Rows of the table are the words (row y = word y), columns are positions.
// A horizontal arc with tail (x, y) is marked when the rows y-1 and y
// (cyclically) disagree at position x; a vertical arc with tail (x, y),
// x >= 1, is marked when row y changes symbol between positions x-1 and x,
// and each constant row instead gets the vertical arc with tail (0, y).
// Every row then carries exactly one vertical arc and every column an even
// number (zero or two) of horizontal arcs.
//
// The marked multigraph is balanced at every vertex except in one repairable
// situation: a single in-degree-2 vertex and a single out-degree-2 vertex on
// a common row, which occurs only when some column is constant.  When the
// constant column is all '-', that row is the top row (y = 0).  Doubling the
// horizontal arcs from the in-degree-2 vertex rightwards (cyclically) to the
// out-degree-2 vertex restores balance.  The balanced multigraph is then
// traversed as a single Eulerian circuit (Hierholzer, starting from the
// lexicographically least (x, y) with an outgoing arc, horizontal arcs
// offered before vertical ones at each vertex, so the traversal is
// deterministic).
inline GridWalk build_grid_walk(const std::vector<std::string>& words) {
    const int n = static_cast<int>(words.size());
    if (n == 0) throw parse_error("build_grid_walk: no words");
    for (const auto& w : words) {
        if (static_cast<int>(w.size()) != n)
            throw parse_error("build_grid_walk: need n words of length n");
        if (alternation_number(w) > 2)
            throw parse_error("build_grid_walk: word with alternation number above 2");
    }
    for (int y = 1; y < n; ++y)
        if (!preceq_b(words[y - 1], words[y]))
            throw parse_error("build_grid_walk: words are not sorted");

    auto cell = [&](int x, int y) { return words[y][x]; };

    // hmult[x][y]: multiplicity of the horizontal arc with tail (x, y).
    std::vector<std::vector<int>> hmult(n, std::vector<int>(n, 0));
    std::vector<std::vector<int>> vmark(n, std::vector<int>(n, 0));
    for (int y = 0; y < n; ++y) {
        const int prev = (y + n - 1) % n;
        for (int x = 0; x < n; ++x)
            if (cell(x, prev) != cell(x, y)) hmult[x][y] = 1;
    }
    for (int y = 0; y < n; ++y) {
        int count = 0;
        for (int x = 1; x < n; ++x)
            if (cell(x - 1, y) != cell(x, y)) {
                vmark[x][y] = 1;
                ++count;
            }
        if (count == 0) vmark[0][y] = 1;    // constant row
        else if (count != 1)
            throw parse_error("build_grid_walk: word with alternation number above 2");
    }

    // Degree balance.  in - out is +2 at a sink, -2 at a source.
    auto imbalance = [&](int x, int y) {
        const int in = hmult[(x + n - 1) % n][y] + vmark[x][(y + n - 1) % n];
        const int out = hmult[x][y] + vmark[x][y];
        return in - out;
    };
    int sink_x = -1, sink_y = -1, source_x = -1, source_y = -1;
    int imbalanced = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int d = imbalance(x, y);
            if (d == 0) continue;
            ++imbalanced;
            if (d == 2) { sink_x = x; sink_y = y; }
            else if (d == -2) { source_x = x; source_y = y; }
            else throw theorem_violation("build_grid_walk: vertex with unexpected degree imbalance");
        }

    GridWalk walk;
    walk.n = n;
    if (imbalanced != 0) {
        if (imbalanced != 2 || sink_x < 0 || source_x < 0)
            throw theorem_violation("build_grid_walk: imbalance is not one sink plus one source");
        if (sink_y != source_y)
            throw theorem_violation("build_grid_walk: sink and source on different rows");
        bool all_minus = false, all_plus = false;
        for (int x = 0; x < n; ++x) {
            bool minus = true, plus = true;
            for (int y = 0; y < n; ++y) {
                if (cell(x, y) != '-') minus = false;
                if (cell(x, y) != '+') plus = false;
            }
            all_minus = all_minus || minus;
            all_plus = all_plus || plus;
        }
        if (all_minus) {
            walk.repair_case = 'a';
            if (sink_y != 0)
                throw theorem_violation("build_grid_walk: all-minus column but imbalance off the top row");
        } else if (all_plus) {
            walk.repair_case = 'b';
        } else {
            throw theorem_violation("build_grid_walk: imbalance without a constant column");
        }
        for (int x = sink_x; x != source_x; x = (x + 1) % n)
            hmult[x][sink_y] += 2;
        walk.repaired = true;
        walk.sink_x = sink_x;
        walk.sink_y = sink_y;
        walk.source_x = source_x;
        walk.source_y = source_y;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (imbalance(x, y) != 0)
                    throw theorem_violation("build_grid_walk: repair failed to balance degrees");
    }

    int horizontal = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) horizontal += hmult[x][y];
    if (horizontal > 2 * n)
        throw theorem_violation("build_grid_walk: more than 2n horizontal arcs");
    walk.horizontal_arcs = horizontal;
    walk.vertical_arcs = n;

    // Out-arc lists, horizontal before vertical at each vertex.
    const int total = horizontal + n;
    std::vector<std::vector<GridArc>> adj(static_cast<std::size_t>(n) * n);
    auto vid = [&](int x, int y) { return static_cast<std::size_t>(x) * n + y; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            for (int c = 0; c < hmult[x][y]; ++c)
                adj[vid(x, y)].push_back({x, y, ArcKind::horizontal});
            if (vmark[x][y]) adj[vid(x, y)].push_back({x, y, ArcKind::vertical});
        }

    int start = -1;
    for (int x = 0; x < n && start < 0; ++x)
        for (int y = 0; y < n && start < 0; ++y)
            if (!adj[vid(x, y)].empty()) start = static_cast<int>(vid(x, y));
    if (start < 0) throw theorem_violation("build_grid_walk: no arcs to traverse");

    // Hierholzer on the multigraph; emits arcs in reverse completion order.
    std::vector<std::size_t> next(adj.size(), 0);
    std::vector<std::pair<std::size_t, int>> stack;   // (vertex, index of entering arc or -1)
    std::vector<GridArc> entered;                     // entering arcs, parallel to stack
    stack.push_back({static_cast<std::size_t>(start), -1});
    std::vector<GridArc> circuit;
    while (!stack.empty()) {
        const std::size_t v = stack.back().first;
        if (next[v] < adj[v].size()) {
            const GridArc a = adj[v][next[v]++];
            const GridArc h = detail::arc_head(a, n);
            stack.push_back({vid(h.x, h.y), static_cast<int>(entered.size())});
            entered.push_back(a);
        } else {
            const int ei = stack.back().second;
            stack.pop_back();
            if (ei >= 0) circuit.push_back(entered[static_cast<std::size_t>(ei)]);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    if (static_cast<int>(circuit.size()) != total)
        throw theorem_violation("build_grid_walk: marked arcs are not connected");
    for (std::size_t t = 0; t < circuit.size(); ++t) {
        const GridArc h = detail::arc_head(circuit[t], n);
        const GridArc& b = circuit[(t + 1) % circuit.size()];
        if (h.x != b.x || h.y != b.y)
            throw theorem_violation("build_grid_walk: traversal is not a closed walk");
    }
    walk.arcs = std::move(circuit);
    return walk;
}

// Whether the consecutive pair (a, b) of walk arcs crosses the diagonal
// cycle with the given offset at their shared vertex.
//
// Local rule: at a grid vertex, the diagonal cycle occupies the lower-left
// and upper-right rays.  Of the four rays a walk can use, west (incoming
// horizontal) and north (outgoing vertical) lie on one side of the diagonal,
// south (incoming vertical) and east (outgoing horizontal) on the other.
// The pair changes sides exactly when it goes straight through the vertex
// (horizontal-horizontal or vertical-vertical); a turn stays on one side.
namespace detail {

inline bool pair_crosses_offset(const GridWalk& w, std::size_t t, int k) {
    const GridArc& a = w.arcs[t];
    const GridArc& b = w.arcs[(t + 1) % w.arcs.size()];
    const GridArc v = arc_head(a, w.n);
    if (((v.y - v.x) % w.n + w.n) % w.n != k) return false;
    return a.kind == b.kind;
}

} // namespace detail

// Number of crossings between the walk and the diagonal cycle with offset k,
// counted along the cyclic arc sequence.
inline int crossing_count(const GridWalk& w, int k) {
    int count = 0;
    for (std::size_t t = 0; t < w.arcs.size(); ++t)
        if (detail::pair_crosses_offset(w, t, k)) ++count;
    return count;
}

// Offsets of the diagonal cycles that the walk crosses at the head of a
// vertical arc (i.e. a vertical arc followed immediately by another one).
inline std::vector<int> vertical_straight_offsets(const GridWalk& w) {
    std::set<int> bad;
    for (std::size_t t = 0; t < w.arcs.size(); ++t) {
        const GridArc& a = w.arcs[t];
        const GridArc& b = w.arcs[(t + 1) % w.arcs.size()];
        if (a.kind != ArcKind::vertical || b.kind != ArcKind::vertical) continue;
        const GridArc v = detail::arc_head(a, w.n);
        bad.insert(((v.y - v.x) % w.n + w.n) % w.n);
    }
    return std::vector<int>(bad.begin(), bad.end());
}

// Selects a diagonal cycle crossing the walk at most once: the smallest
// offset whose cycle meets no vertical-vertical straight of the walk.  A
// walk with 2n or fewer horizontal arcs and exactly n vertical arcs then
// crosses the chosen cycle at most once, which is re-verified by an explicit
// count.  A walk with no horizontal arcs is a single column cycle; it meets
// every diagonal cycle in exactly one vertical-vertical straight, so the
// smallest offset is used and the crossing bound still holds.
inline DiagonalCycle find_diagonal_cycle(const GridWalk& w) {
    if (w.arcs.empty()) throw parse_error("find_diagonal_cycle: empty walk");
    const std::vector<int> bad = vertical_straight_offsets(w);
    int k = -1;
    for (int c = 0; c < w.n; ++c) {
        if (!std::binary_search(bad.begin(), bad.end(), c)) { k = c; break; }
    }
    if (k < 0) {
        if (w.horizontal_arcs > 0)
            throw theorem_violation("find_diagonal_cycle: every diagonal cycle meets a vertical straight");
        k = 0;
    }
    DiagonalCycle cycle;
    cycle.n = w.n;
    cycle.offset = k;
    for (int x = 0; x < w.n; ++x)
        cycle.arcs.push_back({x, (x + k) % w.n, ArcKind::diagonal});
    cycle.crossings = crossing_count(w, k);
    if (cycle.crossings > 1)
        throw theorem_violation("find_diagonal_cycle: selected cycle crosses the walk more than once");
    return cycle;
}

// A solved instance: result[a] = words[order[a]][a] for every position a,
// the assembled word has alternation number at most two, and `order` is a
// permutation of the word indices.  `offset` is the diagonal of the sorted
// table the result was read from.
struct WordSolution {
    std::string word;
    std::vector<int> order;
    int offset = 0;
    int crossings = 0;
};

inline bool check_word_solution(const std::vector<std::string>& words,
                                const std::vector<int>& order) {
    const int n = static_cast<int>(words.size());
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::string assembled(static_cast<std::size_t>(n), '?');
    for (int a = 0; a < n; ++a) {
        const int j = order[static_cast<std::size_t>(a)];
        if (j < 0 || j >= n || seen[static_cast<std::size_t>(j)]) return false;
        seen[static_cast<std::size_t>(j)] = 1;
        assembled[static_cast<std::size_t>(a)] = words[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)];
    }
    return alternation_number(assembled) <= 2;
}

// Solves an instance: sorts the words, builds the walk, selects a diagonal
// cycle, and reads the result off the corresponding diagonal of the sorted
// table (position a takes its symbol from sorted word (a + k) mod n).  The
// alternation bound of the result is verified; failure is a hard error.
inline WordSolution solve_words(const std::vector<std::string>& words, const Limits& lim = {}) {
    const int n = static_cast<int>(words.size());
    if (n == 0) throw parse_error("solve_words: no words");
    lim.check_ground_set(n, "word instance");
    for (const auto& w : words) {
        if (static_cast<int>(w.size()) != n)
            throw parse_error("solve_words: need n words of length n");
        if (alternation_number(w) > 2)
            throw parse_error("solve_words: word with alternation number above 2");
    }

    const std::vector<int> order0 = word_sort_order(words);
    std::vector<std::string> sorted;
    sorted.reserve(words.size());
    for (int j : order0) sorted.push_back(words[static_cast<std::size_t>(j)]);

    const GridWalk walk = build_grid_walk(sorted);
    const DiagonalCycle cycle = find_diagonal_cycle(walk);

    WordSolution sol;
    sol.offset = cycle.offset;
    sol.crossings = cycle.crossings;
    sol.word.assign(static_cast<std::size_t>(n), '?');
    sol.order.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        const int row = (a + cycle.offset) % n;
        sol.word[static_cast<std::size_t>(a)] = sorted[static_cast<std::size_t>(row)][static_cast<std::size_t>(a)];
        sol.order[static_cast<std::size_t>(a)] = order0[static_cast<std::size_t>(row)];
    }
    if (!check_word_solution(words, sol.order) ||
        alternation_number(sol.word) > 2)
        throw theorem_violation("solve_words: diagonal word has alternation number above 2 (offset " +
                                std::to_string(cycle.offset) + ", word " + sol.word + ")");
    return sol;
}

// Reference search, independent of the grid construction.  For n <= 7 it
// scans permutations in lexicographic order and returns the first valid
// assignment.  For larger n it tries each of the 2n words with alternation
// number at most two as a target and looks for a system of distinct
// representatives realizing it (a bipartite matching between positions and
// words).  Returns the assignment, or nothing when no permutation works.
inline std::optional<std::vector<int>> oracle_words(const std::vector<std::string>& words) {
    const int n = static_cast<int>(words.size());
    if (n == 0) throw parse_error("oracle_words: no words");
    for (const auto& w : words) {
        if (static_cast<int>(w.size()) != n)
            throw parse_error("oracle_words: need n words of length n");
        alternation_number(w);  // validates the alphabet
    }
    if (n <= 7) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::string assembled(static_cast<std::size_t>(n), '?');
            for (int a = 0; a < n; ++a)
                assembled[static_cast<std::size_t>(a)] =
                    words[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])][static_cast<std::size_t>(a)];
            if (alternation_number(assembled) <= 2) return perm;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return std::nullopt;
    }
    // Candidate targets: every word of length n with alternation number <= 2.
    std::set<std::string> targets;
    targets.insert(std::string(static_cast<std::size_t>(n), '+'));
    targets.insert(std::string(static_cast<std::size_t>(n), '-'));
    for (int a = 1; a < n; ++a)
        for (char s : {'+', '-'}) {
            std::string t(static_cast<std::size_t>(a), s);
            t.append(static_cast<std::size_t>(n - a), s == '+' ? '-' : '+');
            targets.insert(t);
        }
    for (const auto& t : targets) {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a)
            for (int j = 0; j < n; ++j)
                if (words[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)] ==
                    t[static_cast<std::size_t>(a)])
                    adj[static_cast<std::size_t>(a)].push_back(j);
        const Matching m = max_bipartite_matching(n, n, adj);
        if (m.size == n) return m.left_to_right;
    }
    return std::nullopt;
}

} // namespace omwb
