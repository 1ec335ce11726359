// Brute-force reference implementations used only by the tests. None of
// these call into the statistic tables of the library; they work from the
// raw definitions on boxes and words.
#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <span>
#include <vector>

#include "asfc/affine_weyl.hpp"
#include "asfc/partition.hpp"
#include "asfc/symfunc.hpp"
#include "asfc/tableau.hpp"

// Readable values in test failure output.
namespace asfc {
inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << f.to_string(); }
}  // namespace asfc

namespace oracle {

/// Box of row i: (i, lambda_{i+1}).
inline std::vector<asfc::Box> boxes(const asfc::Partition& lambda, int n) {
    std::vector<asfc::Box> out;
    for (int i = 0; i < n; ++i)
        out.push_back({i, lambda.part(i)});
    return out;
}

/// m = 1, b = 1 rule on diagonals d(x) = i + j: entries a < c at x, y form
/// an inversion when d(y) = d(x) with j > j', or d(y) = d(x) + 1 with j < j'.
inline int intro_dinv(const asfc::Partition& lambda, std::span<const int> entries) {
    const int n = static_cast<int>(entries.size());
    const auto bx = boxes(lambda, n);
    int count = 0;
    for (int s = 0; s < n; ++s)
        for (int u = 0; u < n; ++u) {
            if (entries[s] >= entries[u])
                continue;
            const auto x = bx[s];
            const auto y = bx[u];
            const int dx = x.i + x.j;
            const int dy = y.i + y.j;
            if ((dy == dx && x.j > y.j) || (dy == dx + 1 && x.j < y.j))
                ++count;
        }
    return count;
}

/// Content-type coordinate -nj - r i with r = mn + b.
inline long long ctilde(asfc::Box x, int n, int m, int b) {
    const long long r = static_cast<long long>(m) * n + b;
    return -static_cast<long long>(n) * x.j - r * x.i;
}

/// Inversions of the column-tuple filling: T(x) < T(y) and
/// 0 < ctilde(x) - ctilde(y) < mn + b.
inline int tuple_inv(const asfc::Partition& lambda, int n, int m, int b,
                     std::span<const int> entries) {
    const auto bx = boxes(lambda, n);
    const long long r = static_cast<long long>(m) * n + b;
    int count = 0;
    for (int s = 0; s < n; ++s)
        for (int u = 0; u < n; ++u) {
            if (entries[s] >= entries[u])
                continue;
            const long long diff = ctilde(bx[s], n, m, b) - ctilde(bx[u], n, m, b);
            if (diff > 0 && diff < r)
                ++count;
        }
    return count;
}

/// Every labelling of the rows by 1..max_label (no semistandard filter).
template <class Visit>
void all_words(int n, int max_label, Visit&& visit) {
    std::vector<int> w(n, 1);
    while (true) {
        visit(std::span<const int>(w));
        int k = n - 1;
        while (k >= 0 && w[k] == max_label)
            w[k--] = 1;
        if (k < 0)
            return;
        ++w[k];
    }
}

/// Column-strictness (positive) or column-weakness (negative) checked box
/// by box against the box directly below, independently of SkewShape.
inline bool semistandard(const asfc::Partition& lambda, int n, asfc::Sign sign,
                         std::span<const int> e) {
    const auto bx = boxes(lambda, n);
    for (int s = 0; s < n; ++s)
        for (int u = 0; u < n; ++u)
            if (bx[u].j == bx[s].j && bx[u].i == bx[s].i + 1) {
                if (sign == asfc::Sign::positive ? !(e[s] < e[u]) : !(e[s] <= e[u]))
                    return false;
            }
    return true;
}

/// Semistandard tableaux of straight shape lambda with content mu, counted by
/// filling every cell with every label.
inline long long kostka_by_filling(const asfc::Partition& lambda, const std::vector<int>& mu) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            cells.emplace_back(i, j);
    const int labels = static_cast<int>(mu.size());
    const int size = static_cast<int>(cells.size());
    if (size == 0)
        return 1;
    long long count = 0;
    all_words(size, labels, [&](std::span<const int> w) {
        std::vector<int> c(labels, 0);
        for (int v : w)
            ++c[v - 1];
        if (c != mu)
            return;
        std::map<std::pair<int, int>, int> at;
        for (int k = 0; k < size; ++k)
            at[cells[k]] = w[k];
        for (const auto& [cell, v] : at) {
            auto right = at.find({cell.first, cell.second + 1});
            if (right != at.end() && right->second < v)
                return;
            auto below = at.find({cell.first + 1, cell.second});
            if (below != at.end() && below->second <= v)
                return;
        }
        ++count;
    });
    return count;
}

/// Breadth-first word lengths of every affine Weyl group element reachable
/// with at most `radius` simple reflections.
inline std::map<asfc::AffineWeylElt, int> bfs_lengths(int n, int radius) {
    std::map<asfc::AffineWeylElt, int> dist;
    std::queue<asfc::AffineWeylElt> frontier;
    const asfc::AffineWeylElt e(n);
    dist.emplace(e, 0);
    frontier.push(e);
    while (!frontier.empty()) {
        const auto w = frontier.front();
        frontier.pop();
        const int d = dist.at(w);
        if (d == radius)
            continue;
        for (int i = 0; i < n; ++i) {
            auto v = w * asfc::AffineWeylElt::simple(n, i);
            if (dist.emplace(v, d + 1).second)
                frontier.push(v);
        }
    }
    return dist;
}

}  // namespace oracle
