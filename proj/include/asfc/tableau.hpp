#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asfc/partition.hpp"
#include "asfc/stat_ctx.hpp"

namespace asfc {

/// The skew shape (inner + (1^n)) / inner: exactly one box per row, the box
/// of row i sitting in column inner_{i+1}.
///
/// Coordinates are (row, column) with the row index growing along the
/// vertical axis. Pictures that draw row 0 at the bottom are the same shape
/// flipped upside down.
class SkewShape {
public:
    SkewShape(const Partition& inner, int n);

    int n() const noexcept { return n_; }
    const Partition& inner() const noexcept { return inner_; }
    Box box(int row) const noexcept { return {row, inner_.part(row)}; }
    std::vector<Box> boxes() const;
    /// Row of the box in column `col`, or -1. Only used for lookups by Box.
    int row_of(Box x) const noexcept;
    /// Rows `row` and `row + 1` share a column.
    bool stacked(int row) const noexcept { return box(row).j == box(row + 1).j; }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition inner_;
    int n_;
};

SkewShape skew_shape(const Partition& lambda, int n);

/// Positive alphabet 1 < 2 < ...; negative alphabet 1bar < 2bar < ...
enum class Sign { positive, negative };

/// Describes the first semistandardness violation, if any. Positive tableaux
/// increase strictly down columns; negative ones weakly. Rows hold a single
/// box, so the row conditions are vacuous.
std::optional<std::string> semistandard_violation(const SkewShape& shape, Sign sign,
                                                  std::span<const int> entries);

/// A semistandard filling of a one-box-per-row skew shape. Entries are
/// stored by row and are positive labels; the sign picks the alphabet.
class Tableau {
public:
    /// Throws std::invalid_argument naming the violated invariant.
    Tableau(SkewShape shape, Sign sign, std::vector<int> entries);

    const SkewShape& shape() const noexcept { return shape_; }
    Sign sign() const noexcept { return sign_; }
    int n() const noexcept { return shape_.n(); }
    const std::vector<int>& entries() const noexcept { return entries_; }
    int at(int row) const { return entries_.at(row); }
    int at(Box x) const;

    /// Multiplicity of each label 1..max_label (max_label defaults to the
    /// largest entry).
    std::vector<int> content(int max_label = 0) const;
    bool is_standard() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    SkewShape shape_;
    Sign sign_;
    std::vector<int> entries_;
};

/// Visits every semistandard labelling (entries by row, values in
/// 1..max_label) of the given sign, in lexicographic order of the row vector.
/// Rows listed in `prefix` are held fixed; the prefix itself must be valid.
template <class Visit>
void for_each_labelling(const SkewShape& shape, Sign sign, int max_label, Visit&& visit,
                        std::span<const int> prefix = {}) {
    const int n = shape.n();
    const int fixed = static_cast<int>(prefix.size());
    std::vector<int> e(n, 0);
    for (int k = 0; k < fixed; ++k)
        e[k] = prefix[k];
    if (fixed == n) {
        visit(std::span<const int>(e));
        return;
    }
    int row = fixed;
    e[row] = 0;
    while (row >= fixed) {
        if (++e[row] > max_label) {
            --row;
            continue;
        }
        if (row > 0 && shape.stacked(row - 1)) {
            const bool ok = sign == Sign::positive ? e[row - 1] < e[row] : e[row - 1] <= e[row];
            if (!ok)
                continue;
        }
        if (row == n - 1) {
            visit(std::span<const int>(e));
            continue;
        }
        ++row;
        e[row] = 0;
    }
}

/// As for_each_labelling, restricted to labellings whose content is
/// `content` (label k+1 used content[k] times; zeros allowed).
template <class Visit>
void for_each_labelling_with_content(const SkewShape& shape, Sign sign,
                                     std::span<const int> content, Visit&& visit) {
    const int n = shape.n();
    const int labels = static_cast<int>(content.size());
    std::vector<int> left(content.begin(), content.end());
    std::vector<int> e(n, 0);
    int row = 0;
    while (row >= 0) {
        if (e[row] > 0)
            ++left[e[row] - 1];
        int v = e[row] + 1;
        while (v <= labels && left[v - 1] == 0)
            ++v;
        if (v > labels) {
            e[row] = 0;
            --row;
            continue;
        }
        e[row] = v;
        --left[v - 1];
        if (row > 0 && shape.stacked(row - 1)) {
            const bool ok = sign == Sign::positive ? e[row - 1] < v : e[row - 1] <= v;
            if (!ok)
                continue;
        }
        if (row == n - 1) {
            visit(std::span<const int>(e));
            continue;
        }
        ++row;
        e[row] = 0;
    }
}

/// Every semistandard tableau with entries in 1..max_label.
std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, Sign sign, int max_label);

/// Every semistandard tableau with the given content; the content must sum to n.
std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, Sign sign,
                                        const std::vector<int>& content);

/// Standard tableau S with T = w o S for a weakly increasing word w. Equal
/// entries are ordered by increasing r (positive sign) or decreasing r
/// (negative sign), which keeps d-descents out of (positive) or fills
/// (negative) every block of equal entries.
Tableau standardize(const Tableau& t, const StatCtx& ctx);

/// The word w with T = w o standardize(T): w[k-1] is the entry carried by the
/// box labelled k.
std::vector<int> standardization_word(const Tableau& t, const StatCtx& ctx);

/// Replaces each label k of a standard tableau by word[k-1].
Tableau relabel(const Tableau& standard, std::span<const int> word, Sign sign);

/// { a : S(x) = a, S(y) = a+1, x >_d y }, ascending.
std::vector<int> d_descents(const Tableau& standard, const StatCtx& ctx);

}  // namespace asfc
