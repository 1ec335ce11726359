#include "asfc/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace asfc {

SkewShape::SkewShape(const Partition& inner, int n) : inner_(inner), n_(n) {
    if (n < 1)
        throw std::invalid_argument("skew shape needs n >= 1");
    if (inner.length() > n)
        throw std::invalid_argument("inner partition " + inner.to_string() + " has more than n=" +
                                    std::to_string(n) + " nonzero parts");
}

std::vector<Box> SkewShape::boxes() const {
    std::vector<Box> out;
    out.reserve(n_);
    for (int r = 0; r < n_; ++r)
        out.push_back(box(r));
    return out;
}

int SkewShape::row_of(Box x) const noexcept {
    if (x.i < 0 || x.i >= n_ || box(x.i).j != x.j)
        return -1;
    return x.i;
}

SkewShape skew_shape(const Partition& lambda, int n) { return SkewShape(lambda, n); }

std::optional<std::string> semistandard_violation(const SkewShape& shape, Sign sign,
                                                  std::span<const int> entries) {
    if (static_cast<int>(entries.size()) != shape.n())
        return "expected " + std::to_string(shape.n()) + " entries, got " +
               std::to_string(entries.size());
    for (int r = 0; r < shape.n(); ++r)
        if (entries[r] < 1)
            return "entry in row " + std::to_string(r) + " is not a positive label";
    for (int r = 0; r + 1 < shape.n(); ++r) {
        if (!shape.stacked(r))
            continue;
        const int lo = entries[r], hi = entries[r + 1];
        if (sign == Sign::positive && !(lo < hi))
            return "column " + std::to_string(shape.box(r).j) + " is not strictly increasing (rows " +
                   std::to_string(r) + "," + std::to_string(r + 1) + ")";
        if (sign == Sign::negative && !(lo <= hi))
            return "column " + std::to_string(shape.box(r).j) + " is not weakly increasing (rows " +
                   std::to_string(r) + "," + std::to_string(r + 1) + ")";
    }
    return std::nullopt;
}

Tableau::Tableau(SkewShape shape, Sign sign, std::vector<int> entries)
    : shape_(std::move(shape)), sign_(sign), entries_(std::move(entries)) {
    if (auto why = semistandard_violation(shape_, sign_, entries_))
        throw std::invalid_argument("not semistandard: " + *why);
}

int Tableau::at(Box x) const {
    const int row = shape_.row_of(x);
    if (row < 0)
        throw std::out_of_range("box is not in the shape");
    return entries_[row];
}

std::vector<int> Tableau::content(int max_label) const {
    const int top = std::max(max_label, *std::max_element(entries_.begin(), entries_.end()));
    std::vector<int> c(top, 0);
    for (int v : entries_)
        ++c[v - 1];
    return c;
}

bool Tableau::is_standard() const {
    std::vector<int> sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < n(); ++k)
        if (sorted[k] != k + 1)
            return false;
    return true;
}

std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, Sign sign, int max_label) {
    std::vector<Tableau> out;
    for_each_labelling(shape, sign, max_label, [&](std::span<const int> e) {
        out.emplace_back(shape, sign, std::vector<int>(e.begin(), e.end()));
    });
    return out;
}

std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, Sign sign,
                                        const std::vector<int>& content) {
    if (std::accumulate(content.begin(), content.end(), 0) != shape.n())
        throw std::invalid_argument("content does not sum to n");
    std::vector<Tableau> out;
    for_each_labelling_with_content(shape, sign, content, [&](std::span<const int> e) {
        out.emplace_back(shape, sign, std::vector<int>(e.begin(), e.end()));
    });
    return out;
}

namespace {

// Rows in the order they receive standard labels 1..n.
std::vector<int> standard_order(const Tableau& t, const StatCtx& ctx) {
    if (t.n() != ctx.n())
        throw std::invalid_argument("tableau size differs from ctx.n");
    std::vector<int> rows(t.n());
    std::iota(rows.begin(), rows.end(), 0);
    const auto& shape = t.shape();
    std::sort(rows.begin(), rows.end(), [&](int a, int b) {
        if (t.at(a) != t.at(b))
            return t.at(a) < t.at(b);
        const long long ra = r_value(shape.box(a), ctx), rb = r_value(shape.box(b), ctx);
        return t.sign() == Sign::positive ? ra < rb : ra > rb;
    });
    return rows;
}

}  // namespace

Tableau standardize(const Tableau& t, const StatCtx& ctx) {
    const std::vector<int> order = standard_order(t, ctx);
    std::vector<int> labels(t.n());
    for (int k = 0; k < t.n(); ++k)
        labels[order[k]] = k + 1;
    return Tableau(t.shape(), t.sign(), std::move(labels));
}

std::vector<int> standardization_word(const Tableau& t, const StatCtx& ctx) {
    const std::vector<int> order = standard_order(t, ctx);
    std::vector<int> word(t.n());
    for (int k = 0; k < t.n(); ++k)
        word[k] = t.at(order[k]);
    return word;
}

Tableau relabel(const Tableau& standard, std::span<const int> word, Sign sign) {
    if (!standard.is_standard())
        throw std::invalid_argument("relabel expects a standard tableau");
    if (static_cast<int>(word.size()) != standard.n())
        throw std::invalid_argument("word length differs from n");
    std::vector<int> e(standard.n());
    for (int r = 0; r < standard.n(); ++r)
        e[r] = word[standard.at(r) - 1];
    return Tableau(standard.shape(), sign, std::move(e));
}

std::vector<int> d_descents(const Tableau& standard, const StatCtx& ctx) {
    if (!standard.is_standard())
        throw std::invalid_argument("d_descents expects a standard tableau");
    const int n = standard.n();
    std::vector<int> row_of_label(n + 1);
    for (int r = 0; r < n; ++r)
        row_of_label[standard.at(r)] = r;
    std::vector<int> out;
    for (int a = 1; a < n; ++a) {
        const Box x = standard.shape().box(row_of_label[a]);
        const Box y = standard.shape().box(row_of_label[a + 1]);
        if (r_value(x, ctx) > r_value(y, ctx))
            out.push_back(a);
    }
    return out;
}

}  // namespace asfc
