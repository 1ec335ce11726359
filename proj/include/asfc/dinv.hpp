#pragma once

#include <span>
#include <vector>

#include "asfc/partition.hpp"
#include "asfc/stat_ctx.hpp"
#include "asfc/tableau.hpp"

namespace asfc {

/// Pair data for boxes in distinct rows, x = (i,j), y = (i',j'), x >_d y.
struct BoxPairData {
    int d = 0;          // floor((r(x) - r(y)) / n)
    int l = 0;          // residue of (i' - i) b in 1..n-1
    bool in_a = false;  // i > i', l < b, n - l >= b
    bool in_b = false;  // i > i', l >= b, n - l < b

    friend bool operator==(const BoxPairData&, const BoxPairData&) = default;
};

/// Throws std::invalid_argument when the rows coincide. Does not require
/// x >_d y; d may then be negative.
BoxPairData pair_data(Box x, Box y, const StatCtx& ctx);

/// m(x,y) and n(x,y).
int pair_m(const BoxPairData& p, const StatCtx& ctx);
inline int pair_n(const BoxPairData& p, const StatCtx& ctx) {
    const int v = pair_m(p, ctx) - 1;
    return v > 0 ? v : 0;
}

/// The condition 0 <= d <= m (l < b) or 0 <= d <= m-1 (l >= b).
bool is_reduced_pair(const BoxPairData& p, const StatCtx& ctx);

/// Precomputed per-shape pair table. Evaluating a statistic on an entry
/// vector is then a single pass over the ordered pairs x >_d y.
class DinvTable {
public:
    /// Throws std::invalid_argument if lambda is not inside delta - delta'.
    DinvTable(const Partition& lambda, const StatCtx& ctx);

    struct Pair {
        int hi;           // row of x
        int lo;           // row of y, with x >_d y
        int h_first;      // contribution when T(x) < T(y) (positive) / <= (negative)
        int h_second;     // contribution otherwise
        bool reduced;
    };

    const StatCtx& ctx() const noexcept { return ctx_; }
    const SkewShape& shape() const noexcept { return shape_; }
    const Partition& lambda() const noexcept { return shape_.inner(); }
    std::span<const Pair> pairs() const noexcept { return pairs_; }

    int dinv(Sign sign, std::span<const int> entries) const;
    int dinv_reduced(Sign sign, std::span<const int> entries) const;
    int dinv_dbl(Sign sign, std::span<const int> entries) const;
    int e_value() const noexcept { return e_; }
    int m_value() const noexcept { return m_; }

private:
    static bool first_rule(Sign sign, int tx, int ty) {
        return sign == Sign::positive ? tx < ty : tx <= ty;
    }

    StatCtx ctx_;
    SkewShape shape_;
    std::vector<Pair> pairs_;
    int e_ = 0;
    int m_ = 0;
};

int dinv(const Tableau& t, const StatCtx& ctx);
/// dinv' : reduced pairs under the first-rule comparison.
int dinv_reduced(const Tableau& t, const StatCtx& ctx);
/// dinv'' : reduced pairs under the second-rule comparison.
int dinv_dbl(const Tableau& t, const StatCtx& ctx);

/// dinv of the virtual labelling decreasing along >_d.
int e_of_lambda(const Partition& lambda, const StatCtx& ctx);
/// Maximum of dinv over the shape, read off the constant negative tableau.
int m_of_lambda(const Partition& lambda, const StatCtx& ctx);

/// Throws std::invalid_argument unless lambda fits inside delta - delta'.
void require_admissible(const Partition& lambda, const StatCtx& ctx);

}  // namespace asfc
