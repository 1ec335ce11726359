#pragma once

#include <vector>

#include "asfc/partition.hpp"

namespace asfc {

/// The fixed data (n, m, b) every statistic depends on: m >= 0,
/// 1 <= b < n and gcd(n, b) = 1.
class StatCtx {
public:
    StatCtx(int n, int m, int b);

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    int b() const noexcept { return b_; }
    /// mn + b
    long long slope() const noexcept { return static_cast<long long>(m_) * n_ + b_; }

    friend bool operator==(const StatCtx&, const StatCtx&) = default;

private:
    int n_;
    int m_;
    int b_;
};

/// r(x) = (mn+b)n - (mn+b)(i+1) - n(j+1). Injective on rows 0..n-1, and
/// x >_d y exactly when r(x) > r(y).
long long r_value(Box x, const StatCtx& ctx);

/// (m(n-1)+b-1, m(n-2)+b-1, ..., m+b-1, b-1)
Partition delta(const StatCtx& ctx);

/// delta'_l = floor-type quotient l' of lb = l'n + l'' with 1 <= l'' <= n,
/// for l = 1..n. Returned 0-based (entry l-1).
std::vector<int> delta_prime(const StatCtx& ctx);

/// delta - delta', always a partition; the shapes of interest live inside it.
Partition staircase(const StatCtx& ctx);

/// m*C(n,2) + (n-1)(b-1)/2, the common value of d(lambda) + m(lambda).
long long top_degree(const StatCtx& ctx);

/// Representative of l modulo n in 1..n.
inline int underline(long long l, int n) {
    long long r = l % n;
    if (r <= 0)
        r += n;
    return static_cast<int>(r);
}

/// Floor division for possibly negative numerators.
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace asfc
