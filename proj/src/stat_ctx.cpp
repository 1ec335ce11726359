#include "asfc/stat_ctx.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace asfc {

StatCtx::StatCtx(int n, int m, int b) : n_(n), m_(m), b_(b) {
    if (n < 2)
        throw std::invalid_argument("n must be at least 2 (need 1 <= b < n)");
    if (m < 0)
        throw std::invalid_argument("m must be nonnegative");
    if (b < 1 || b >= n)
        throw std::invalid_argument("b must satisfy 1 <= b < n");
    if (std::gcd(n, b) != 1)
        throw std::invalid_argument("gcd(n, b) must be 1, got gcd(" + std::to_string(n) + ", " +
                                    std::to_string(b) + ") = " + std::to_string(std::gcd(n, b)));
}

long long r_value(Box x, const StatCtx& ctx) {
    const long long s = ctx.slope();
    const long long n = ctx.n();
    return s * n - s * (x.i + 1) - n * (x.j + 1);
}

Partition delta(const StatCtx& ctx) {
    std::vector<int> parts(ctx.n());
    for (int k = 0; k < ctx.n(); ++k)
        parts[k] = ctx.m() * (ctx.n() - 1 - k) + ctx.b() - 1;
    return Partition(std::move(parts));
}

std::vector<int> delta_prime(const StatCtx& ctx) {
    std::vector<int> out(ctx.n());
    for (int l = 1; l <= ctx.n(); ++l) {
        const long long lb = static_cast<long long>(l) * ctx.b();
        const int rem = underline(lb, ctx.n());
        out[l - 1] = static_cast<int>((lb - rem) / ctx.n());
    }
    return out;
}

Partition staircase(const StatCtx& ctx) {
    const Partition d = delta(ctx);
    const std::vector<int> dp = delta_prime(ctx);
    std::vector<int> parts(ctx.n());
    for (int k = 0; k < ctx.n(); ++k)
        parts[k] = d.part(k) - dp[k];
    return Partition(std::move(parts));
}

long long top_degree(const StatCtx& ctx) {
    const long long n = ctx.n();
    return static_cast<long long>(ctx.m()) * n * (n - 1) / 2 + (n - 1) * (ctx.b() - 1) / 2;
}

}  // namespace asfc
