#include "asfc/dinv.hpp"

#include <stdexcept>

namespace asfc {

BoxPairData pair_data(Box x, Box y, const StatCtx& ctx) {
    if (x.i == y.i)
        throw std::invalid_argument("pair_data needs boxes in distinct rows");
    const int n = ctx.n();
    const int b = ctx.b();
    BoxPairData p;
    p.d = static_cast<int>(floor_div(r_value(x, ctx) - r_value(y, ctx), n));
    p.l = underline(static_cast<long long>(y.i - x.i) * b, n);
    const int l_rev = n - p.l;
    if (x.i > y.i) {
        p.in_a = p.l < b && l_rev >= b;
        p.in_b = p.l >= b && l_rev < b;
    }
    return p;
}

int pair_m(const BoxPairData& p, const StatCtx& ctx) {
    const int v = p.l < ctx.b() ? ctx.m() + 1 - p.d : ctx.m() - p.d;
    return v > 0 ? v : 0;
}

bool is_reduced_pair(const BoxPairData& p, const StatCtx& ctx) {
    const int top = p.l < ctx.b() ? ctx.m() : ctx.m() - 1;
    return p.d >= 0 && p.d <= top;
}

void require_admissible(const Partition& lambda, const StatCtx& ctx) {
    const Partition outer = staircase(ctx);
    if (!outer.contains(lambda))
        throw std::invalid_argument("lambda " + lambda.to_string() + " is not contained in " +
                                    outer.to_string() + " = delta - delta'");
}

namespace {

const Partition& admissible(const Partition& lambda, const StatCtx& ctx) {
    require_admissible(lambda, ctx);
    return lambda;
}

}  // namespace

DinvTable::DinvTable(const Partition& lambda, const StatCtx& ctx)
    : ctx_(ctx), shape_(admissible(lambda, ctx), ctx.n()) {
    const int n = ctx.n();
    for (int a = 0; a < n; ++a) {
        for (int c = 0; c < n; ++c) {
            if (a == c)
                continue;
            const Box x = shape_.box(a), y = shape_.box(c);
            if (r_value(x, ctx) <= r_value(y, ctx))
                continue;
            const BoxPairData p = pair_data(x, y, ctx);
            const int corr = p.in_a ? -1 : (p.in_b ? 1 : 0);
            Pair entry{a, c, pair_m(p, ctx) + corr, pair_n(p, ctx) + corr,
                       is_reduced_pair(p, ctx)};
            e_ += entry.h_second;
            m_ += entry.h_first;
            pairs_.push_back(entry);
        }
    }
}

int DinvTable::dinv(Sign sign, std::span<const int> e) const {
    int total = 0;
    for (const Pair& p : pairs_)
        total += first_rule(sign, e[p.hi], e[p.lo]) ? p.h_first : p.h_second;
    return total;
}

int DinvTable::dinv_reduced(Sign sign, std::span<const int> e) const {
    int total = 0;
    for (const Pair& p : pairs_)
        total += p.reduced && first_rule(sign, e[p.hi], e[p.lo]);
    return total;
}

int DinvTable::dinv_dbl(Sign sign, std::span<const int> e) const {
    int total = 0;
    for (const Pair& p : pairs_)
        total += p.reduced && !first_rule(sign, e[p.hi], e[p.lo]);
    return total;
}

namespace {

void require_ctx(const Tableau& t, const StatCtx& ctx) {
    if (t.n() != ctx.n())
        throw std::invalid_argument("tableau has n=" + std::to_string(t.n()) + " but ctx has n=" +
                                    std::to_string(ctx.n()));
}

}  // namespace

int dinv(const Tableau& t, const StatCtx& ctx) {
    require_ctx(t, ctx);
    return DinvTable(t.shape().inner(), ctx).dinv(t.sign(), t.entries());
}

int dinv_reduced(const Tableau& t, const StatCtx& ctx) {
    require_ctx(t, ctx);
    return DinvTable(t.shape().inner(), ctx).dinv_reduced(t.sign(), t.entries());
}

int dinv_dbl(const Tableau& t, const StatCtx& ctx) {
    require_ctx(t, ctx);
    return DinvTable(t.shape().inner(), ctx).dinv_dbl(t.sign(), t.entries());
}

int e_of_lambda(const Partition& lambda, const StatCtx& ctx) {
    return DinvTable(lambda, ctx).e_value();
}

int m_of_lambda(const Partition& lambda, const StatCtx& ctx) {
    return DinvTable(lambda, ctx).m_value();
}

}  // namespace asfc
