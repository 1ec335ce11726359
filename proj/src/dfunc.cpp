#include "asfc/dfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace asfc {

SymFunc symmetrize_content(const ContentSeries& series, int n) {
    SymFunc out(n, Basis::monomial);
    for (const auto& [content, poly] : series) {
        std::vector<int> perm = content;
        std::sort(perm.begin(), perm.end());
        do {
            auto it = series.find(perm);
            if (it == series.end() || it->second != poly)
                throw std::logic_error("content series is not symmetric at a rearrangement");
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (std::is_sorted(content.begin(), content.end(), std::greater<>()))
            out.add(Partition(content), poly);
    }
    return out;
}

namespace {

SymFunc series_for(const Partition& lambda, const StatCtx& ctx, Sign sign, int jobs) {
    const DinvTable table(lambda, ctx);
    const ContentSeries series = jobs == 1 ? content_series_serial(table, sign)
                                           : content_series_parallel(table, sign, jobs);
    return symmetrize_content(series, ctx.n());
}

}  // namespace

SymFunc D_lambda(const Partition& lambda, const StatCtx& ctx, int jobs) {
    return series_for(lambda, ctx, Sign::positive, jobs);
}

SymFunc negative_series(const Partition& lambda, const StatCtx& ctx, int jobs) {
    return series_for(lambda, ctx, Sign::negative, jobs);
}

int corank(const Partition& lambda, const StatCtx& ctx) {
    require_admissible(lambda, ctx);
    return staircase(ctx).size() - lambda.size();
}

SymFunc D_big(const StatCtx& ctx, int jobs) {
    SymFunc out(ctx.n(), Basis::monomial);
    for (const Partition& lambda : subpartitions(staircase(ctx))) {
        const int t = corank(lambda, ctx);
        out += D_lambda(lambda, ctx, jobs).map_coeffs([t](const LaurentPoly& c) {
            return c.shift_t(t);
        });
    }
    return out;
}

QuasiSym d_lambda_fundamental(const Partition& lambda, const StatCtx& ctx, Sign sign) {
    const int n = ctx.n();
    const DinvTable table(lambda, ctx);
    std::vector<int> ones(n, 1);
    QuasiSym out(n);
    for_each_labelling_with_content(table.shape(), sign, ones, [&](std::span<const int> e) {
        const Tableau s(table.shape(), sign, std::vector<int>(e.begin(), e.end()));
        out += quasisym_Q(n, d_descents(s, ctx), sign)
                   .scaled(LaurentPoly::q_pow(table.dinv(sign, e)));
    });
    return out;
}

}  // namespace asfc
