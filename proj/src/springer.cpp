#include "asfc/springer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "asfc/dinv.hpp"

namespace asfc {

namespace {

void require_same_n(const PElement& p, const StatCtx& ctx) {
    if (p.n() != ctx.n())
        throw std::invalid_argument("PElement has n=" + std::to_string(p.n()) + " but ctx has n=" +
                                    std::to_string(ctx.n()));
}

// Position underline(a + (row+1) b) carried by the box in `row`.
int row_position(int row, const PElement& p, const StatCtx& ctx) {
    return underline(static_cast<long long>(p.a_value()) + static_cast<long long>(row + 1) * ctx.b(),
                     ctx.n());
}

// Scans k over the window low <= h + kn < mn+b (low = 0 or 1) and counts
// the k passing `keep(k)`.
template <class Keep>
int count_levels(int h, int low, const StatCtx& ctx, Keep&& keep) {
    const long long n = ctx.n();
    const long long s = ctx.slope();
    // smallest k with h + kn >= low
    long long k = floor_div(low - h + n - 1, n);
    int count = 0;
    for (; h + k * n < s; ++k)
        if (keep(k))
            ++count;
    return count;
}

}  // namespace

bool cell_nonempty(const PElement& p, const StatCtx& ctx) {
    require_same_n(p, ctx);
    for (int k = 1; k <= ctx.n(); ++k)
        if (p.at(k) - p.at(k + ctx.b()) > ctx.m())
            return false;
    return true;
}

Partition p_to_partition(const PElement& p, const StatCtx& ctx) {
    if (!cell_nonempty(p, ctx))
        throw std::invalid_argument("cell of " + p.to_string() + " is empty");
    const Partition d = delta(ctx);
    std::vector<int> parts(ctx.n());
    for (int l = 1; l <= ctx.n(); ++l)
        parts[l - 1] = d.part(l - 1) - static_cast<int>(p.at(static_cast<long long>(l) * ctx.b()));
    return Partition(std::move(parts));
}

PElement partition_to_p(const Partition& lambda, const StatCtx& ctx) {
    require_admissible(lambda, ctx);
    const int n = ctx.n();
    const Partition d = delta(ctx);
    const std::vector<int> dp = delta_prime(ctx);
    std::vector<int> a(n - 1, 0);
    for (int l = 1; l <= n; ++l) {
        const int pos = underline(static_cast<long long>(l) * ctx.b(), n);
        const int v = d.part(l - 1) - lambda.part(l - 1) - dp[l - 1];
        if (pos == n) {
            if (v != 0)
                throw std::logic_error("partition_to_p: a_n would be nonzero");
            continue;
        }
        a[pos - 1] = v;
    }
    return PElement(n, std::move(a));
}

Root alpha_of_pair(Box x, Box y, const PElement& p, const StatCtx& ctx) {
    require_same_n(p, ctx);
    if (x.i == y.i)
        throw std::invalid_argument("alpha_of_pair needs boxes in distinct rows");
    return {row_position(x.i, p, ctx), row_position(y.i, p, ctx)};
}

int cell_dim_root_count(const PElement& p, const StatCtx& ctx, bool closed_below) {
    if (!cell_nonempty(p, ctx))
        throw std::invalid_argument("cell of " + p.to_string() + " is empty");
    const Coweight x = p_to_coweight(p);
    const int n = ctx.n();
    int total = 0;
    for (int a = 1; a <= n; ++a)
        for (int c = 1; c <= n; ++c) {
            if (a == c)
                continue;
            const Root r{a, c};
            const int pairing = r.pair(x);
            total += count_levels(r.height(), closed_below ? 0 : 1, ctx,
                                  [&](long long k) { return -pairing + k < 0; });
        }
    return total;
}

std::vector<CellRecord> cell_records_serial(const StatCtx& ctx) {
    std::vector<CellRecord> out;
    for (const Partition& lambda : subpartitions(staircase(ctx))) {
        PElement p = partition_to_p(lambda, ctx);
        const int dim = cell_dim_root_count(p, ctx);
        const int corank = p.a_value();
        out.push_back({std::move(p), lambda, dim, corank, m_of_lambda(lambda, ctx)});
    }
    return out;
}

std::vector<CellRecord> cell_records(const StatCtx& ctx, int jobs) {
    const std::vector<Partition> shapes = subpartitions(staircase(ctx));
    const int count = static_cast<int>(shapes.size());
    std::vector<CellRecord> out(count, CellRecord{PElement::zero(ctx.n()), {}, 0, 0, 0});
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : 1)
    for (int k = 0; k < count; ++k) {
        PElement p = partition_to_p(shapes[k], ctx);
        const int dim = cell_dim_root_count(p, ctx);
        const int corank = p.a_value();
        out[k] = CellRecord{std::move(p), shapes[k], dim, corank, m_of_lambda(shapes[k], ctx)};
    }
    return out;
}

std::vector<int> block_labels(const std::vector<int>& mu) {
    std::vector<int> labels;
    for (std::size_t k = 0; k < mu.size(); ++k) {
        if (mu[k] < 0)
            throw std::invalid_argument("composition parts must be nonnegative");
        labels.insert(labels.end(), mu[k], static_cast<int>(k) + 1);
    }
    return labels;
}

std::vector<ParahoricCell> parahoric_cells(const PElement& p, const std::vector<int>& mu,
                                           const StatCtx& ctx) {
    const int n = ctx.n();
    const std::vector<int> blocks = block_labels(mu);
    if (static_cast<int>(blocks.size()) != n)
        throw std::invalid_argument("composition mu does not sum to n");
    const Partition lambda = p_to_partition(p, ctx);
    const DinvTable table(lambda, ctx);
    const int d_lambda = cell_dim_root_count(p, ctx);

    // g(pos) = block label of w^{-1}(pos); w sends each block increasingly
    // onto the positions carrying its label.
    std::vector<int> g = blocks;
    std::vector<ParahoricCell> out;
    do {
        Permutation w(n);
        std::vector<int> next_in_block(mu.size() + 1, 0);
        for (std::size_t k = 0, start = 0; k < mu.size(); ++k) {
            next_in_block[k + 1] = static_cast<int>(start);
            start += mu[k];
        }
        for (int pos = 1; pos <= n; ++pos) {
            const int src = ++next_in_block[g[pos - 1]];  // 1-based position inside block order
            w[src - 1] = pos;
        }
        std::vector<int> entries(n);
        for (int row = 0; row < n; ++row)
            entries[row] = g[row_position(row, p, ctx) - 1];
        if (semistandard_violation(table.shape(), Sign::negative, entries))
            continue;
        const int dim = d_lambda + table.dinv_dbl(Sign::negative, entries);
        out.push_back({std::move(w), Tableau(table.shape(), Sign::negative, entries), dim});
    } while (std::next_permutation(g.begin(), g.end()));
    return out;
}

int parahoric_dim_root_count(const PElement& p, const Permutation& w, const std::vector<int>& mu,
                             const StatCtx& ctx) {
    if (!cell_nonempty(p, ctx))
        throw std::invalid_argument("cell of " + p.to_string() + " is empty");
    const int n = ctx.n();
    const std::vector<int> blocks = block_labels(mu);
    if (static_cast<int>(blocks.size()) != n || static_cast<int>(w.size()) != n)
        throw std::invalid_argument("composition or permutation size differs from n");
    const Permutation winv = inverse(w);
    const Coweight x = p_to_coweight(p);
    int total = 0;
    for (int a = 1; a <= n; ++a)
        for (int c = 1; c <= n; ++c) {
            if (a == c)
                continue;
            const Root r{a, c};
            const int pairing = r.pair(x);
            // <rho_mu, w^{-1} alpha> < 0 exactly when the block of w^{-1}(p)
            // comes after the block of w^{-1}(q).
            const bool tie_negative = blocks[winv[a - 1] - 1] > blocks[winv[c - 1] - 1];
            total += count_levels(r.height(), 0, ctx, [&](long long k) {
                const long long v = -pairing + k;
                return v < 0 || (v == 0 && tie_negative);
            });
        }
    return total;
}

std::map<Partition, LaurentPoly> cell_invariant_dims(const PElement& p, const StatCtx& ctx) {
    std::map<Partition, LaurentPoly> dims;
    for (const Partition& mu : partitions_of(ctx.n())) {
        LaurentPoly sum;
        for (const ParahoricCell& cell : parahoric_cells(p, mu.parts(), ctx))
            sum += LaurentPoly::q_pow(cell.dim);
        dims[mu] = std::move(sum);
    }
    return dims;
}

SymFunc frobenius_cell(const PElement& p, const StatCtx& ctx) {
    return frobenius_from_invariants(ctx.n(), cell_invariant_dims(p, ctx));
}

}  // namespace asfc
