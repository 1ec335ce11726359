#pragma once

#include <map>
#include <vector>

#include "asfc/affine_weyl.hpp"
#include "asfc/partition.hpp"
#include "asfc/stat_ctx.hpp"
#include "asfc/symfunc.hpp"
#include "asfc/tableau.hpp"

namespace asfc {

/// e_p - e_q with 1 <= p, q <= n, p != q.
struct Root {
    int p = 1;
    int q = 2;

    bool positive() const noexcept { return p < q; }
    /// Pairing with rho-check: q - p.
    int height() const noexcept { return q - p; }
    Root negated() const noexcept { return {q, p}; }
    /// <x, e_p - e_q>
    int pair(const Coweight& x) const { return x[p - 1] - x[q - 1]; }

    friend bool operator==(const Root&, const Root&) = default;
};

/// a_k - a_{k+b} <= m for k = 1..n.
bool cell_nonempty(const PElement& p, const StatCtx& ctx);

/// delta - (a_b, a_{2b}, ..., a_{nb}); throws std::invalid_argument on an
/// empty cell.
Partition p_to_partition(const PElement& p, const StatCtx& ctx);
/// Inverse of p_to_partition; throws unless lambda fits in delta - delta'.
PElement partition_to_p(const Partition& lambda, const StatCtx& ctx);

/// e_{a+(i+1)b} - e_{a+(i'+1)b}, indices reduced into 1..n.
Root alpha_of_pair(Box x, Box y, const PElement& p, const StatCtx& ctx);

/// #{(alpha, k) : 0 < ht(alpha) + kn < mn+b, -<lambda(p), alpha> + k < 0}.
/// With `closed_below` the first bound becomes 0 <=; the count is the same
/// because ht(alpha) + kn never vanishes.
int cell_dim_root_count(const PElement& p, const StatCtx& ctx, bool closed_below = false);

struct CellRecord {
    PElement p;
    Partition lambda;
    int dim = 0;
    int corank = 0;
    int m_lambda = 0;
};

/// One record per partition inside delta - delta', reverse lexicographic.
std::vector<CellRecord> cell_records_serial(const StatCtx& ctx);
/// Same records computed on `jobs` threads (0 = runtime default).
std::vector<CellRecord> cell_records(const StatCtx& ctx, int jobs);

/// A coset w W_mu, stored as its minimal representative, together with the
/// negative tableau it induces.
struct ParahoricCell {
    Permutation coset;
    Tableau tableau;
    int dim = 0;
};

/// Label of each position 1..n under the block decomposition of the
/// composition mu: block k+1 holds mu_1 + ... + mu_k + 1 .. mu_1 + ... + mu_{k+1}.
std::vector<int> block_labels(const std::vector<int>& mu);

/// Cosets of the Young subgroup of the composition mu whose induced filling
/// is a negative semistandard tableau, with dim = d(lambda) + dinv''(T).
/// Ordered lexicographically by the label word.
std::vector<ParahoricCell> parahoric_cells(const PElement& p, const std::vector<int>& mu,
                                           const StatCtx& ctx);

/// The root count for one coset, with the perturbation by rho-check_mu
/// resolved as a tie-break at equality.
int parahoric_dim_root_count(const PElement& p, const Permutation& w, const std::vector<int>& mu,
                             const StatCtx& ctx);

/// sum over kept cosets of q^dim, for every partition mu of n.
std::map<Partition, LaurentPoly> cell_invariant_dims(const PElement& p, const StatCtx& ctx);

/// Schur expansion assembled from cell_invariant_dims.
SymFunc frobenius_cell(const PElement& p, const StatCtx& ctx);

}  // namespace asfc
