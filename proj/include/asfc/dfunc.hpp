#pragma once

#include "asfc/kernels.hpp"
#include "asfc/quasisym.hpp"
#include "asfc/symfunc.hpp"

namespace asfc {

/// Monomial-basis symmetric function from a content series; throws
/// std::logic_error if the series is not symmetric in the variables.
SymFunc symmetrize_content(const ContentSeries& series, int n);

/// sum over positive tableaux of q^dinv z^T, monomial basis. The symmetry
/// of the content series is checked and a failure raises std::logic_error.
/// jobs = 1 runs the serial kernel.
SymFunc D_lambda(const Partition& lambda, const StatCtx& ctx, int jobs = 1);

/// The same sum over negative tableaux, monomial basis.
SymFunc negative_series(const Partition& lambda, const StatCtx& ctx, int jobs = 1);

/// sum over lambda inside delta - delta' of t^{corank} D_lambda.
SymFunc D_big(const StatCtx& ctx, int jobs = 1);

/// sum over standard tableaux S of q^{dinv(S)} Q_{n,dd(S)}, with the
/// negative Q when sign is negative.
QuasiSym d_lambda_fundamental(const Partition& lambda, const StatCtx& ctx, Sign sign);

/// |delta - delta'| - |lambda|.
int corank(const Partition& lambda, const StatCtx& ctx);

}  // namespace asfc
