#pragma once

#include <map>
#include <vector>

#include "asfc/dinv.hpp"
#include "asfc/laurent.hpp"
#include "asfc/tableau.hpp"

namespace asfc {

/// sum_T q^{dinv(T)} z^T over tableaux of one sign with entries <= n, keyed
/// by the length-n content vector.
using ContentSeries = std::map<std::vector<int>, LaurentPoly>;

/// Reference implementation: one pass of the odometer.
ContentSeries content_series_serial(const DinvTable& table, Sign sign);

/// Splits the enumeration over fixed prefixes of the first rows and runs
/// them on `jobs` OpenMP threads (0 = runtime default). The result does not
/// depend on `jobs`.
ContentSeries content_series_parallel(const DinvTable& table, Sign sign, int jobs);

/// Largest positive job count the runtime offers.
int default_jobs();

}  // namespace asfc
