#pragma once

#include <string>
#include <vector>

#include "asfc/stat_ctx.hpp"

namespace asfc {

struct CheckResult {
    std::string statement;
    std::string instance;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

/// Ordered list of checks; order is fixed by the sweep, not by timing.
class Report {
public:
    void add(CheckResult r) { checks_.push_back(std::move(r)); }
    void append(const Report& o) { checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end()); }
    const std::vector<CheckResult>& checks() const noexcept { return checks_; }
    int failures() const noexcept;
    bool all_pass() const noexcept { return failures() == 0; }
    /// One line per statement: "cell-dimension: 7/7 pass", then one line per failure.
    std::string summary() const;

private:
    std::vector<CheckResult> checks_;
};

/// d(lambda) + m(lambda) against the closed constant, every nonempty cell.
Report verify_cell_dimension(const StatCtx& ctx, int jobs = 1);
/// Coset root count against d(lambda) + dinv''(T), every cell, mu and coset.
/// Also checks the coset count against negative tableau enumeration.
Report verify_parahoric_dimension(const StatCtx& ctx);
/// Frobenius series of each cell against the shifted omega D_lambda(q^{-1}).
Report verify_cell_frobenius(const StatCtx& ctx, int jobs = 1);
/// t-graded sum of the cell series against the shifted omega D(q^{-1}, t).
Report verify_total_frobenius(const StatCtx& ctx, int jobs = 1);
/// dinv = e + dinv', m - e = dinv' + dinv'', dinv = m - dinv'' and
/// dinv = dinv(standardization) for every tableau of both signs.
Report verify_dinv_identities(const StatCtx& ctx);
/// Symmetry of every D_lambda and order independence of invariant dimensions.
Report verify_symmetry(const StatCtx& ctx, int jobs = 1);
/// Negative-tableau series against omega D_lambda, and the fundamental
/// quasisymmetric expansions of both series.
Report verify_omega_duality(const StatCtx& ctx, int jobs = 1);
/// Nonnegativity of every Schur coefficient of every D_lambda.
Report verify_schur_positivity(const StatCtx& ctx, int jobs = 1);
/// Lattice layer for n = ctx.n(), entries a_i <= bound: coweight round trip,
/// simple-root pairing, reflections against the group action, ell_f against
/// the minimum over the finite Weyl group, unit steps of the descent.
Report verify_lattice(int n, int bound = 3);
/// Bruhat order on the minimal representatives never decreases a, and a is
/// the largest j with cyc_j below the representative.
Report verify_bruhat_filtration(int n, int max_a = 3);

/// Canonical statement names, in the order "all" runs them.
const std::vector<std::string>& statement_names();
/// Maps a name or numeric alias to the canonical name; throws
/// std::invalid_argument on unknown names.
std::string canonical_statement(const std::string& name);
/// Runs one canonical statement, or every statement for "all".
Report run_statement(const std::string& name, const StatCtx& ctx, int jobs = 1);

}  // namespace asfc
