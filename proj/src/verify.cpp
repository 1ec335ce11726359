#include "asfc/verify.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "asfc/affine_weyl.hpp"
#include "asfc/dfunc.hpp"
#include "asfc/dinv.hpp"
#include "asfc/quasisym.hpp"
#include "asfc/springer.hpp"
#include "asfc/symfunc.hpp"

namespace asfc {

int Report::failures() const noexcept {
    return static_cast<int>(
        std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.pass; }));
}

std::string Report::summary() const {
    std::vector<std::string> order;
    std::map<std::string, std::pair<int, int>> tally;
    for (const auto& c : checks_) {
        if (!tally.count(c.statement))
            order.push_back(c.statement);
        auto& [ok, total] = tally[c.statement];
        ok += c.pass;
        ++total;
    }
    std::ostringstream out;
    for (const auto& s : order)
        out << s << ": " << tally[s].first << "/" << tally[s].second << " pass\n";
    for (const auto& c : checks_)
        if (!c.pass)
            out << "FAIL " << c.statement << " [" << c.instance << "] lhs=" << c.lhs
                << " rhs=" << c.rhs << "\n";
    out << (all_pass() ? "ALL PASS" : "MISMATCH") << " (" << checks_.size() << " checks, "
        << failures() << " failed)\n";
    return out.str();
}

namespace {

std::string ctx_label(const StatCtx& ctx) {
    std::ostringstream out;
    out << "n=" << ctx.n() << " m=" << ctx.m() << " b=" << ctx.b();
    return out.str();
}

std::string lambda_label(const StatCtx& ctx, const Partition& lambda) {
    return ctx_label(ctx) + " lambda=" + lambda.to_string();
}

CheckResult compare(const std::string& statement, const std::string& instance, const std::string& lhs,
                    const std::string& rhs) {
    return {statement, instance, lhs, rhs, lhs == rhs};
}

// Tally of how many items satisfy a property; passes when all do.
CheckResult tally(const std::string& statement, const std::string& instance, long long ok,
                  long long total) {
    return {statement, instance, std::to_string(ok), std::to_string(total), ok == total};
}

// q^{top} omega f(q^{-1}), Schur basis.
SymFunc shifted_omega(const SymFunc& f, const StatCtx& ctx) {
    const int top = static_cast<int>(top_degree(ctx));
    return omega(to_basis(f, Basis::schur)).map_coeffs([top](const LaurentPoly& c) {
        return c.invert_q().shift_q(top);
    });
}

}  // namespace

Report verify_cell_dimension(const StatCtx& ctx, int jobs) {
    Report r;
    const long long constant = top_degree(ctx);
    for (const CellRecord& cell : cell_records(ctx, jobs))
        r.add(compare("cell-dimension", lambda_label(ctx, cell.lambda),
                      std::to_string(cell.dim + cell.m_lambda), std::to_string(constant)));
    return r;
}

Report verify_parahoric_dimension(const StatCtx& ctx) {
    Report r;
    for (const Partition& lambda : subpartitions(staircase(ctx))) {
        const PElement p = partition_to_p(lambda, ctx);
        for (const Partition& mu : partitions_of(ctx.n())) {
            const auto cells = parahoric_cells(p, mu.parts(), ctx);
            long long ok = 0;
            for (const ParahoricCell& cell : cells)
                ok += parahoric_dim_root_count(p, cell.coset, mu.parts(), ctx) == cell.dim;
            const std::string inst = lambda_label(ctx, lambda) + " mu=" + mu.to_string();
            r.add(tally("parahoric-dimension", inst, ok, static_cast<long long>(cells.size())));
            const auto tableaux =
                enumerate_tableaux(SkewShape(lambda, ctx.n()), Sign::negative, mu.parts());
            r.add(compare("parahoric-dimension", inst + " coset-count",
                          std::to_string(cells.size()), std::to_string(tableaux.size())));
        }
    }
    return r;
}

Report verify_cell_frobenius(const StatCtx& ctx, int jobs) {
    Report r;
    for (const Partition& lambda : subpartitions(staircase(ctx))) {
        const SymFunc lhs = frobenius_cell(partition_to_p(lambda, ctx), ctx);
        const SymFunc rhs = shifted_omega(D_lambda(lambda, ctx, jobs), ctx);
        r.add(compare("cell-frobenius", lambda_label(ctx, lambda), lhs.to_string(), rhs.to_string()));
    }
    return r;
}

Report verify_total_frobenius(const StatCtx& ctx, int jobs) {
    Report r;
    SymFunc lhs(ctx.n(), Basis::schur);
    for (const Partition& lambda : subpartitions(staircase(ctx))) {
        const PElement p = partition_to_p(lambda, ctx);
        const int t = p.a_value();
        lhs += frobenius_cell(p, ctx).map_coeffs([t](const LaurentPoly& c) { return c.shift_t(t); });
    }
    const SymFunc rhs = shifted_omega(D_big(ctx, jobs), ctx);
    r.add(compare("total-frobenius", ctx_label(ctx), lhs.to_string(), rhs.to_string()));
    return r;
}

Report verify_dinv_identities(const StatCtx& ctx) {
    Report r;
    const int n = ctx.n();
    for (const Partition& lambda : subpartitions(staircase(ctx))) {
        const DinvTable table(lambda, ctx);
        const int e = table.e_value(), m = table.m_value();
        for (Sign sign : {Sign::positive, Sign::negative}) {
            long long total = 0, e_split = 0, m_split = 0, complement = 0, standard = 0;
            for_each_labelling(table.shape(), sign, n, [&](std::span<const int> entries) {
                ++total;
                const int d = table.dinv(sign, entries);
                const int red = table.dinv_reduced(sign, entries);
                const int dbl = table.dinv_dbl(sign, entries);
                e_split += d == e + red;
                m_split += m - e == red + dbl;
                complement += d == m - dbl;
                const Tableau t(table.shape(), sign, {entries.begin(), entries.end()});
                standard += d == table.dinv(sign, standardize(t, ctx).entries());
            });
            const std::string inst =
                lambda_label(ctx, lambda) + (sign == Sign::positive ? " sign=+" : " sign=-");
            r.add(tally("dinv-identities", inst + " dinv=e+dinv'", e_split, total));
            r.add(tally("dinv-identities", inst + " m-e=dinv'+dinv''", m_split, total));
            r.add(tally("dinv-identities", inst + " dinv=m-dinv''", complement, total));
            r.add(tally("dinv-identities", inst + " dinv=dinv(st)", standard, total));
        }
    }
    return r;
}

Report verify_symmetry(const StatCtx& ctx, int jobs) {
    Report r;
    for (const Partition& lambda : subpartitions(staircase(ctx))) {
        const std::string inst = lambda_label(ctx, lambda);
        try {
            D_lambda(lambda, ctx, jobs);
            r.add({"symmetry", inst, "symmetric", "symmetric", true});
        } catch (const std::logic_error& err) {
            r.add({"symmetry", inst, err.what(), "symmetric", false});
        }
        // Invariant dimensions must not see the order of the blocks.
        const PElement p = partition_to_p(lambda, ctx);
        long long ok = 0, total = 0;
        for (const Partition& mu : partitions_of(ctx.n())) {
            LaurentPoly sorted;
            for (const auto& cell : parahoric_cells(p, mu.parts(), ctx))
                sorted += LaurentPoly::q_pow(cell.dim);
            std::vector<int> comp = mu.parts();
            std::sort(comp.begin(), comp.end());
            do {
                LaurentPoly here;
                for (const auto& cell : parahoric_cells(p, comp, ctx))
                    here += LaurentPoly::q_pow(cell.dim);
                ok += here == sorted;
                ++total;
            } while (std::next_permutation(comp.begin(), comp.end()));
        }
        r.add(tally("symmetry", inst + " block-order", ok, total));
    }
    return r;
}

Report verify_omega_duality(const StatCtx& ctx, int jobs) {
    Report r;
    for (const Partition& lambda : subpartitions(staircase(ctx))) {
        const std::string inst = lambda_label(ctx, lambda);
        const SymFunc d = D_lambda(lambda, ctx, jobs);
        const SymFunc neg = negative_series(lambda, ctx, jobs);
        r.add(compare("omega-duality", inst + " negative=omega",
                      to_basis(neg, Basis::schur).to_string(),
                      omega(to_basis(d, Basis::schur)).to_string()));
        r.add(compare("omega-duality", inst + " fundamental+",
                      to_symfunc(d_lambda_fundamental(lambda, ctx, Sign::positive)).to_string(),
                      d.to_string()));
        r.add(compare("omega-duality", inst + " fundamental-",
                      to_symfunc(d_lambda_fundamental(lambda, ctx, Sign::negative)).to_string(),
                      neg.to_string()));
        r.add(compare("omega-duality", inst + " quasisym-omega",
                      to_basis(omega_via_quasisym(d), Basis::schur).to_string(),
                      omega(to_basis(d, Basis::schur)).to_string()));
    }
    return r;
}

Report verify_schur_positivity(const StatCtx& ctx, int jobs) {
    Report r;
    for (const Partition& lambda : subpartitions(staircase(ctx))) {
        const SymFunc s = to_basis(D_lambda(lambda, ctx, jobs), Basis::schur);
        r.add({"schur-positivity", lambda_label(ctx, lambda), s.to_string(),
               "nonnegative coefficients", is_schur_positive(s)});
    }
    return r;
}

namespace {

// Every (n-1)-tuple with entries in 0..bound, lexicographic.
std::vector<PElement> p_box(int n, int bound) {
    std::vector<PElement> out;
    std::vector<int> a(n - 1, 0);
    while (true) {
        out.emplace_back(n, a);
        int k = n - 2;
        while (k >= 0 && a[k] == bound)
            a[k--] = 0;
        if (k < 0)
            break;
        ++a[k];
    }
    return out;
}

// Sum-zero vectors with entries in -bound..bound.
std::vector<Coweight> coweight_box(int n, int bound) {
    std::vector<Coweight> out;
    Coweight x(n, -bound);
    while (true) {
        int s = 0;
        for (int v : x)
            s += v;
        if (s == 0)
            out.push_back(x);
        int k = n - 1;
        while (k >= 0 && x[k] == bound)
            x[k--] = -bound;
        if (k < 0)
            break;
        ++x[k];
    }
    return out;
}

}  // namespace

Report verify_lattice(int n, int bound) {
    Report r;
    const std::string inst = "n=" + std::to_string(n) + " a_i<=" + std::to_string(bound);
    const auto ps = p_box(n, bound);

    long long round = 0, pairing = 0, pairing_total = 0, refl = 0, refl_total = 0;
    long long minlen = 0, steps = 0, steps_total = 0, words = 0;
    const bool brute = n <= 5;
    const auto perms = brute ? all_permutations(n) : std::vector<Permutation>{};
    for (const PElement& p : ps) {
        const Coweight x = p_to_coweight(p);
        round += coweight_to_p(x) == p;
        const int a = p.a_value();
        for (int l = 1; l <= n; ++l) {
            const long long expect = p.at(l - a) - p.at(l - a + 1) + (l % n == 0 ? 1 : 0);
            pairing += pair_simple_root(x, l) == expect;
            ++pairing_total;
        }
        for (int l = 0; l < n; ++l) {
            refl += p_to_coweight(reflect(p, l)) == AffineWeylElt::simple(n, a + l).act(x);
            ++refl_total;
        }
        const int lf = ell_f(x);
        if (brute) {
            int best = INT_MAX;
            for (const auto& w : perms)
                best = std::min(best, length(AffineWeylElt(x, w)));
            minlen += best == lf && length(AffineWeylElt(x, w_min(x))) == lf;
        }
        if (a > 0) {
            int l = 0;
            for (int i = 1; i < n; ++i)
                if (p.values()[i - 1] >= 1)
                    l = i;
            steps += ell_f(p_to_coweight(reflect(p, l))) == lf - 1;
            ++steps_total;
        }
        steps += ell_f(p_to_coweight(reflect(p, 0))) == lf + 1;
        ++steps_total;
        const auto word = reduced_word_wf(p);
        words += static_cast<int>(word.size()) == lf &&
                 word_product(n, word) == AffineWeylElt(x, w_min(x));
    }
    const long long np = static_cast<long long>(ps.size());
    r.add(tally("lattice", inst + " p->x->p", round, np));
    long long back = 0, nx = 0;
    for (const Coweight& x : coweight_box(n, bound)) {
        back += p_to_coweight(coweight_to_p(x)) == x;
        ++nx;
    }
    r.add(tally("lattice", "n=" + std::to_string(n) + " |x_i|<=" + std::to_string(bound) +
                               " x->p->x",
                back, nx));
    r.add(tally("lattice", inst + " simple-root pairing", pairing, pairing_total));
    r.add(tally("lattice", inst + " reflection vs action", refl, refl_total));
    if (brute)
        r.add(tally("lattice", inst + " ell_f = min length", minlen, np));
    r.add(tally("lattice", inst + " descent unit steps", steps, steps_total));
    r.add(tally("lattice", inst + " reduced word product", words, np));
    return r;
}

Report verify_bruhat_filtration(int n, int max_a) {
    Report r;
    const std::string inst = "n=" + std::to_string(n) + " a<=" + std::to_string(max_a);
    std::vector<PElement> ps;
    for (const PElement& p : p_box(n, max_a))
        if (p.a_value() <= max_a)
            ps.push_back(p);
    std::vector<AffineWeylElt> reps;
    std::vector<std::set<AffineWeylElt>> below;
    for (const PElement& p : ps) {
        const Coweight x = p_to_coweight(p);
        reps.emplace_back(x, w_min(x));
        below.push_back(subword_products(n, reduced_word_wf(p)));
    }
    long long mono = 0, comparable = 0;
    for (std::size_t v = 0; v < ps.size(); ++v)
        for (std::size_t u = 0; u < ps.size(); ++u)
            if (below[v].count(reps[u])) {
                ++comparable;
                mono += ps[u].a_value() <= ps[v].a_value();
            }
    r.add(tally("bruhat-filtration", inst + " u<=v implies a(u)<=a(v)", mono, comparable));
    long long cyc = 0;
    for (std::size_t v = 0; v < ps.size(); ++v) {
        const int len = static_cast<int>(reduced_word_wf(ps[v]).size());
        int best = -1;
        for (int j = 0; j <= len; ++j)
            if (below[v].count(word_product(n, cyc_word(n, j))))
                best = j;
        cyc += best == ps[v].a_value();
    }
    r.add(tally("bruhat-filtration", inst + " a = max{j : cyc_j <= v}", cyc,
                static_cast<long long>(ps.size())));
    return r;
}

const std::vector<std::string>& statement_names() {
    static const std::vector<std::string> names{
        "dinv-identities", "symmetry",         "omega-duality",  "schur-positivity",
        "cell-dimension",  "parahoric-dimension", "cell-frobenius", "total-frobenius",
        "lattice",         "bruhat-filtration"};
    return names;
}

std::string canonical_statement(const std::string& name) {
    static const std::map<std::string, std::string> aliases{
        {"3.4", "dinv-identities"},  {"3.5", "dinv-identities"}, {"3.6", "dinv-identities"},
        {"3.8", "symmetry"},         {"3.9", "omega-duality"},   {"4.14", "schur-positivity"},
        {"4.10", "cell-dimension"},  {"4.12", "parahoric-dimension"},
        {"4.13", "cell-frobenius"},  {"4.15", "total-frobenius"}, {"4.1", "lattice"},
        {"4.6", "bruhat-filtration"}};
    if (name == "all")
        return name;
    if (auto it = aliases.find(name); it != aliases.end())
        return it->second;
    const auto& names = statement_names();
    if (std::find(names.begin(), names.end(), name) != names.end())
        return name;
    throw std::invalid_argument("unknown statement '" + name + "'");
}

Report run_statement(const std::string& name, const StatCtx& ctx, int jobs) {
    const std::string s = canonical_statement(name);
    if (s == "all") {
        Report all;
        for (const auto& each : statement_names())
            all.append(run_statement(each, ctx, jobs));
        return all;
    }
    if (s == "dinv-identities")
        return verify_dinv_identities(ctx);
    if (s == "symmetry")
        return verify_symmetry(ctx, jobs);
    if (s == "omega-duality")
        return verify_omega_duality(ctx, jobs);
    if (s == "schur-positivity")
        return verify_schur_positivity(ctx, jobs);
    if (s == "cell-dimension")
        return verify_cell_dimension(ctx, jobs);
    if (s == "parahoric-dimension")
        return verify_parahoric_dimension(ctx);
    if (s == "cell-frobenius")
        return verify_cell_frobenius(ctx, jobs);
    if (s == "total-frobenius")
        return verify_total_frobenius(ctx, jobs);
    if (s == "lattice")
        return verify_lattice(ctx.n(), ctx.n() <= 6 ? 3 : 1);
    return verify_bruhat_filtration(ctx.n(), ctx.n() <= 3 ? 3 : 2);
}

}  // namespace asfc
