// asfc: command line front end for the dinv / cell library.
//
// Exit status: 0 success (all checks pass), 1 verification mismatch,
// 2 invalid input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "asfc/dfunc.hpp"
#include "asfc/dinv.hpp"
#include "asfc/io.hpp"
#include "asfc/kernels.hpp"
#include "asfc/springer.hpp"
#include "asfc/verify.hpp"

namespace {

using nlohmann::json;

enum class Format { plain, json, csv };

struct Config {
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> b;
    std::string format = "plain";
    std::string out;
    int jobs = 0;

    std::string tableau_path;
    std::string lambda;
    bool big = false;
    std::string basis = "schur";
    std::string mu;
    std::string statement = "all";
};

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
    if (s == "plain")
        return Format::plain;
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    throw InvalidInput("unknown format '" + s + "'");
}

asfc::StatCtx make_ctx(const Config& c) {
    if (!c.n || !c.m || !c.b)
        throw InvalidInput("--n, --m and --b are required");
    return asfc::StatCtx(*c.n, *c.m, *c.b);
}

int jobs_of(const Config& c) { return c.jobs > 0 ? c.jobs : asfc::default_jobs(); }

void emit(const Config& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f)
        throw InvalidInput("cannot open output file '" + c.out + "'");
    f << text;
}

std::string symfunc_text(const asfc::SymFunc& f, Format fmt) {
    switch (fmt) {
    case Format::json:
        return asfc::symfunc_to_json(f).dump(2) + "\n";
    case Format::csv:
        return asfc::symfunc_to_csv(f);
    case Format::plain:
        break;
    }
    return f.to_string() + "\n";
}

std::string join_parts(const std::vector<int>& v, char sep) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? std::string(1, sep) : "") + std::to_string(v[k]);
    return s;
}

int cmd_dinv(const Config& c) {
    std::string text;
    if (c.tableau_path.empty() || c.tableau_path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(c.tableau_path);
        if (!f)
            throw InvalidInput("cannot read tableau file '" + c.tableau_path + "'");
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("tableau is not valid JSON: ") + e.what());
    }
    const asfc::Tableau t = asfc::tableau_from_json(j);
    Config with_n = c;
    if (!with_n.n)
        with_n.n = t.n();
    const asfc::StatCtx ctx = make_ctx(with_n);
    const asfc::DinvTable table(t.shape().inner(), ctx);
    if (t.n() != ctx.n())
        throw InvalidInput("tableau has n=" + std::to_string(t.n()) + " but --n is " +
                           std::to_string(ctx.n()));
    const int d = table.dinv(t.sign(), t.entries());
    const int red = table.dinv_reduced(t.sign(), t.entries());
    const int dbl = table.dinv_dbl(t.sign(), t.entries());
    std::ostringstream out;
    switch (parse_format(c.format)) {
    case Format::json:
        out << json{{"dinv", d}, {"dinv_reduced", red}, {"dinv_dbl", dbl}}.dump(2) << "\n";
        break;
    case Format::csv:
        out << "dinv,dinv_reduced,dinv_dbl\n" << d << ',' << red << ',' << dbl << "\n";
        break;
    case Format::plain:
        out << "dinv=" << d << " dinv'=" << red << " dinv''=" << dbl << "\n";
        break;
    }
    emit(c, out.str());
    return 0;
}

int cmd_dfunc(const Config& c) {
    const asfc::StatCtx ctx = make_ctx(c);
    const Format fmt = parse_format(c.format);
    const asfc::Basis basis = asfc::parse_basis(c.basis);
    asfc::SymFunc f = c.big ? asfc::D_big(ctx, jobs_of(c))
                            : asfc::D_lambda(asfc::parse_partition(c.lambda), ctx, jobs_of(c));
    emit(c, symfunc_text(asfc::to_basis(f, basis), fmt));
    return 0;
}

int cmd_frobenius(const Config& c) {
    const asfc::StatCtx ctx = make_ctx(c);
    const Format fmt = parse_format(c.format);
    const asfc::PElement p = asfc::partition_to_p(asfc::parse_partition(c.lambda), ctx);
    emit(c, symfunc_text(asfc::to_basis(asfc::frobenius_cell(p, ctx), asfc::parse_basis(c.basis)),
                         fmt));
    return 0;
}

int cmd_cells(const Config& c) {
    const asfc::StatCtx ctx = make_ctx(c);
    const Format fmt = parse_format(c.format);
    std::optional<std::vector<int>> mu;
    if (!c.mu.empty()) {
        mu = asfc::parse_int_list(c.mu);
        int s = 0;
        for (int v : *mu)
            s += v;
        if (s != ctx.n())
            throw InvalidInput("--mu must sum to n");
    }
    const auto cells = asfc::cell_records(ctx, jobs_of(c));
    std::ostringstream out;
    if (fmt == Format::json) {
        json arr = json::array();
        for (const auto& cell : cells) {
            json row = asfc::cell_to_json(cell);
            if (mu) {
                json detail = json::array();
                for (const auto& pc : asfc::parahoric_cells(cell.p, *mu, ctx))
                    detail.push_back(asfc::parahoric_to_json(pc));
                row["parahoric"] = detail;
            }
            arr.push_back(row);
        }
        out << arr.dump(2) << "\n";
    } else if (fmt == Format::csv) {
        if (mu) {
            out << "p,lambda,dim,corank,m_lambda,coset,entries,coset_dim\n";
            for (const auto& cell : cells)
                for (const auto& pc : asfc::parahoric_cells(cell.p, *mu, ctx))
                    out << join_parts(cell.p.values(), '.') << ',' << join_parts(cell.lambda.parts(), '.')
                        << ',' << cell.dim << ',' << cell.corank << ',' << cell.m_lambda << ','
                        << join_parts(pc.coset, '.') << ',' << join_parts(pc.tableau.entries(), '.')
                        << ',' << pc.dim << "\n";
        } else {
            out << "p,lambda,dim,corank,m_lambda\n";
            for (const auto& cell : cells)
                out << join_parts(cell.p.values(), '.') << ',' << join_parts(cell.lambda.parts(), '.')
                    << ',' << cell.dim << ',' << cell.corank << ',' << cell.m_lambda << "\n";
        }
    } else {
        out << "p\tlambda\tdim\tcorank\tm(lambda)\n";
        for (const auto& cell : cells) {
            out << cell.p.to_string() << '\t' << cell.lambda.to_string() << '\t' << cell.dim << '\t'
                << cell.corank << '\t' << cell.m_lambda << "\n";
            if (mu)
                for (const auto& pc : asfc::parahoric_cells(cell.p, *mu, ctx))
                    out << "  coset=[" << join_parts(pc.coset, ',') << "] rows=["
                        << join_parts(pc.tableau.entries(), ',') << "] dim=" << pc.dim << "\n";
        }
    }
    emit(c, out.str());
    return 0;
}

int cmd_verify(const Config& c) {
    const asfc::StatCtx ctx = make_ctx(c);
    const Format fmt = parse_format(c.format);
    const asfc::Report report = asfc::run_statement(c.statement, ctx, jobs_of(c));
    std::ostringstream out;
    if (fmt == Format::json) {
        out << asfc::report_to_json(report).dump(2) << "\n";
    } else if (fmt == Format::csv) {
        out << "statement,instance,lhs,rhs,pass\n";
        auto quote = [](const std::string& s) {
            std::string q = "\"";
            for (char ch : s)
                q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            return q + "\"";
        };
        for (const auto& r : report.checks())
            out << quote(r.statement) << ',' << quote(r.instance) << ',' << quote(r.lhs) << ','
                << quote(r.rhs) << ',' << (r.pass ? "true" : "false") << "\n";
    } else {
        out << report.summary();
    }
    emit(c, out.str());
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized dinv statistics, D-functions and affine Springer cell data"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--n", cfg.n, "number of boxes / rank n");
    app.add_option("--m", cfg.m, "m >= 0");
    app.add_option("--b", cfg.b, "1 <= b < n, coprime to n");
    app.add_option("--format", cfg.format, "json | csv | plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--out", cfg.out, "write output to this file instead of stdout");
    app.add_option("--jobs", cfg.jobs, "worker threads (default: all cores)")
        ->check(CLI::NonNegativeNumber);

    auto* dinv = app.add_subcommand("dinv", "dinv, dinv' and dinv'' of a tableau given as JSON");
    dinv->add_option("--tableau", cfg.tableau_path, "tableau JSON file ('-' or omitted: stdin)");

    auto* dfunc = app.add_subcommand("dfunc", "D_lambda(z;q) or, with --big, D(z;q,t)");
    auto* lam_opt = dfunc->add_option("--lambda", cfg.lambda, "inner partition, e.g. 2,1");
    auto* big_opt = dfunc->add_flag("--big", cfg.big, "sum over all lambda with t-grading");
    lam_opt->excludes(big_opt);
    dfunc->add_option("--basis", cfg.basis, "monomial | schur | homogeneous | elementary");

    auto* cells = app.add_subcommand("cells", "nonempty cells with dimensions and coranks");
    cells->add_option("--mu", cfg.mu, "composition of n: add per-coset detail");

    auto* frob = app.add_subcommand("frobenius", "Frobenius series of the preimage of one cell");
    frob->add_option("--lambda", cfg.lambda, "inner partition")->required();
    frob->add_option("--basis", cfg.basis, "output basis");

    auto* verify = app.add_subcommand("verify", "run identity checks and report");
    verify->add_option("--statement", cfg.statement,
                       "statement name, numeric alias, or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*dinv)
            return cmd_dinv(cfg);
        if (*dfunc) {
            if (!cfg.big && lam_opt->count() == 0)
                throw InvalidInput("dfunc needs --lambda or --big");
            return cmd_dfunc(cfg);
        }
        if (*cells)
            return cmd_cells(cfg);
        if (*frob)
            return cmd_frobenius(cfg);
        if (*verify)
            return cmd_verify(cfg);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
