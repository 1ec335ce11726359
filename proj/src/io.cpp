#include "asfc/io.hpp"

#include <sstream>
#include <stdexcept>

namespace asfc {

using nlohmann::json;

json tableau_to_json(const Tableau& t) {
    json entries = json::array();
    for (int r = 0; r < t.n(); ++r) {
        const Box x = t.shape().box(r);
        entries.push_back({x.i, x.j, t.at(r)});
    }
    return {{"n", t.n()},
            {"inner", t.shape().inner().parts()},
            {"sign", t.sign() == Sign::positive ? "+" : "-"},
            {"entries", entries}};
}

Tableau tableau_from_json(const json& j) {
    try {
        if (!j.is_object())
            throw std::invalid_argument("tableau JSON must be an object");
        const int n = j.at("n").get<int>();
        if (n < 1)
            throw std::invalid_argument("n must be positive");
        const Partition inner(j.at("inner").get<std::vector<int>>());
        const std::string sign_text = j.at("sign").get<std::string>();
        Sign sign;
        if (sign_text == "+")
            sign = Sign::positive;
        else if (sign_text == "-")
            sign = Sign::negative;
        else
            throw std::invalid_argument("sign must be \"+\" or \"-\"");
        const SkewShape shape(inner, n);
        std::vector<int> entries(n, 0);
        for (const auto& e : j.at("entries")) {
            const auto triple = e.get<std::vector<int>>();
            if (triple.size() != 3)
                throw std::invalid_argument("entries must be [i, j, label] triples");
            const int row = shape.row_of({triple[0], triple[1]});
            if (row < 0)
                throw std::invalid_argument("box (" + std::to_string(triple[0]) + "," +
                                            std::to_string(triple[1]) + ") is not in the shape");
            if (entries[row] != 0)
                throw std::invalid_argument("row " + std::to_string(row) + " filled twice");
            if (triple[2] < 1)
                throw std::invalid_argument("labels must be positive");
            entries[row] = triple[2];
        }
        for (int r = 0; r < n; ++r)
            if (entries[r] == 0)
                throw std::invalid_argument("row " + std::to_string(r) + " has no entry");
        return Tableau(shape, sign, std::move(entries));
    } catch (const json::exception& err) {
        throw std::invalid_argument(std::string("malformed tableau JSON: ") + err.what());
    }
}

json symfunc_to_json(const SymFunc& f) {
    json coeffs = json::array();
    for (const auto& [p, c] : f.coeffs()) {
        json poly = json::array();
        for (const auto& [e, v] : c.terms())
            poly.push_back({e.q, e.t, v});
        coeffs.push_back({{"index", p.parts()}, {"poly", poly}});
    }
    return {{"degree", f.degree()}, {"basis", basis_name(f.basis())}, {"coeffs", coeffs}};
}

std::string symfunc_to_csv(const SymFunc& f) {
    std::ostringstream out;
    out << "basis,index,q_exp,t_exp,coefficient\n";
    for (const auto& [p, c] : f.coeffs()) {
        std::string index;
        for (int k = 0; k < p.length(); ++k)
            index += (k ? "." : "") + std::to_string(p.part(k));
        for (const auto& [e, v] : c.terms())
            out << basis_name(f.basis()) << ',' << index << ',' << e.q << ',' << e.t << ',' << v
                << '\n';
    }
    return out.str();
}

json cell_to_json(const CellRecord& c) {
    return {{"p", c.p.values()},
            {"lambda", c.lambda.parts()},
            {"dim", c.dim},
            {"corank", c.corank},
            {"m_lambda", c.m_lambda}};
}

json parahoric_to_json(const ParahoricCell& c) {
    return {{"coset", c.coset}, {"tableau", tableau_to_json(c.tableau)}, {"dim", c.dim}};
}

json report_to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks())
        checks.push_back({{"statement", c.statement},
                          {"instance", c.instance},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"pass", c.pass}});
    return {{"checks", checks}, {"failures", r.failures()}, {"pass", r.all_pass()}};
}

}  // namespace asfc
