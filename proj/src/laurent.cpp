#include "asfc/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace asfc {

LaurentPoly::LaurentPoly(Coeff constant) {
    if (constant != 0)
        terms_[{0, 0}] = constant;
}

LaurentPoly LaurentPoly::monomial(int q_exp, int t_exp, Coeff c) {
    LaurentPoly p;
    p.add_term(q_exp, t_exp, c);
    return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(int q_exp, int t_exp) const {
    auto it = terms_.find({q_exp, t_exp});
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int q_exp, int t_exp, Coeff c) {
    if (t_exp < 0)
        throw std::invalid_argument("negative t exponent");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace({q_exp, t_exp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e.q, e.t, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e.q, e.t, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly out;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            out.add_term(a.q + b.q, a.t + b.t, ca * cb);
    *this = std::move(out);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_[e] = -c;
    return out;
}

LaurentPoly LaurentPoly::invert_q() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_[{-e.q, e.t}] = c;
    return out;
}

LaurentPoly LaurentPoly::shift_q(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_[{e.q + k, e.t}] = c;
    return out;
}

LaurentPoly LaurentPoly::shift_t(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.add_term(e.q, e.t + k, c);
    return out;
}

LaurentPoly::Coeff LaurentPoly::value_at_one() const {
    Coeff s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c < 0)
            return false;
    return true;
}

int LaurentPoly::min_q() const {
    if (is_zero())
        throw std::logic_error("min_q of zero polynomial");
    int v = terms_.begin()->first.q;
    for (const auto& [e, c] : terms_)
        v = std::min(v, e.q);
    return v;
}

int LaurentPoly::max_q() const {
    if (is_zero())
        throw std::logic_error("max_q of zero polynomial");
    int v = terms_.begin()->first.q;
    for (const auto& [e, c] : terms_)
        v = std::max(v, e.q);
    return v;
}

namespace {

void put_var(std::ostringstream& out, bool& first, char var, int e) {
    if (e == 0)
        return;
    if (!first)
        out << '*';
    out << var;
    if (e != 1)
        out << '^' << e;
    first = false;
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool leading = true;
    for (const auto& [e, c] : terms_) {
        const Coeff mag = std::llabs(c);
        if (leading)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        leading = false;
        bool first = true;
        if (mag != 1 || (e.q == 0 && e.t == 0)) {
            out << mag;
            first = false;
        }
        put_var(out, first, 'q', e.q);
        put_var(out, first, 't', e.t);
    }
    return out.str();
}

}  // namespace asfc
