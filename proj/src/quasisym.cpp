#include "asfc/quasisym.hpp"

#include <algorithm>
#include <stdexcept>

namespace asfc {

QuasiSym::QuasiSym(int degree) : degree_(degree) {
    if (degree < 1)
        throw std::invalid_argument("quasisymmetric degree must be positive");
}

LaurentPoly QuasiSym::coeff(const Composition& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? LaurentPoly{} : it->second;
}

void QuasiSym::add(const Composition& alpha, const LaurentPoly& c) {
    int total = 0;
    for (int a : alpha) {
        if (a < 1)
            throw std::invalid_argument("composition parts must be positive");
        total += a;
    }
    if (total != degree_)
        throw std::invalid_argument("composition does not sum to the degree");
    if (c.is_zero())
        return;
    auto [it, inserted] = coeffs_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
}

QuasiSym& QuasiSym::operator+=(const QuasiSym& o) {
    if (o.degree_ != degree_)
        throw std::invalid_argument("degree mismatch");
    for (const auto& [a, c] : o.coeffs_)
        add(a, c);
    return *this;
}

QuasiSym QuasiSym::scaled(const LaurentPoly& c) const {
    QuasiSym out(degree_);
    for (const auto& [a, x] : coeffs_)
        out.add(a, x * c);
    return out;
}

namespace {

unsigned mask_of(const DescentSet& d, int n) {
    unsigned m = 0;
    for (int i : d) {
        if (i < 1 || i > n - 1)
            throw std::invalid_argument("descent " + std::to_string(i) + " outside 1.." +
                                        std::to_string(n - 1));
        m |= 1u << (i - 1);
    }
    return m;
}

DescentSet set_of(unsigned mask, int n) {
    DescentSet d;
    for (int i = 1; i < n; ++i)
        if (mask & (1u << (i - 1)))
            d.push_back(i);
    return d;
}

}  // namespace

DescentSet composition_breaks(const QuasiSym::Composition& alpha) {
    DescentSet d;
    int s = 0;
    for (std::size_t k = 0; k + 1 < alpha.size(); ++k) {
        s += alpha[k];
        d.push_back(s);
    }
    return d;
}

QuasiSym::Composition composition_from_breaks(int n, const DescentSet& d) {
    QuasiSym::Composition alpha;
    int prev = 0;
    for (int i : d) {
        alpha.push_back(i - prev);
        prev = i;
    }
    alpha.push_back(n - prev);
    return alpha;
}

std::vector<QuasiSym::Composition> compositions_of(int n) {
    std::vector<QuasiSym::Composition> out;
    for (unsigned m = 0; m < (1u << (n - 1)); ++m)
        out.push_back(composition_from_breaks(n, set_of(m, n)));
    return out;
}

QuasiSym quasisym_Q(int n, const DescentSet& d, Sign sign) {
    const unsigned full = (1u << (n - 1)) - 1;
    unsigned need = mask_of(d, n);
    if (sign == Sign::negative)
        need = full & ~need;
    QuasiSym out(n);
    for (unsigned s = 0; s <= full; ++s)
        if ((s & need) == need)
            out.add(composition_from_breaks(n, set_of(s, n)), 1);
    return out;
}

bool is_symmetric(const QuasiSym& f) {
    for (const auto& [alpha, c] : f.coeffs()) {
        QuasiSym::Composition sorted = alpha;
        std::sort(sorted.begin(), sorted.end());
        do {
            if (f.coeff(sorted) != c)
                return false;
        } while (std::next_permutation(sorted.begin(), sorted.end()));
    }
    return true;
}

SymFunc to_symfunc(const QuasiSym& f) {
    if (!is_symmetric(f))
        throw std::invalid_argument("quasisymmetric function is not symmetric");
    SymFunc out(f.degree(), Basis::monomial);
    for (const auto& [alpha, c] : f.coeffs())
        if (std::is_sorted(alpha.begin(), alpha.end(), std::greater<>()))
            out.add(Partition(alpha), c);
    return out;
}

QuasiSym from_symfunc(const SymFunc& f) {
    const SymFunc m = to_basis(f, Basis::monomial);
    QuasiSym out(f.degree());
    for (const auto& [p, c] : m.coeffs()) {
        QuasiSym::Composition alpha = p.parts();
        std::sort(alpha.begin(), alpha.end());
        do {
            out.add(alpha, c);
        } while (std::next_permutation(alpha.begin(), alpha.end()));
    }
    return out;
}

FundamentalExpansion fundamental_expansion(const QuasiSym& f) {
    // f = sum_D c_D Q_D gives coefficient of M_S = sum_{D subset S} c_D;
    // invert by Moebius over subsets.
    const int n = f.degree();
    const unsigned full = (1u << (n - 1)) - 1;
    std::vector<LaurentPoly> by_mask(full + 1);
    for (const auto& [alpha, c] : f.coeffs())
        by_mask[mask_of(composition_breaks(alpha), n)] = c;
    for (int bit = 0; bit < n - 1; ++bit)
        for (unsigned s = 0; s <= full; ++s)
            if (s & (1u << bit))
                by_mask[s] -= by_mask[s ^ (1u << bit)];
    FundamentalExpansion out;
    for (unsigned s = 0; s <= full; ++s)
        if (!by_mask[s].is_zero())
            out[set_of(s, n)] = by_mask[s];
    return out;
}

SymFunc omega_via_quasisym(const SymFunc& f) {
    const QuasiSym q = from_symfunc(f);
    QuasiSym flipped(f.degree());
    for (const auto& [d, c] : fundamental_expansion(q))
        flipped += quasisym_Q(f.degree(), d, Sign::negative).scaled(c);
    return to_basis(to_symfunc(flipped), f.basis());
}

}  // namespace asfc
