#include "asfc/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace asfc {

std::string basis_name(Basis b) {
    switch (b) {
    case Basis::monomial:
        return "monomial";
    case Basis::schur:
        return "schur";
    case Basis::homogeneous:
        return "homogeneous";
    case Basis::elementary:
        return "elementary";
    }
    return "?";
}

Basis parse_basis(const std::string& text) {
    if (text == "monomial" || text == "m")
        return Basis::monomial;
    if (text == "schur" || text == "s")
        return Basis::schur;
    if (text == "homogeneous" || text == "h")
        return Basis::homogeneous;
    if (text == "elementary" || text == "e")
        return Basis::elementary;
    throw std::invalid_argument("unknown basis '" + text + "'");
}

namespace {

char basis_letter(Basis b) {
    switch (b) {
    case Basis::monomial:
        return 'm';
    case Basis::schur:
        return 's';
    case Basis::homogeneous:
        return 'h';
    case Basis::elementary:
        return 'e';
    }
    return '?';
}

}  // namespace

SymFunc::SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {
    if (degree < 0)
        throw std::invalid_argument("negative degree");
}

SymFunc SymFunc::element(Basis basis, const Partition& index, LaurentPoly coeff) {
    SymFunc f(index.size(), basis);
    f.add(index, coeff);
    return f;
}

LaurentPoly SymFunc::coeff(const Partition& index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? LaurentPoly{} : it->second;
}

void SymFunc::add(const Partition& index, const LaurentPoly& c) {
    if (index.size() != degree_)
        throw std::invalid_argument("index " + index.to_string() + " has size " +
                                    std::to_string(index.size()) + ", expected " +
                                    std::to_string(degree_));
    if (c.is_zero())
        return;
    auto [it, inserted] = coeffs_.try_emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
}

void SymFunc::require_same_space(const SymFunc& o) const {
    if (degree_ != o.degree_)
        throw std::invalid_argument("degree mismatch");
    if (basis_ != o.basis_)
        throw std::invalid_argument("basis mismatch; convert first");
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    require_same_space(o);
    for (const auto& [p, c] : o.coeffs_)
        add(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    require_same_space(o);
    for (const auto& [p, c] : o.coeffs_)
        add(p, -c);
    return *this;
}

SymFunc SymFunc::scaled(const LaurentPoly& c) const {
    return map_coeffs([&](const LaurentPoly& x) { return x * c; });
}

SymFunc SymFunc::map_coeffs(const std::function<LaurentPoly(const LaurentPoly&)>& f) const {
    SymFunc out(degree_, basis_);
    for (const auto& [p, c] : coeffs_)
        out.add(p, f(c));
    return out;
}

std::string SymFunc::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : coeffs_) {
        if (!first)
            out << " + ";
        first = false;
        const bool simple = c.terms().size() == 1 && c.terms().begin()->second > 0;
        if (!(simple && c == LaurentPoly(1))) {
            if (simple)
                out << c.to_string() << '*';
            else
                out << '(' << c.to_string() << ")*";
        }
        out << basis_letter(basis_) << '[';
        for (int k = 0; k < p.length(); ++k)
            out << (k ? "," : "") << p.part(k);
        out << ']';
    }
    return out.str();
}

long long kostka(const Partition& lambda, const std::vector<int>& mu) {
    if (std::accumulate(mu.begin(), mu.end(), 0) != lambda.size())
        throw std::invalid_argument("kostka: |lambda| != |mu|");
    // Strip the largest label as a horizontal strip, recursively.
    std::map<std::pair<Partition, int>, long long> memo;
    std::function<long long(const Partition&, int)> count = [&](const Partition& shape,
                                                                int labels) -> long long {
        if (labels == 0)
            return shape.empty() ? 1 : 0;
        auto key = std::make_pair(shape, labels);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        const int strip = mu[labels - 1];
        long long total = 0;
        std::vector<int> inner(shape.length(), 0);
        // inner_k ranges over [shape_{k+1}, shape_k]; horizontal strip of size `strip`.
        std::function<void(int, int)> rec = [&](int k, int left) {
            if (k == shape.length()) {
                if (left == 0)
                    total += count(Partition(inner), labels - 1);
                return;
            }
            const int hi = shape.part(k), lo = shape.part(k + 1);
            for (int v = hi; v >= lo; --v) {
                if (hi - v > left)
                    break;
                inner[k] = v;
                rec(k + 1, left - (hi - v));
            }
        };
        rec(0, strip);
        memo[key] = total;
        return total;
    };
    return count(lambda, static_cast<int>(mu.size()));
}

KostkaTable::KostkaTable(int n) : n_(n), parts_(partitions_of(n)) {
    const int np = static_cast<int>(parts_.size());
    for (int k = 0; k < np; ++k)
        index_[parts_[k]] = k;
    k_.assign(np, std::vector<long long>(np, 0));
    for (int a = 0; a < np; ++a)
        for (int c = a; c < np; ++c)
            k_[a][c] = kostka(parts_[a], parts_[c]);
}

std::shared_ptr<const KostkaTable> KostkaTable::of(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const KostkaTable>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot)
        slot = std::make_shared<const KostkaTable>(n);
    return slot;
}

int KostkaTable::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
        throw std::invalid_argument("partition " + p.to_string() + " is not of size " +
                                    std::to_string(n_));
    return it->second;
}

namespace {

using Vec = std::vector<LaurentPoly>;

Vec to_vec(const SymFunc& f, const KostkaTable& K) {
    Vec v(K.partitions().size());
    for (const auto& [p, c] : f.coeffs())
        v[K.index_of(p)] = c;
    return v;
}

SymFunc from_vec(const Vec& v, const KostkaTable& K, Basis b) {
    SymFunc f(K.n(), b);
    for (std::size_t k = 0; k < v.size(); ++k)
        f.add(K.partitions()[k], v[k]);
    return f;
}

// Schur coefficients -> monomial coefficients: c_mu = sum_lambda a_lambda K[lambda][mu].
Vec schur_to_mono(const Vec& a, const KostkaTable& K) {
    const int np = static_cast<int>(a.size());
    Vec c(np);
    for (int l = 0; l < np; ++l) {
        if (a[l].is_zero())
            continue;
        for (int mu = l; mu < np; ++mu)
            if (K.at(l, mu))
                c[mu] += a[l] * LaurentPoly(K.at(l, mu));
    }
    return c;
}

Vec mono_to_schur(const Vec& c, const KostkaTable& K) {
    const int np = static_cast<int>(c.size());
    Vec a(np);
    for (int l = 0; l < np; ++l) {
        LaurentPoly v = c[l];
        for (int nu = 0; nu < l; ++nu)
            if (!a[nu].is_zero() && K.at(nu, l))
                v -= a[nu] * LaurentPoly(K.at(nu, l));
        a[l] = std::move(v);
    }
    return a;
}

// Homogeneous coefficients -> Schur: a_lambda = sum_mu K[lambda][mu] c_mu.
Vec homog_to_schur(const Vec& c, const KostkaTable& K) {
    const int np = static_cast<int>(c.size());
    Vec a(np);
    for (int l = 0; l < np; ++l)
        for (int mu = l; mu < np; ++mu)
            if (!c[mu].is_zero() && K.at(l, mu))
                a[l] += c[mu] * LaurentPoly(K.at(l, mu));
    return a;
}

Vec schur_to_homog(const Vec& a, const KostkaTable& K) {
    const int np = static_cast<int>(a.size());
    Vec c(np);
    for (int l = np - 1; l >= 0; --l) {
        LaurentPoly v = a[l];
        for (int mu = l + 1; mu < np; ++mu)
            if (!c[mu].is_zero() && K.at(l, mu))
                v -= c[mu] * LaurentPoly(K.at(l, mu));
        c[l] = std::move(v);
    }
    return c;
}

SymFunc conjugate_indices(const SymFunc& f, Basis b) {
    SymFunc out(f.degree(), b);
    for (const auto& [p, c] : f.coeffs())
        out.add(p.conjugate(), c);
    return out;
}

SymFunc to_schur(const SymFunc& f) {
    const auto K = KostkaTable::of(f.degree());
    switch (f.basis()) {
    case Basis::schur:
        return f;
    case Basis::monomial:
        return from_vec(mono_to_schur(to_vec(f, *K), *K), *K, Basis::schur);
    case Basis::homogeneous:
        return from_vec(homog_to_schur(to_vec(f, *K), *K), *K, Basis::schur);
    case Basis::elementary: {
        // e_mu = omega h_mu, and omega conjugates Schur indices.
        SymFunc as_h(f.degree(), Basis::homogeneous);
        for (const auto& [p, c] : f.coeffs())
            as_h.add(p, c);
        return conjugate_indices(from_vec(homog_to_schur(to_vec(as_h, *K), *K), *K, Basis::schur),
                                 Basis::schur);
    }
    }
    throw std::logic_error("unreachable basis");
}

SymFunc from_schur(const SymFunc& s, Basis target) {
    const auto K = KostkaTable::of(s.degree());
    switch (target) {
    case Basis::schur:
        return s;
    case Basis::monomial:
        return from_vec(schur_to_mono(to_vec(s, *K), *K), *K, Basis::monomial);
    case Basis::homogeneous:
        return from_vec(schur_to_homog(to_vec(s, *K), *K), *K, Basis::homogeneous);
    case Basis::elementary: {
        const SymFunc flipped = conjugate_indices(s, Basis::schur);
        return from_vec(schur_to_homog(to_vec(flipped, *K), *K), *K, Basis::elementary);
    }
    }
    throw std::logic_error("unreachable basis");
}

}  // namespace

SymFunc to_basis(const SymFunc& f, Basis target) {
    if (f.basis() == target)
        return f;
    return from_schur(to_schur(f), target);
}

LaurentPoly hall_pair(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("hall_pair: degree mismatch");
    const SymFunc a = to_schur(f), b = to_schur(g);
    LaurentPoly out;
    for (const auto& [p, c] : a.coeffs())
        out += c * b.coeff(p);
    return out;
}

SymFunc omega(const SymFunc& f) {
    return from_schur(conjugate_indices(to_schur(f), Basis::schur), f.basis());
}

SymFunc frobenius_from_invariants(int n, const std::map<Partition, LaurentPoly>& dims) {
    const auto K = KostkaTable::of(n);
    SymFunc mono(n, Basis::monomial);
    for (const Partition& mu : K->partitions()) {
        auto it = dims.find(mu);
        if (it == dims.end())
            throw std::invalid_argument("missing invariant dimension for " + mu.to_string());
        mono.add(mu, it->second);
    }
    SymFunc s = to_schur(mono);
    for (const auto& [p, c] : s.coeffs())
        if (!c.has_nonnegative_coefficients())
            throw std::domain_error("invariant dimensions give a negative multiplicity " +
                                    c.to_string() + " at s" + p.to_string());
    return s;
}

bool is_schur_positive(const SymFunc& f) {
    const SymFunc s = to_schur(f);
    return std::all_of(s.coeffs().begin(), s.coeffs().end(),
                       [](const auto& kv) { return kv.second.has_nonnegative_coefficients(); });
}

}  // namespace asfc
