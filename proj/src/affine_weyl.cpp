#include "asfc/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "asfc/stat_ctx.hpp"

namespace asfc {

PElement::PElement(int n, std::vector<int> a) : n_(n), a_(std::move(a)) {
    if (n < 2)
        throw std::invalid_argument("PElement needs n >= 2");
    if (static_cast<int>(a_.size()) != n - 1)
        throw std::invalid_argument("PElement needs n-1 = " + std::to_string(n - 1) +
                                    " entries, got " + std::to_string(a_.size()));
    for (int v : a_)
        if (v < 0)
            throw std::invalid_argument("PElement entries must be nonnegative");
}

long long PElement::at(long long i) const {
    const long long q = floor_div(i, n_);
    const long long r = i - q * n_;
    const long long base = r == 0 ? -1 : a_[r - 1];
    return base + q;
}

int PElement::a_value() const noexcept { return std::accumulate(a_.begin(), a_.end(), 0); }

std::string PElement::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < a_.size(); ++k)
        out << (k ? "," : "") << a_[k];
    out << ')';
    return out.str();
}

Permutation identity_perm(int n) {
    Permutation w(n);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

Permutation inverse(const Permutation& w) {
    Permutation inv(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        inv[w[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

Permutation compose(const Permutation& w, const Permutation& v) {
    Permutation out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = w[v[i] - 1];
    return out;
}

Coweight act(const Permutation& w, const Coweight& x) {
    Coweight out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[w[i] - 1] = x[i];
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation w = identity_perm(n);
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

AffineWeylElt::AffineWeylElt(int n) : trans_(n, 0), perm_(identity_perm(n)) {}

AffineWeylElt::AffineWeylElt(Coweight translation, Permutation finite_part)
    : trans_(std::move(translation)), perm_(std::move(finite_part)) {
    if (trans_.size() != perm_.size())
        throw std::invalid_argument("translation and permutation sizes differ");
    if (std::accumulate(trans_.begin(), trans_.end(), 0) != 0)
        throw std::invalid_argument("translation must have coordinate sum zero");
}

AffineWeylElt AffineWeylElt::simple(int n, int i) {
    const int r = static_cast<int>(((i % n) + n) % n);
    Permutation w = identity_perm(n);
    Coweight t(n, 0);
    if (r == 0) {
        std::swap(w[0], w[n - 1]);
        t[0] = -1;
        t[n - 1] = 1;
    } else {
        std::swap(w[r - 1], w[r]);
    }
    return AffineWeylElt(std::move(t), std::move(w));
}

Coweight AffineWeylElt::act(const Coweight& x) const {
    Coweight out = asfc::act(perm_, x);
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] += trans_[k];
    return out;
}

AffineWeylElt AffineWeylElt::inverse() const {
    // (t_l w)^{-1} = t_{-w^{-1}.l} w^{-1}
    const Permutation winv = asfc::inverse(perm_);
    Coweight t = asfc::act(winv, trans_);
    for (int& v : t)
        v = -v;
    return AffineWeylElt(std::move(t), winv);
}

AffineWeylElt operator*(const AffineWeylElt& a, const AffineWeylElt& b) {
    Coweight t = act(a.perm_, b.trans_);
    for (std::size_t k = 0; k < t.size(); ++k)
        t[k] += a.trans_[k];
    return AffineWeylElt(std::move(t), compose(a.perm_, b.perm_));
}

AffineWeylElt word_product(int n, std::span<const int> word) {
    AffineWeylElt out(n);
    for (int i : word)
        out = out * AffineWeylElt::simple(n, i);
    return out;
}

Coweight p_to_coweight(const PElement& p) {
    const int n = p.n();
    const int a = p.a_value();
    Coweight x(n, 0);
    if (a == 0)
        return x;
    const int wraps = (a - 1) / n;
    const int k = a - wraps * n;  // 1..n
    for (int j = 1; j <= n; ++j) {
        if (j < k)
            x[j - 1] = static_cast<int>(p.at(n - k + j)) - wraps - 1;
        else if (j == k)
            x[j - 1] = -wraps - 1;
        else
            x[j - 1] = static_cast<int>(p.at(j - k)) - wraps;
    }
    return x;
}

PElement coweight_to_p(const Coweight& x) {
    const int n = static_cast<int>(x.size());
    if (n < 2)
        throw std::invalid_argument("coweight needs n >= 2");
    if (std::accumulate(x.begin(), x.end(), 0) != 0)
        throw std::invalid_argument("coweight coordinates must sum to zero");
    if (std::all_of(x.begin(), x.end(), [](int v) { return v == 0; }))
        return PElement::zero(n);
    const int lo = *std::min_element(x.begin(), x.end());
    int k = 0;
    for (int i = 1; i <= n; ++i)
        if (x[i - 1] == lo)
            k = i;
    const int wraps = -lo - 1;
    std::vector<int> a(n - 1, 0);
    for (int j = 1; j < k; ++j)
        a[n - k + j - 1] = x[j - 1] + wraps + 1;
    for (int j = k + 1; j <= n; ++j)
        a[j - k - 1] = x[j - 1] + wraps;
    return PElement(n, std::move(a));
}

PElement reflect(const PElement& p, int l) {
    const int n = p.n();
    if (l < 0 || l >= n)
        throw std::invalid_argument("reflect: l must lie in 0..n-1");
    std::vector<int> a = p.values();
    if (l >= 1 && l <= n - 2) {
        std::swap(a[l - 1], a[l]);
    } else if (l == n - 1) {
        if (a[n - 2] >= 1) {
            std::vector<int> b(n - 1);
            b[0] = a[n - 2] - 1;
            std::copy(a.begin(), a.end() - 1, b.begin() + 1);
            a = std::move(b);
        }
    } else {
        std::vector<int> b(n - 1);
        std::copy(a.begin() + 1, a.end(), b.begin());
        b[n - 2] = a[0] + 1;
        a = std::move(b);
    }
    return PElement(n, std::move(a));
}

int pair_simple_root(const Coweight& x, int l) {
    const int n = static_cast<int>(x.size());
    const int i = underline(l, n);
    const int j = underline(l + 1, n);
    return x[i - 1] - x[j - 1];
}

int length(const AffineWeylElt& w) {
    const int n = w.n();
    const Permutation winv = inverse(w.finite_part());
    const Coweight& lam = w.translation();
    int total = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const int diff = lam[j - 1] - lam[i - 1];
            total += winv[i - 1] < winv[j - 1] ? std::abs(diff) : std::abs(diff - 1);
        }
    return total;
}

int ell_f(const Coweight& x) {
    const int n = static_cast<int>(x.size());
    int total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int diff = x[j] - x[i];
            total += std::abs(diff) - (diff >= 1 ? 1 : 0);
        }
    return total;
}

Permutation w_min(const Coweight& x) {
    const int n = static_cast<int>(x.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return x[a - 1] > x[b - 1]; });
    Permutation winv(n);
    for (int r = 0; r < n; ++r)
        winv[order[r] - 1] = r + 1;
    return inverse(winv);
}

std::vector<int> reduced_word_wf(const PElement& p) {
    const int n = p.n();
    std::vector<int> word;
    PElement cur = p;
    while (cur.a_value() != 0) {
        int l = 0;
        for (int i = 1; i <= n - 1; ++i)
            if (cur.values()[i - 1] >= 1)
                l = i;
        word.push_back(underline(static_cast<long long>(cur.a_value()) + l, n) % n);
        cur = reflect(cur, l);
    }
    return word;
}

std::set<AffineWeylElt> subword_products(int n, std::span<const int> word) {
    if (word.size() > 24)
        throw std::invalid_argument("subword search limited to words of length 24");
    std::set<AffineWeylElt> level{AffineWeylElt(n)};
    for (int i : word) {
        std::set<AffineWeylElt> next = level;
        const AffineWeylElt s = AffineWeylElt::simple(n, i);
        for (const auto& e : level)
            next.insert(e * s);
        level = std::move(next);
    }
    return level;
}

bool bruhat_leq(const AffineWeylElt& u, int n, std::span<const int> v_word) {
    return subword_products(n, v_word).count(u) > 0;
}

bool bruhat_leq(int n, std::span<const int> u_word, std::span<const int> v_word) {
    return bruhat_leq(word_product(n, u_word), n, v_word);
}

std::vector<int> cyc_word(int n, int j) {
    std::vector<int> word;
    for (int i = j - 1; i >= 0; --i)
        word.push_back(i % n);
    return word;
}

}  // namespace asfc
