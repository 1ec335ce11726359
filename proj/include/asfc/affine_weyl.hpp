#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

namespace asfc {

/// (a_1, ..., a_{n-1}) with a_i >= 0, extended to all integers by a_n = 0
/// and a_{i+n} = a_i + 1.
class PElement {
public:
    /// Throws std::invalid_argument unless `a` has n-1 nonnegative entries.
    PElement(int n, std::vector<int> a);
    static PElement zero(int n) { return PElement(n, std::vector<int>(n - 1, 0)); }

    int n() const noexcept { return n_; }
    /// a_1..a_{n-1}
    const std::vector<int>& values() const noexcept { return a_; }
    /// a_i for any integer i.
    long long at(long long i) const;
    /// a_1 + ... + a_{n-1}
    int a_value() const noexcept;

    std::string to_string() const;

    friend auto operator<=>(const PElement&, const PElement&) = default;
    friend bool operator==(const PElement&, const PElement&) = default;

private:
    int n_;
    std::vector<int> a_;
};

/// Integer vector with coordinate sum zero (0-based storage of x_1..x_n).
using Coweight = std::vector<int>;

/// One-line notation: perm[i-1] = w(i), values 1..n.
using Permutation = std::vector<int>;

Permutation identity_perm(int n);
Permutation inverse(const Permutation& w);
Permutation compose(const Permutation& w, const Permutation& v);  // w o v
/// (w . x)_{w(i)} = x_i
Coweight act(const Permutation& w, const Coweight& x);
/// All permutations of 1..n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// t_lambda w. Group law t_l w * t_m v = t_{l + w.m} (w v); acts on
/// coweights by x -> l + w.x.
class AffineWeylElt {
public:
    explicit AffineWeylElt(int n);
    AffineWeylElt(Coweight translation, Permutation finite_part);

    /// s_0..s_{n-1}; the index is read modulo n. s_0 = t_{e_n - e_1} (1 n).
    static AffineWeylElt simple(int n, int i);

    int n() const noexcept { return static_cast<int>(perm_.size()); }
    const Coweight& translation() const noexcept { return trans_; }
    const Permutation& finite_part() const noexcept { return perm_; }

    Coweight act(const Coweight& x) const;
    AffineWeylElt inverse() const;

    friend AffineWeylElt operator*(const AffineWeylElt& a, const AffineWeylElt& b);
    friend auto operator<=>(const AffineWeylElt&, const AffineWeylElt&) = default;
    friend bool operator==(const AffineWeylElt&, const AffineWeylElt&) = default;

private:
    Coweight trans_;
    Permutation perm_;
};

/// Product s_{w[0]} s_{w[1]} ... (identity for the empty word).
AffineWeylElt word_product(int n, std::span<const int> word);

/// The coweight lambda(p).
Coweight p_to_coweight(const PElement& p);
/// Inverse of p_to_coweight; throws std::invalid_argument unless sum(x) = 0.
PElement coweight_to_p(const Coweight& x);

/// s_{a+l} . lambda(p) written back in P, for l in 0..n-1.
PElement reflect(const PElement& p, int l);

/// <x, alpha_l> = x_l - x_{l+1}, indices cyclic in 1..n.
int pair_simple_root(const Coweight& x, int l);

/// Length of t_lambda w from the closed double sum.
int length(const AffineWeylElt& w);
/// Minimal length over the coset t_x W, closed form.
int ell_f(const Coweight& x);
/// The permutation with length(t_x w_min) = ell_f(x): w_min^{-1} sorts
/// positions by decreasing x, ties by position.
Permutation w_min(const Coweight& x);

/// Word [i_1..i_k] with s_{i_1} ... s_{i_k} = t_{lambda(p)} w_min, found by
/// repeatedly applying the descending reflection s_{a+l}, l the last index
/// with a_l >= 1. i_1 is the first reflection applied.
std::vector<int> reduced_word_wf(const PElement& p);

/// Products of all subwords of `word`; for a reduced word this is the
/// Bruhat interval below its product.
std::set<AffineWeylElt> subword_products(int n, std::span<const int> word);

/// u <= v in Bruhat order: u is the product of a subword of the given
/// reduced word of v. Exponential in the word length.
bool bruhat_leq(const AffineWeylElt& u, int n, std::span<const int> v_word);
bool bruhat_leq(int n, std::span<const int> u_word, std::span<const int> v_word);

/// s_{j-1} ... s_1 s_0 with indices modulo n, as a word.
std::vector<int> cyc_word(int n, int j);

}  // namespace asfc
