#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "asfc/laurent.hpp"
#include "asfc/partition.hpp"

namespace asfc {

enum class Basis { monomial, schur, homogeneous, elementary };

/// "monomial", "schur", "homogeneous", "elementary".
std::string basis_name(Basis b);
/// Accepts the full names and the letters m, s, h, e.
Basis parse_basis(const std::string& text);

/// Homogeneous symmetric function of fixed degree, stored as coefficients
/// on one basis. Iteration order is reverse lexicographic on the index.
class SymFunc {
public:
    using Coeffs = std::map<Partition, LaurentPoly, std::greater<>>;

    SymFunc(int degree, Basis basis);
    static SymFunc element(Basis basis, const Partition& index, LaurentPoly coeff = 1);

    int degree() const noexcept { return degree_; }
    Basis basis() const noexcept { return basis_; }
    const Coeffs& coeffs() const noexcept { return coeffs_; }
    LaurentPoly coeff(const Partition& index) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Throws std::invalid_argument if |index| differs from the degree.
    void add(const Partition& index, const LaurentPoly& c);

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    /// Coefficientwise product with a scalar.
    SymFunc scaled(const LaurentPoly& c) const;
    /// Applies f to every coefficient (zero results are dropped).
    SymFunc map_coeffs(const std::function<LaurentPoly(const LaurentPoly&)>& f) const;

    /// "s[2] + (q + t)*s[1,1]"
    std::string to_string() const;

    /// Same degree, same basis, same coefficients. Compare across bases by
    /// converting first.
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
    void require_same_space(const SymFunc& o) const;

    int degree_;
    Basis basis_;
    Coeffs coeffs_;
};

/// Number of semistandard tableaux of straight shape lambda and content mu
/// (mu may be any composition summing to |lambda|).
long long kostka(const Partition& lambda, const std::vector<int>& mu);
inline long long kostka(const Partition& lambda, const Partition& mu) {
    return kostka(lambda, mu.parts());
}

/// Kostka matrix of one degree. Partitions are indexed in reverse
/// lexicographic order, which refines dominance, so the matrix is upper
/// unitriangular in this indexing.
class KostkaTable {
public:
    explicit KostkaTable(int n);
    /// Shared, lazily built table; safe to call from several threads.
    static std::shared_ptr<const KostkaTable> of(int n);

    int n() const noexcept { return n_; }
    const std::vector<Partition>& partitions() const noexcept { return parts_; }
    int index_of(const Partition& p) const;
    long long at(int lambda_idx, int mu_idx) const { return k_[lambda_idx][mu_idx]; }

private:
    int n_;
    std::vector<Partition> parts_;
    std::map<Partition, int> index_;
    std::vector<std::vector<long long>> k_;
};

SymFunc to_basis(const SymFunc& f, Basis target);
inline SymFunc monomial_to_schur(const SymFunc& f) { return to_basis(f, Basis::schur); }
inline SymFunc schur_to_monomial(const SymFunc& f) { return to_basis(f, Basis::monomial); }

/// Hall inner product; throws std::invalid_argument on a degree mismatch.
LaurentPoly hall_pair(const SymFunc& f, const SymFunc& g);

/// The involution exchanging e and h; returned in the basis of f.
SymFunc omega(const SymFunc& f);

/// Schur expansion of the module whose Young-subgroup invariants have the
/// given graded dimensions (one entry per partition of n). Throws
/// std::invalid_argument on missing partitions and std::domain_error when
/// the solution has a negative coefficient, i.e. the data cannot come
/// from a graded representation.
SymFunc frobenius_from_invariants(int n, const std::map<Partition, LaurentPoly>& dims);

/// True when every Schur coefficient has nonnegative integer coefficients.
bool is_schur_positive(const SymFunc& f);

}  // namespace asfc
