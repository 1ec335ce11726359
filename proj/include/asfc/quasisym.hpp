#pragma once

#include <map>
#include <vector>

#include "asfc/laurent.hpp"
#include "asfc/symfunc.hpp"
#include "asfc/tableau.hpp"

namespace asfc {

/// Subset of {1..n-1}, ascending.
using DescentSet = std::vector<int>;

/// Degree-n quasisymmetric function in the monomial basis M_alpha, alpha a
/// (strong) composition of n.
class QuasiSym {
public:
    using Composition = std::vector<int>;
    using Coeffs = std::map<Composition, LaurentPoly>;

    explicit QuasiSym(int degree);

    int degree() const noexcept { return degree_; }
    const Coeffs& coeffs() const noexcept { return coeffs_; }
    LaurentPoly coeff(const Composition& alpha) const;
    void add(const Composition& alpha, const LaurentPoly& c);

    QuasiSym& operator+=(const QuasiSym& o);
    QuasiSym scaled(const LaurentPoly& c) const;

    friend bool operator==(const QuasiSym&, const QuasiSym&) = default;

private:
    int degree_;
    Coeffs coeffs_;
};

/// All compositions of n, ordered by their break sets as bitmasks.
std::vector<QuasiSym::Composition> compositions_of(int n);
/// Partial sums of alpha except the last: the set where a word strictly increases.
DescentSet composition_breaks(const QuasiSym::Composition& alpha);
QuasiSym::Composition composition_from_breaks(int n, const DescentSet& d);

/// Positive: sum over weakly increasing words that strictly increase at
/// every position in D. Negative: words may repeat only at positions in D.
QuasiSym quasisym_Q(int n, const DescentSet& d, Sign sign);

/// Coefficients constant on rearrangements of each composition.
bool is_symmetric(const QuasiSym& f);
/// Monomial-basis symmetric function; throws std::invalid_argument if f is
/// not symmetric.
SymFunc to_symfunc(const QuasiSym& f);
QuasiSym from_symfunc(const SymFunc& f);

/// Coefficients c_D with f = sum_D c_D Q_{n,D} (positive version).
using FundamentalExpansion = std::map<DescentSet, LaurentPoly>;
FundamentalExpansion fundamental_expansion(const QuasiSym& f);

/// Swaps each Q_{n,D} for its negative counterpart and re-symmetrizes.
/// Throws std::invalid_argument if f is not symmetric.
SymFunc omega_via_quasisym(const SymFunc& f);

}  // namespace asfc
