#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace asfc {

/// Exponent pair q^q t^t. Ordered by t first so that printing groups by
/// the t-grading.
struct Exponent {
    int q = 0;
    int t = 0;

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend auto operator<=>(const Exponent& a, const Exponent& b) {
        if (auto c = a.t <=> b.t; c != 0)
            return c;
        return a.q <=> b.q;
    }
};

/// Integer Laurent polynomial in q with polynomial dependence on t. Zero
/// coefficients are never stored.
class LaurentPoly {
public:
    using Coeff = std::int64_t;
    using Terms = std::map<Exponent, Coeff>;

    LaurentPoly() = default;
    LaurentPoly(Coeff constant);  // NOLINT: integers promote implicitly
    static LaurentPoly monomial(int q_exp, int t_exp = 0, Coeff c = 1);
    static LaurentPoly q_pow(int e) { return monomial(e, 0); }
    static LaurentPoly t_pow(int e) { return monomial(0, e); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Coeff coeff(int q_exp, int t_exp = 0) const;
    void add_term(int q_exp, int t_exp, Coeff c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    LaurentPoly operator-() const;

    /// q -> q^{-1}; t untouched.
    LaurentPoly invert_q() const;
    /// Multiplies by q^k.
    LaurentPoly shift_q(int k) const;
    /// Multiplies by t^k.
    LaurentPoly shift_t(int k) const;
    /// Sum of all coefficients (q = t = 1).
    Coeff value_at_one() const;
    bool has_nonnegative_coefficients() const;
    int min_q() const;
    int max_q() const;

    /// "0", "1 + q", "q + t", "2*q^-1*t^2 - 3".
    std::string to_string() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    Terms terms_;
};

}  // namespace asfc
