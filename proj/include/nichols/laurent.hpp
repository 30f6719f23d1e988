#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "nichols/common.hpp"

namespace nichols {

using Rational = mpq_class;

/// Laurent polynomial in t = q^(1/2) with exact rational coefficients.
/// Invariant: no stored coefficient is zero.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Rational& constant);          // NOLINT: implicit by design
    Laurent(long num, long den = 1);

    /// The monomial c * t^exp.
    static Laurent term(const Rational& coeff, long exp);
    static Laurent t_power(long exp) { return term(1, exp); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    /// Lowest / highest exponent with nonzero coefficient. Zero polynomial -> 0.
    long low() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    long high() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    size_t term_count() const { return coeffs_.size(); }
    Rational coeff(long exp) const;
    const std::map<long, Rational>& terms() const { return coeffs_; }

    /// Leading coefficient (at the highest exponent); 0 for the zero polynomial.
    Rational leading() const;

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    /// Multiply by t^k.
    Laurent shifted(long k) const;

    /// Exponent negation t^e -> t^-e (bar conjugation on the polynomial level).
    Laurent bar() const;

    /// Exact value at t = 1 (sum of coefficients).
    Rational eval_at_one() const;

    /// True when the polynomial is a single term with coefficient 1.
    bool is_t_power(long* exp_out = nullptr) const;
    /// Single-term test with arbitrary coefficient.
    bool is_monomial() const { return coeffs_.size() == 1; }

    void set_coeff(long exp, const Rational& c);

    /// Canonical text form: terms "c*q^{e/2}" in increasing exponent order,
    /// "q^{e/2}" printed as "q^k" for even e ("q" when k = 1, plain rational
    /// when e = 0) and as "q^{e/2}" for odd e.
    std::string str() const;

private:
    std::map<long, Rational> coeffs_;
};

/// Quotient and remainder of polynomial division (both operands must have
/// low() >= 0; divisor nonzero).
void poly_divmod(const Laurent& a, const Laurent& b, Laurent& quot, Laurent& rem);

/// Monic gcd over Q[t] of two Laurent polynomials after clearing t powers.
/// gcd(0, b) = monic(b). Result has low() == 0.
Laurent poly_gcd(const Laurent& a, const Laurent& b);

std::string rational_str(const Rational& r);

} // namespace nichols
