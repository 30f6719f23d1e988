#pragma once

#include <string>

#include "nichols/laurent.hpp"

namespace nichols {

/// Element of the field Q(t) with t = q^(1/2), kept in canonical form:
///   - numerator and denominator share no polynomial factor,
///   - the denominator is a polynomial in t with nonzero constant term and
///     leading coefficient 1 (any t power is absorbed into the numerator).
/// Equality of canonical forms is field-element equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Rational& r) : num_(r) {}     // NOLINT: implicit by design
    Scalar(long n) : num_(Rational(n)) {}      // NOLINT: implicit by design
    Scalar(Laurent num, Laurent den);

    static Scalar q_power(long e) { return Scalar(Laurent::t_power(2 * e), Laurent(1)); }
    static Scalar t_power(long e) { return Scalar(Laurent::t_power(e), Laurent(1)); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Field automorphism q^(1/2) -> q^(-1/2).
    Scalar bar() const;

    /// Exact evaluation at t = 1; throws DenominatorVanishesAtOne outside
    /// the localization at (t - 1).
    Rational eval_at_one() const;

    /// True iff the denominator does not vanish at t = 1.
    bool in_A1() const;

    /// True when the element is c * t^e; outputs c and e.
    bool is_monomial(Rational* coeff = nullptr, long* exp = nullptr) const;

    /// Canonical text form, "(num)/(den)" when the denominator is nontrivial.
    std::string str() const;

private:
    void canonicalize();
    static Scalar polynomial(Laurent num);

    Laurent num_;
    Laurent den_ = Laurent(1);
};

Scalar operator*(const Rational& r, const Scalar& s);

} // namespace nichols
