#include "nichols/scalar.hpp"

namespace nichols {

Scalar::Scalar(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("scalar with zero denominator");
    canonicalize();
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    // absorb t powers into the numerator, making the denominator a polynomial
    // with nonzero constant term
    long shift = num_.low() - den_.low();
    num_ = num_.shifted(-num_.low());
    den_ = den_.shifted(-den_.low());
    Laurent g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        Laurent q, r;
        poly_divmod(num_, g, q, r);
        num_ = q;
        poly_divmod(den_, g, q, r);
        den_ = q;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Laurent inv_lead{Rational(1) / lead};
        num_ *= inv_lead;
        den_ *= inv_lead;
    }
    num_ = num_.shifted(shift);
}

Scalar Scalar::polynomial(Laurent num) {
    // already canonical: the denominator 1 is monic with nonzero constant term
    Scalar r;
    r.num_ = std::move(num);
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (den_.is_one() && o.den_.is_one()) return polynomial(num_ + o.num_);
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (den_.is_one() && o.den_.is_one()) return polynomial(num_ - o.num_);
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (den_.is_one() && o.den_.is_one()) return polynomial(num_ * o.num_);
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::bar() const { return Scalar(num_.bar(), den_.bar()); }

Rational Scalar::eval_at_one() const {
    Rational d = den_.eval_at_one();
    if (d == 0) throw DenominatorVanishesAtOne();
    return num_.eval_at_one() / d;
}

bool Scalar::in_A1() const { return den_.eval_at_one() != 0; }

bool Scalar::is_monomial(Rational* coeff, long* exp) const {
    if (!den_.is_one() || !num_.is_monomial()) return false;
    if (coeff) *coeff = num_.leading();
    if (exp) *exp = num_.high();
    return true;
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Scalar operator*(const Rational& r, const Scalar& s) { return Scalar(r) * s; }

} // namespace nichols
