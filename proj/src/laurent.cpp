#include "nichols/laurent.hpp"

#include <sstream>

namespace nichols {

namespace {

// mpq_class arithmetic stays canonical, but the two-argument constructor does
// not reduce; normalize every rational entering from outside
Rational canonical(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c;
}

} // namespace

Laurent::Laurent(const Rational& constant) {
    Rational c = canonical(constant);
    if (c != 0) coeffs_[0] = std::move(c);
}

Laurent::Laurent(long num, long den) : Laurent(Rational(num, den)) {}

Laurent Laurent::term(const Rational& coeff, long exp) {
    Laurent p;
    Rational c = canonical(coeff);
    if (c != 0) p.coeffs_[exp] = std::move(c);
    return p;
}

bool Laurent::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

Rational Laurent::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational Laurent::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.rbegin()->second;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (const auto& [e, c] : o.coeffs_) {
        auto it = r.coeffs_.find(e);
        if (it == r.coeffs_.end()) {
            r.coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.coeffs_.erase(it);
        }
    }
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) {
            Rational prod = c1 * c2;
            auto it = r.coeffs_.find(e1 + e2);
            if (it == r.coeffs_.end()) {
                r.coeffs_[e1 + e2] = prod;
            } else {
                it->second += prod;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    return r;
}

Laurent Laurent::shifted(long k) const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

Rational Laurent::eval_at_one() const {
    Rational s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

bool Laurent::is_t_power(long* exp_out) const {
    if (coeffs_.size() != 1 || coeffs_.begin()->second != 1) return false;
    if (exp_out) *exp_out = coeffs_.begin()->first;
    return true;
}

void Laurent::set_coeff(long exp, const Rational& c) {
    Rational r = canonical(c);
    if (r == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = std::move(r);
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

std::string Laurent::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string base;
        if (e != 0) {
            if (e % 2 == 0) {
                long k = e / 2;
                base = (k == 1) ? "q" : "q^" + std::to_string(k);
            } else {
                base = "q^{" + std::to_string(e) + "/2}";
            }
        }
        if (base.empty()) {
            out << rational_str(abs_c);
        } else if (abs_c == 1) {
            out << base;
        } else {
            out << rational_str(abs_c) << "*" << base;
        }
    }
    return out.str();
}

void poly_divmod(const Laurent& a, const Laurent& b, Laurent& quot, Laurent& rem) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    quot = Laurent();
    rem = a;
    const long db = b.high();
    const Rational lb = b.leading();
    while (!rem.is_zero() && rem.high() >= db) {
        Rational c = rem.leading() / lb;
        long e = rem.high() - db;
        Laurent t = Laurent::term(c, e);
        quot += t;
        rem -= t * b;
    }
}

Laurent poly_gcd(const Laurent& a, const Laurent& b) {
    Laurent x = a.is_zero() ? a : a.shifted(-a.low());
    Laurent y = b.is_zero() ? b : b.shifted(-b.low());
    while (!y.is_zero()) {
        Laurent q, r;
        poly_divmod(x, y, q, r);
        x = y;
        // keep remainders monic to bound coefficient growth
        y = r.is_zero() ? r : r * Laurent(Rational(1) / r.leading());
    }
    if (x.is_zero()) return x;
    return x * Laurent(Rational(1) / x.leading());
}

} // namespace nichols
