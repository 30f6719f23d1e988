#include "nichols/tensor.hpp"

#include <sstream>

namespace nichols {

Multidegree multidegree(const Word& w, int n_letters) {
    Multidegree md(n_letters, 0);
    for (int letter : w) {
        if (letter < 1 || letter > n_letters) throw LetterOutOfRange(letter, n_letters);
        ++md[letter - 1];
    }
    return md;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out << ".";
        out << "v" << w[i];
    }
    return out.str();
}

TensorElement TensorElement::monomial(const Word& w, const Scalar& c) {
    TensorElement x;
    if (!c.is_zero()) x.terms_[w] = c;
    return x;
}

Scalar TensorElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void TensorElement::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator-() const {
    TensorElement r;
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement r = *this;
    r += o;
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement r = *this;
    r -= o;
    return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

TensorElement TensorElement::operator*(const Scalar& c) const {
    TensorElement r;
    if (c.is_zero()) return r;
    for (const auto& [w, wc] : terms_) r.terms_[w] = wc * c;
    return r;
}

TensorElement operator*(const Scalar& c, const TensorElement& x) { return x * c; }

TensorElement TensorElement::concat_mul(const TensorElement& o) const {
    TensorElement r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

std::set<int> TensorElement::degrees() const {
    std::set<int> degs;
    for (const auto& [w, c] : terms_) degs.insert(static_cast<int>(w.size()));
    return degs;
}

int TensorElement::homogeneous_degree() const {
    auto degs = degrees();
    if (degs.size() != 1) throw DegreeMismatch("element is not homogeneous");
    return *degs.begin();
}

TensorElement TensorElement::bar() const {
    TensorElement r;
    for (const auto& [w, c] : terms_) r.terms_[w] = c.bar();
    return r;
}

TensorElement TensorElement::project(const Multidegree& md, int n_letters) const {
    TensorElement r;
    for (const auto& [w, c] : terms_)
        if (multidegree(w, n_letters) == md) r.terms_[w] = c;
    return r;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")*" << word_str(w);
    }
    return out.str();
}

} // namespace nichols
