#include "nichols/calculus.hpp"

namespace nichols {

Scalar TensorSquareElement::coeff(const Word& left, const Word& right) const {
    auto it = terms_.find({left, right});
    return it == terms_.end() ? Scalar(0) : it->second;
}

void TensorSquareElement::add_term(const Word& left, const Word& right, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(left, right);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorSquareElement TensorSquareElement::operator+(const TensorSquareElement& o) const {
    TensorSquareElement r = *this;
    for (const auto& [wp, c] : o.terms_) r.add_term(wp.first, wp.second, c);
    return r;
}

namespace {

Scalar crossing_factor(const BraidingMatrix& A, const Word& over, const Word& under) {
    // product of q_xy for every letter x of `over` passing every letter y of
    // `under`
    Scalar f(1);
    for (int x : over)
        for (int y : under) f *= A.at(x - 1, y - 1);
    return f;
}

} // namespace

TensorSquareElement TensorSquareElement::mul(const BraidingMatrix& A, const TensorSquareElement& o) const {
    TensorSquareElement r;
    for (const auto& [ab, c1] : terms_)
        for (const auto& [cd, c2] : o.terms_) {
            const auto& [a, b] = ab;
            const auto& [cw, d] = cd;
            Scalar factor = crossing_factor(A, b, cw);
            Word left = a;
            left.insert(left.end(), cw.begin(), cw.end());
            Word right = b;
            right.insert(right.end(), d.begin(), d.end());
            r.add_term(left, right, c1 * c2 * factor);
        }
    return r;
}

TensorSquareElement coproduct(const BraidingMatrix& A, const TensorElement& x) {
    TensorSquareElement r;
    for (const auto& [w, c] : x.terms()) {
        TensorSquareElement acc;
        acc.add_term(Word{}, Word{}, Scalar(1));
        for (int letter : w) {
            TensorSquareElement primitive;
            primitive.add_term(Word{letter}, Word{}, Scalar(1));
            primitive.add_term(Word{}, Word{letter}, Scalar(1));
            acc = acc.mul(A, primitive);
        }
        for (const auto& [wp, cc] : acc.terms()) r.add_term(wp.first, wp.second, cc * c);
    }
    return r;
}

TensorElement dR(const BraidingMatrix& A, int i, const TensorElement& x) {
    if (i < 1 || i > A.size()) throw LetterOutOfRange(i, A.size());
    TensorElement r;
    for (const auto& [w, c] : x.terms()) {
        if (w.empty()) continue;
        // d_i^R(u v_k) = q_ik d_i^R(u) v_k + delta_ik u, unrolled over the word
        Scalar factor = c;
        for (size_t pos = w.size(); pos-- > 0;) {
            if (w[pos] == i) {
                Word rest(w.begin(), w.begin() + pos);
                rest.insert(rest.end(), w.begin() + pos + 1, w.end());
                r.add_term(rest, factor);
            }
            factor *= A.at(i - 1, w[pos] - 1);
        }
    }
    return r;
}

TensorElement dL(const BraidingMatrix& A, int i, const TensorElement& x) {
    if (i < 1 || i > A.size()) throw LetterOutOfRange(i, A.size());
    TensorElement r;
    for (const auto& [w, c] : x.terms()) {
        // d_i^L(v_k u) = delta_ik u + q_ki v_k d_i^L(u)
        Scalar factor = c;
        for (size_t pos = 0; pos < w.size(); ++pos) {
            if (w[pos] == i) {
                Word rest(w.begin(), w.begin() + pos);
                rest.insert(rest.end(), w.begin() + pos + 1, w.end());
                r.add_term(rest, factor);
            }
            factor *= A.at(w[pos] - 1, i - 1);
        }
    }
    return r;
}

TensorElement dR_via_coproduct(const BraidingMatrix& A, int i, const TensorElement& x) {
    TensorElement r;
    const TensorSquareElement cp = coproduct(A, x);
    for (const auto& [wp, c] : cp.terms())
        if (wp.second == Word{i}) r.add_term(wp.first, c);
    return r;
}

TensorElement dL_via_coproduct(const BraidingMatrix& A, int i, const TensorElement& x) {
    TensorElement r;
    const TensorSquareElement cp = coproduct(A, x);
    for (const auto& [wp, c] : cp.terms())
        if (wp.first == Word{i}) r.add_term(wp.second, c);
    return r;
}

Scalar pairing(const BraidingMatrix& A, const TensorElement& x, const TensorElement& y) {
    Scalar total(0);
    for (const auto& [w, c] : x.terms()) {
        // phi(u v_i, y) = phi(u, d_i^R(y)); degree mismatch pairs to zero
        bool dead = false;
        TensorElement current = y;
        for (size_t pos = w.size(); pos-- > 0;) {
            current = dR(A, w[pos], current);
            if (current.is_zero()) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        total += c * current.coeff(Word{});
    }
    return total;
}

Scalar pairing_front_peel(const BraidingMatrix& A, const TensorElement& x, const TensorElement& y) {
    Scalar total(0);
    for (const auto& [w, c] : x.terms()) {
        // phi(v_i u, y) = phi(u, d_i^L(y))
        TensorElement current = y;
        bool dead = false;
        for (int letter : w) {
            current = dL(A, letter, current);
            if (current.is_zero()) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        total += c * current.coeff(Word{});
    }
    return total;
}

Scalar pairing_oracle(const BraidingMatrix& A, const TensorElement& x, const TensorElement& y) {
    Scalar total(0);
    for (const auto& [w, c] : y.terms()) {
        // phi(x, v_j u) = phi(d_j^L(x), u)
        TensorElement current = x;
        bool dead = false;
        for (int letter : w) {
            current = dL(A, letter, current);
            if (current.is_zero()) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        total += current.coeff(Word{}) * c;
    }
    return total;
}

TensorElement bar_element(const TensorElement& x) { return x.bar(); }

TensorElement dbarR(const BraidingMatrix& A, int i, const TensorElement& x) {
    TensorElement r;
    for (const auto& [w, c] : x.terms())
        r += c * bar_element(dR(A, i, TensorElement::monomial(w)));
    return r;
}

TensorElement dbarL(const BraidingMatrix& A, int i, const TensorElement& x) {
    TensorElement r;
    for (const auto& [w, c] : x.terms())
        r += c * bar_element(dL(A, i, TensorElement::monomial(w)));
    return r;
}

} // namespace nichols
