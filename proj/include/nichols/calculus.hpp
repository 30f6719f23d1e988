#pragma once

#include <map>
#include <utility>

#include "nichols/braiding.hpp"
#include "nichols/tensor.hpp"

namespace nichols {

/// Element of T(V) (x) T(V). Invariant: no zero coefficients.
class TensorSquareElement {
public:
    TensorSquareElement() = default;

    const std::map<std::pair<Word, Word>, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Word& left, const Word& right) const;
    void add_term(const Word& left, const Word& right, const Scalar& c);

    TensorSquareElement operator+(const TensorSquareElement& o) const;
    bool operator==(const TensorSquareElement& o) const { return terms_ == o.terms_; }

    /// Braided product: (a (x) b)(c (x) d) = (prod over letter pairs
    /// (x in b, y in c) of q_xy) ac (x) bd.
    TensorSquareElement mul(const BraidingMatrix& A, const TensorSquareElement& o) const;

    bool is_zero() const { return terms_.empty(); }

private:
    std::map<std::pair<Word, Word>, Scalar> terms_;
};

/// Braided coproduct with primitive generators.
TensorSquareElement coproduct(const BraidingMatrix& A, const TensorElement& x);

/// Hopf pairing with phi(v_i, v_j) = delta_ij, computed by peeling the last
/// letter of the left argument through the right differential.
Scalar pairing(const BraidingMatrix& A, const TensorElement& x, const TensorElement& y);

/// The same form computed by peeling the first letter of the left argument
/// through the left differential (the other splitting of the product axiom;
/// equal to `pairing` for every braiding).
Scalar pairing_front_peel(const BraidingMatrix& A, const TensorElement& x, const TensorElement& y);

/// Evaluation through the coproduct axiom on the right argument; agrees with
/// `pairing` on symmetric braidings, where both product axioms hold at once.
Scalar pairing_oracle(const BraidingMatrix& A, const TensorElement& x, const TensorElement& y);

/// Right / left differentials by the one-letter recursions.
TensorElement dR(const BraidingMatrix& A, int i, const TensorElement& x);
TensorElement dL(const BraidingMatrix& A, int i, const TensorElement& x);

/// Differentials from the pairing/coproduct definition (test oracles).
TensorElement dR_via_coproduct(const BraidingMatrix& A, int i, const TensorElement& x);
TensorElement dL_via_coproduct(const BraidingMatrix& A, int i, const TensorElement& x);

/// Bar conjugation of coefficients, words fixed.
TensorElement bar_element(const TensorElement& x);

/// Bar-twisted differentials: on a monomial the barred differential, extended
/// linearly over the un-barred field.
TensorElement dbarR(const BraidingMatrix& A, int i, const TensorElement& x);
TensorElement dbarL(const BraidingMatrix& A, int i, const TensorElement& x);

} // namespace nichols
