#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "nichols/calculus.hpp"
#include "nichols/relations.hpp"

namespace nichols {

/// Normal-form word of the h-extended enveloping algebra: f-letters in order,
/// then h-letters sorted ascending.
struct ClassicalWord {
    Word f;
    Word h;

    bool operator<(const ClassicalWord& o) const {
        return std::tie(f, h) < std::tie(o.f, o.h);
    }
    bool operator==(const ClassicalWord& o) const { return f == o.f && h == o.h; }
};

/// Rational combination of normal-form words. Invariant: no zero coefficients,
/// h-letters sorted.
class ClassicalElement {
public:
    ClassicalElement() = default;
    static ClassicalElement f_monomial(const Word& fw, const Rational& c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<ClassicalWord, Rational>& terms() const { return terms_; }
    Rational coeff(const ClassicalWord& w) const;
    void add_term(ClassicalWord w, const Rational& c);

    ClassicalElement operator+(const ClassicalElement& o) const;
    ClassicalElement operator-(const ClassicalElement& o) const;
    ClassicalElement operator*(const Rational& c) const;
    bool operator==(const ClassicalElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const ClassicalElement& o) const { return !(*this == o); }

    /// Terms free of h-letters.
    ClassicalElement pure_f() const;
    /// Terms supported on a single f-letter and no h-letters.
    ClassicalElement height1() const;
    bool has_h_letters() const;

    std::string str() const;

private:
    std::map<ClassicalWord, Rational> terms_;
};

/// Evaluation at q^(1/2) = 1, words reinterpreted as f-words; throws NotInA1
/// on a pole.
ClassicalElement specialize_element(const TensorElement& x);

/// Adjoint action [e_i, u] in the h-extended enveloping algebra: matching
/// f_i letters become h_i, h-letters normal-order to the right through
/// [h_i, f_j] = -c_ij f_j. Components that would leave the f/h span (from
/// commuting e_i past existing h-letters) are projected away; the projection
/// commutes with the certificate tests below.
ClassicalElement ad_e(const RationalMatrix& cartan, int i, const ClassicalElement& u);

enum class WitnessVerdict { NotInRadical, Inconclusive };

struct WitnessResult {
    WitnessVerdict verdict = WitnessVerdict::Inconclusive;
    std::vector<int> chain;    // adjoint indices applied, in order
    ClassicalElement terminal; // element certifying the verdict
};

/// Breadth-first search for a chain of adjoint actions reaching a nonzero
/// height-1 element; such a chain certifies that u lies outside U(r_-).
/// Candidate indices are tried from N down to 1 at each step and the first
/// certificate found is reported. Inconclusive is not a membership proof.
WitnessResult r_minus_witness(const RationalMatrix& cartan, const ClassicalElement& u, int depth_max);

/// (ad f_i)^(1 - c_ij)(f_j) expanded in the free algebra; requires integer
/// Cartan data.
ClassicalElement serre_element(const RationalMatrix& cartan, int i, int j);

/// Exact linear test of membership in the degree-d component of the two-sided
/// ideal generated by the Serre elements.
bool serre_ideal_member(const RationalMatrix& cartan, const ClassicalElement& u, int degree);

struct QAdjoint {
    TensorElement k_coeff;    // coefficient of K_i
    TensorElement kinv_coeff; // coefficient of K_i^{-1}
};

/// Commutator [E_i, w] = (d_i^R(w) K_i - partial_i^R(w) K_i^{-1})/(q - q^{-1})
/// for symmetric braidings; the agreement of the two printed forms of the
/// commutator is asserted per block.
QAdjoint q_adjoint(const BraidingMatrix& A, int i, const TensorElement& w);

} // namespace nichols
