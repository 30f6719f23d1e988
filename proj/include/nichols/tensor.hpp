#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nichols/scalar.hpp"

namespace nichols {

/// A word over the letter alphabet {1..N}; the empty word is the unit.
using Word = std::vector<int>;

/// Letter multiplicities (m_1, ..., m_N) of a word.
using Multidegree = std::vector<int>;

Multidegree multidegree(const Word& w, int n_letters);

std::string word_str(const Word& w);

/// Scalar-linear combination of words: an element of the tensor algebra.
/// Invariant: no stored coefficient is zero.
class TensorElement {
public:
    TensorElement() = default;
    static TensorElement unit() { return monomial(Word{}); }
    static TensorElement monomial(const Word& w, const Scalar& c = Scalar(1));
    static TensorElement generator(int i) { return monomial(Word{i}); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, Scalar>& terms() const { return terms_; }

    Scalar coeff(const Word& w) const;
    void add_term(const Word& w, const Scalar& c);

    TensorElement operator-() const;
    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement operator*(const Scalar& c) const;

    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    /// Concatenation product, extended bilinearly.
    TensorElement concat_mul(const TensorElement& o) const;

    /// Distinct word lengths present.
    std::set<int> degrees() const;
    /// Degree of a homogeneous element; throws DegreeMismatch when mixed.
    int homogeneous_degree() const;

    /// Coefficients mapped through bar conjugation, words unchanged.
    TensorElement bar() const;

    /// Restriction to words of a given multidegree.
    TensorElement project(const Multidegree& md, int n_letters) const;

    std::string str() const;

private:
    std::map<Word, Scalar> terms_;
};

TensorElement operator*(const Scalar& c, const TensorElement& x);

} // namespace nichols
