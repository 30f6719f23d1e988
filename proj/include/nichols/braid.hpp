#pragma once

#include <string>
#include <vector>

#include "nichols/block.hpp"
#include "nichols/braiding.hpp"
#include "nichols/tensor.hpp"

namespace nichols {

/// A braid word in the generators of the n-strand braid group, written left
/// to right; application to tensors proceeds right to left.
struct BraidLetter {
    int index; // 1..n-1
    int sign;  // +1 or -1
};

using BraidWord = std::vector<BraidLetter>;

BraidWord positive_word(const std::vector<int>& indices);

/// Formal Scalar-linear combination of braid words acting on degree-n tensors.
class BraidOperator {
public:
    explicit BraidOperator(int strand_count) : strand_count_(strand_count) {}

    static BraidOperator identity(int n);
    static BraidOperator zero(int n) { return BraidOperator(n); }
    static BraidOperator word(int n, BraidWord w, const Scalar& coeff = Scalar(1));

    int strand_count() const { return strand_count_; }
    const std::vector<std::pair<Scalar, BraidWord>>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Scalar& coeff, BraidWord w);

    BraidOperator operator+(const BraidOperator& o) const;
    BraidOperator operator-(const BraidOperator& o) const;
    /// Algebra product: (A*B)(x) = A(B(x)).
    BraidOperator operator*(const BraidOperator& o) const;
    BraidOperator scaled(const Scalar& c) const;

    /// Reindex generators sigma_i -> sigma_(offset + i) inside a larger braid
    /// group (the fixed-position embedding).
    BraidOperator embedded(int new_strand_count, int offset) const;

private:
    int strand_count_;
    std::vector<std::pair<Scalar, BraidWord>> terms_;
};

/// sigma_i^sign applied at positions (i, i+1): swaps the letters and
/// multiplies by the braiding factor q_ab of the ordered pair (sign +1),
/// or by 1/q_ba (sign -1, the exact inverse).
TensorElement apply_generator(const BraidingMatrix& A, int i, int sign, const TensorElement& x);

TensorElement apply_word(const BraidingMatrix& A, const BraidWord& w, const TensorElement& x);

/// Linear extension; x must be homogeneous of degree = strand count.
TensorElement apply_operator(const BraidingMatrix& A, const BraidOperator& op, const TensorElement& x);

/// A reduced braid word (positive generators, length = inversion count) for a
/// permutation given in one-line notation over 1..n.
BraidWord matsumoto_lift(const std::vector<int>& perm);

/// All reduced words of a permutation (test support; exponential).
std::vector<BraidWord> all_reduced_words(const std::vector<int>& perm);

enum class OperatorName {
    Tn,          // 1 + s_{n-1} + s_{n-1}s_{n-2} + ... + s_{n-1}...s_1
    Un,          // 1 + s_1 + s_1 s_2 + ... + s_1...s_{n-1}
    Pn,          // (1 - s_{n-1}...s_1)(1 - s_{n-1}...s_2)...(1 - s_{n-1})
    Qn,          // (1 - s_1...s_{n-1})(1 - s_1...s_{n-2})...(1 - s_1)
    TnPrime,     // (1 - s_{n-1}^2 s_{n-2}...s_1)...(1 - s_{n-1}^2)
    UnPrime,     // (1 - s_1^2 s_2...s_{n-1})...(1 - s_1^2)
    Garside,     // (s_1...s_{n-1})(s_1...s_{n-2})...(s_1)
    Theta,       // Garside squared
    Xmn,         // trailing m factors of TnPrime (m = 0 gives the identity)
    XmnLeft,     // leading m factors of UnPrime (the Garside mirror of Xmn)
    SnDirect,    // sum of the Matsumoto-Tits lifts of all n! permutations
    SnFactoredT, // T_2 T_3 ... T_n, each T_k on the first k strands
    SnFactoredU, // U_2 U_3 ... U_n, each U_k on the last k strands
};

OperatorName operator_name_from_string(const std::string& name);

/// Named operators of the braid group algebra, expanded to term lists.
/// `m` is consumed by Xmn / XmnLeft only.
BraidOperator make_operator(OperatorName name, int n, int m = -1);

/// Scalar by which the full twist acts on the block of a multidegree:
/// prod_k q_kk^(m_k(m_k-1)) * prod_{p<q} (q_pq q_qp)^(m_p m_q).
Scalar theta_scalar(const BraidingMatrix& A, const Multidegree& md);

} // namespace nichols
