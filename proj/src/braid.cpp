#include "nichols/braid.hpp"

#include <algorithm>
#include <numeric>

namespace nichols {

BraidWord positive_word(const std::vector<int>& indices) {
    BraidWord w;
    w.reserve(indices.size());
    for (int i : indices) w.push_back({i, +1});
    return w;
}

BraidOperator BraidOperator::identity(int n) { return word(n, BraidWord{}); }

BraidOperator BraidOperator::word(int n, BraidWord w, const Scalar& coeff) {
    BraidOperator op(n);
    op.add_term(coeff, std::move(w));
    return op;
}

void BraidOperator::add_term(const Scalar& coeff, BraidWord w) {
    for (const auto& letter : w)
        if (letter.index < 1 || letter.index >= strand_count_)
            throw InputError("braid generator index out of range");
    if (!coeff.is_zero()) terms_.emplace_back(coeff, std::move(w));
}

BraidOperator BraidOperator::operator+(const BraidOperator& o) const {
    if (strand_count_ != o.strand_count_) throw DegreeMismatch("operator strand counts differ");
    BraidOperator r = *this;
    for (const auto& t : o.terms_) r.terms_.push_back(t);
    return r;
}

BraidOperator BraidOperator::operator-(const BraidOperator& o) const {
    return *this + o.scaled(Scalar(-1));
}

BraidOperator BraidOperator::operator*(const BraidOperator& o) const {
    if (strand_count_ != o.strand_count_) throw DegreeMismatch("operator strand counts differ");
    BraidOperator r(strand_count_);
    for (const auto& [c1, w1] : terms_)
        for (const auto& [c2, w2] : o.terms_) {
            BraidWord w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.terms_.emplace_back(c1 * c2, std::move(w));
        }
    return r;
}

BraidOperator BraidOperator::scaled(const Scalar& c) const {
    BraidOperator r(strand_count_);
    if (c.is_zero()) return r;
    for (const auto& [coeff, w] : terms_) r.terms_.emplace_back(coeff * c, w);
    return r;
}

BraidOperator BraidOperator::embedded(int new_strand_count, int offset) const {
    BraidOperator r(new_strand_count);
    for (const auto& [coeff, w] : terms_) {
        BraidWord shifted;
        shifted.reserve(w.size());
        for (const auto& letter : w) shifted.push_back({letter.index + offset, letter.sign});
        r.add_term(coeff, std::move(shifted));
    }
    return r;
}

TensorElement apply_generator(const BraidingMatrix& A, int i, int sign, const TensorElement& x) {
    TensorElement r;
    for (const auto& [w, c] : x.terms()) {
        if (static_cast<int>(w.size()) < i + 1)
            throw DegreeMismatch("word too short for generator " + std::to_string(i));
        Word swapped = w;
        std::swap(swapped[i - 1], swapped[i]);
        const int a = w[i - 1], b = w[i];
        // sigma(v_a (x) v_b) = q_ab v_b (x) v_a; the inverse carries 1/q_ba
        Scalar factor = (sign > 0) ? A.at(a - 1, b - 1) : A.at(b - 1, a - 1).inverse();
        r.add_term(swapped, c * factor);
    }
    return r;
}

TensorElement apply_word(const BraidingMatrix& A, const BraidWord& w, const TensorElement& x) {
    TensorElement r = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = apply_generator(A, it->index, it->sign, r);
    return r;
}

TensorElement apply_operator(const BraidingMatrix& A, const BraidOperator& op, const TensorElement& x) {
    if (!x.is_zero() && x.homogeneous_degree() != op.strand_count())
        throw DegreeMismatch("element degree does not match operator strand count");
    TensorElement r;
    for (const auto& [coeff, w] : op.terms()) r += apply_word(A, w, x) * coeff;
    return r;
}

BraidWord matsumoto_lift(const std::vector<int>& perm) {
    // bubble-sort to the identity; each swap contributes one generator and the
    // swap count equals the inversion number, so the recorded word is reduced
    std::vector<int> p = perm;
    std::vector<int> indices;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] > p[i + 1]) {
                std::swap(p[i], p[i + 1]);
                indices.push_back(static_cast<int>(i + 1));
                changed = true;
            }
    }
    std::reverse(indices.begin(), indices.end());
    return positive_word(indices);
}

std::vector<BraidWord> all_reduced_words(const std::vector<int>& perm) {
    // descents of perm^-1 are the generators that can start a reduced word
    std::vector<BraidWord> result;
    bool is_identity = true;
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i + 1)) is_identity = false;
    if (is_identity) return {BraidWord{}};
    for (size_t i = 0; i + 1 < perm.size(); ++i) {
        if (perm[i] > perm[i + 1]) {
            // right descent: reduced words of perm are those of perm*s_i
            // extended by s_i
            std::vector<int> shorter = perm;
            std::swap(shorter[i], shorter[i + 1]);
            for (auto& head : all_reduced_words(shorter)) {
                BraidWord w = std::move(head);
                w.push_back({static_cast<int>(i + 1), +1});
                result.push_back(std::move(w));
            }
        }
    }
    return result;
}

namespace {

std::vector<int> descending_run(int from, int down_to) {
    std::vector<int> v;
    for (int i = from; i >= down_to; --i) v.push_back(i);
    return v;
}

std::vector<int> ascending_run(int from, int up_to) {
    std::vector<int> v;
    for (int i = from; i <= up_to; ++i) v.push_back(i);
    return v;
}

BraidOperator product_of_binomials(int n, const std::vector<std::vector<int>>& words) {
    // expands (1 - w_1)(1 - w_2)...(1 - w_k) by distribution
    BraidOperator result = BraidOperator::identity(n);
    for (const auto& w : words) {
        BraidOperator factor = BraidOperator::identity(n) - BraidOperator::word(n, positive_word(w));
        result = result * factor;
    }
    return result;
}

BraidOperator make_Tn(int n) {
    BraidOperator op = BraidOperator::identity(n);
    for (int k = n - 1; k >= 1; --k) op.add_term(Scalar(1), positive_word(descending_run(n - 1, k)));
    return op;
}

BraidOperator make_Un(int n) {
    BraidOperator op = BraidOperator::identity(n);
    for (int k = 1; k <= n - 1; ++k) op.add_term(Scalar(1), positive_word(ascending_run(1, k)));
    return op;
}

BraidOperator make_Pn(int n) {
    std::vector<std::vector<int>> factors;
    for (int k = 1; k <= n - 1; ++k) factors.push_back(descending_run(n - 1, k));
    return product_of_binomials(n, factors);
}

BraidOperator make_Qn(int n) {
    std::vector<std::vector<int>> factors;
    for (int k = n - 1; k >= 1; --k) factors.push_back(ascending_run(1, k));
    return product_of_binomials(n, factors);
}

std::vector<int> squared_head_descending(int n, int k) {
    // s_{n-1}^2 s_{n-2} ... s_k
    std::vector<int> w{n - 1};
    auto rest = descending_run(n - 1, k);
    w.insert(w.end(), rest.begin(), rest.end());
    return w;
}

std::vector<int> squared_head_ascending(int k) {
    // s_1^2 s_2 ... s_k
    std::vector<int> w{1};
    auto rest = ascending_run(1, k);
    w.insert(w.end(), rest.begin(), rest.end());
    return w;
}

BraidOperator make_Xmn(int n, int m) {
    if (m < 0 || m > n - 1) throw InputError("Xmn requires 0 <= m <= n-1");
    std::vector<std::vector<int>> factors;
    for (int k = n - m; k <= n - 1; ++k) factors.push_back(squared_head_descending(n, k));
    return product_of_binomials(n, factors);
}

BraidOperator make_Xmn_left(int n, int m) {
    if (m < 0 || m > n - 1) throw InputError("XmnLeft requires 0 <= m <= n-1");
    std::vector<std::vector<int>> factors;
    for (int k = m; k >= 1; --k) factors.push_back(squared_head_ascending(k));
    return product_of_binomials(n, factors);
}

BraidWord garside_word(int n) {
    std::vector<int> indices;
    for (int row = n - 1; row >= 1; --row)
        for (int i = 1; i <= row; ++i) indices.push_back(i);
    return positive_word(indices);
}

BraidOperator make_sn_direct(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    BraidOperator op(n);
    do {
        op.add_term(Scalar(1), matsumoto_lift(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return op;
}

} // namespace

OperatorName operator_name_from_string(const std::string& name) {
    if (name == "Tn") return OperatorName::Tn;
    if (name == "Un") return OperatorName::Un;
    if (name == "Pn") return OperatorName::Pn;
    if (name == "Qn") return OperatorName::Qn;
    if (name == "TnPrime") return OperatorName::TnPrime;
    if (name == "UnPrime") return OperatorName::UnPrime;
    if (name == "Garside") return OperatorName::Garside;
    if (name == "Theta") return OperatorName::Theta;
    if (name == "Xmn") return OperatorName::Xmn;
    if (name == "XmnLeft") return OperatorName::XmnLeft;
    if (name == "SnDirect") return OperatorName::SnDirect;
    if (name == "SnFactoredT") return OperatorName::SnFactoredT;
    if (name == "SnFactoredU") return OperatorName::SnFactoredU;
    throw InputError("unknown operator name: " + name);
}

BraidOperator make_operator(OperatorName name, int n, int m) {
    if (n < 2) throw InputError("operators need n >= 2");
    switch (name) {
        case OperatorName::Tn: return make_Tn(n);
        case OperatorName::Un: return make_Un(n);
        case OperatorName::Pn: return make_Pn(n);
        case OperatorName::Qn: return make_Qn(n);
        case OperatorName::TnPrime: return make_Xmn(n, n - 1);
        case OperatorName::UnPrime: return make_Xmn_left(n, n - 1);
        case OperatorName::Garside: return BraidOperator::word(n, garside_word(n));
        case OperatorName::Theta: {
            BraidOperator g = BraidOperator::word(n, garside_word(n));
            return g * g;
        }
        case OperatorName::Xmn: return make_Xmn(n, m);
        case OperatorName::XmnLeft: return make_Xmn_left(n, m);
        case OperatorName::SnDirect: return make_sn_direct(n);
        case OperatorName::SnFactoredT: {
            BraidOperator op = make_Tn(2).embedded(n, 0);
            for (int k = 3; k <= n; ++k) op = op * make_Tn(k).embedded(n, 0);
            return op;
        }
        case OperatorName::SnFactoredU: {
            // U_k lives on the last k strands: sigma_i -> sigma_(n-k+i)
            BraidOperator op = make_Un(2).embedded(n, n - 2);
            for (int k = 3; k <= n; ++k) op = op * make_Un(k).embedded(n, n - k);
            return op;
        }
    }
    throw InputError("unknown operator");
}

Scalar theta_scalar(const BraidingMatrix& A, const Multidegree& md) {
    if (static_cast<int>(md.size()) != A.size()) throw InputError("multidegree size mismatch");
    Scalar result(1);
    auto power = [](const Scalar& base, long e) {
        Scalar r(1);
        for (long k = 0; k < e; ++k) r *= base;
        return r;
    };
    for (int k = 0; k < A.size(); ++k)
        result *= power(A.at(k, k), static_cast<long>(md[k]) * (md[k] - 1));
    for (int p = 0; p < A.size(); ++p)
        for (int q = p + 1; q < A.size(); ++q)
            result *= power(A.at(p, q) * A.at(q, p), static_cast<long>(md[p]) * md[q]);
    return result;
}

} // namespace nichols
