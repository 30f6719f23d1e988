#pragma once

#include <optional>
#include <vector>

#include "nichols/braid.hpp"
#include "nichols/braiding.hpp"

namespace nichols {

/// Exponent data of the full-twist action for a monomial braiding:
/// theta acts on the block of m by t^lambda with
/// lambda = sum_k d_k m_k(m_k-1) + sum_{p<q} e_pq m_p m_q.
class ThetaForm {
public:
    explicit ThetaForm(const BraidingMatrix& A);

    int size() const { return n_; }
    long diagonal(int k) const { return diag_[k]; }
    long pair_exponent(int p, int q) const;

    /// t-exponent of the theta scalar on a multidegree (or any integer point).
    long theta_exponent(const std::vector<int>& x) const;

private:
    int n_;
    std::vector<long> diag_;
    std::vector<std::vector<long>> pair_; // indexed p < q
};

/// Multidegrees with 2 <= |m| <= height_max on which theta acts trivially,
/// lexicographically sorted.
std::vector<Multidegree> zero_blocks(const ThetaForm& tf, int height_max);

/// Q(x) = sum x_i^2 - sum_{i<j} b_ij x_i x_j with rational b.
class QuadraticForm {
public:
    QuadraticForm(int n, std::vector<std::vector<Rational>> b_upper);

    /// Derived view of a theta form with a uniform nonzero diagonal exponent
    /// d: b_pq = -2 e_pq / d (non-negative for Cartan-derived braidings).
    static QuadraticForm from_theta(const ThetaForm& tf);

    int size() const { return n_; }
    Rational b(int p, int q) const;
    Rational value(const std::vector<int>& x) const;

    /// Exact semi-positive-definiteness via pivoted symmetric elimination on
    /// the Gram matrix.
    bool is_semipositive() const;

private:
    int n_;
    std::vector<std::vector<Rational>> b_; // indexed p < q
};

/// S(x) = sum (x_i - 1)^2.
long s_value(const std::vector<int>& x);

struct EnumerationResult {
    bool bounded = false;                 // true when Q is semi-positive definite
    std::vector<std::vector<int>> points; // integral points with Q + S = n
    std::optional<int> truncated_at;      // height bound used in the unbounded case
};

/// Integral points of Q(x) + S(x) = n. Semi-positive Q: exhaustive over the
/// compact box S <= n. Otherwise: bounded sweep up to fallback_height with a
/// partial list. Coordinates restricted to x >= 0 unless all_integers.
EnumerationResult enumerate_E(const QuadraticForm& qf, int fallback_height, bool all_integers = false);

} // namespace nichols
