#pragma once

#include <optional>
#include <vector>

#include "nichols/scalar.hpp"

namespace nichols {

/// Generalized Cartan matrix: integer entries, diagonal 2, non-positive
/// off-diagonal, c_ij = 0 iff c_ji = 0.
class CartanMatrix {
public:
    explicit CartanMatrix(std::vector<std::vector<long>> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    long at(int i, int j) const { return entries_[i][j]; }
    const std::vector<std::vector<long>>& entries() const { return entries_; }

    bool is_symmetric() const;

private:
    std::vector<std::vector<long>> entries_;
};

/// Rational square matrix; holds averaged Cartan matrices (denominators
/// dividing 2) and feeds the classical adjoint action.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::vector<std::vector<Rational>> entries);
    explicit RationalMatrix(const CartanMatrix& c);

    int size() const { return static_cast<int>(entries_.size()); }
    const Rational& at(int i, int j) const { return entries_[i][j]; }
    bool is_symmetric() const;

private:
    std::vector<std::vector<Rational>> entries_;
};

/// Entrywise symmetrization (C + C^T)/2.
RationalMatrix average(const CartanMatrix& c);

enum class MatrixOrigin { Free, FromCartan, Averaged };

enum class CartanSide { Negative, Positive };

/// The braiding matrix (q_ij) of a diagonal braiding. All entries nonzero.
class BraidingMatrix {
public:
    BraidingMatrix(std::vector<std::vector<Scalar>> entries, MatrixOrigin origin = MatrixOrigin::Free);

    /// Braiding with entries q^(c_ij) (side Negative, the generator side of the
    /// relation computations) or q^(-c_ij) (side Positive); exact for
    /// half-integer entries of averaged matrices.
    static BraidingMatrix from_cartan(const RationalMatrix& c, CartanSide side,
                                      MatrixOrigin origin = MatrixOrigin::FromCartan);
    static BraidingMatrix from_cartan(const CartanMatrix& c, CartanSide side);

    /// Entries t^(e_ij) from doubled q-exponents (e = t-exponent).
    static BraidingMatrix from_t_exponents(const std::vector<std::vector<long>>& exps);

    int size() const { return static_cast<int>(entries_.size()); }
    const Scalar& at(int i, int j) const { return entries_[i][j]; }

    bool is_symmetric() const { return symmetric_; }
    MatrixOrigin origin() const { return origin_; }

    /// t-exponent of q_ij when every entry is a pure t power; throws
    /// NonMonomialBraiding otherwise.
    long t_exponent(int i, int j) const;
    bool is_monomial() const;

private:
    std::vector<std::vector<Scalar>> entries_;
    MatrixOrigin origin_;
    bool symmetric_;
};

} // namespace nichols
