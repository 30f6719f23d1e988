#pragma once

#include <vector>

#include "nichols/block.hpp"
#include "nichols/braid.hpp"

namespace nichols {

/// Dense matrix over the Scalar field.
class ScalarMatrix {
public:
    ScalarMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<int> rref();

    int rank() const;

private:
    int rows_, cols_;
    std::vector<Scalar> entries_;
};

/// Column j holds the coordinates of op applied to the j-th basis word.
ScalarMatrix operator_matrix(const BraidingMatrix& A, const BraidOperator& op, const Block& b);

/// Subspace of a block, held as an RREF row basis (unique representative).
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient_dim) : ambient_dim_(ambient_dim) {}
    Subspace(int ambient_dim, std::vector<std::vector<Scalar>> vectors);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<Scalar>>& basis() const { return basis_; }

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;

private:
    int ambient_dim_ = 0;
    std::vector<std::vector<Scalar>> basis_; // RREF rows, pivots strictly increasing
};

/// RREF basis of the right null space of M.
Subspace kernel(const ScalarMatrix& M);

Subspace span_of(int ambient_dim, const std::vector<std::vector<Scalar>>& vectors);

Subspace intersect(const Subspace& u, const Subspace& w);

/// Basis vectors extending w's basis to u's, so that u = w (+) result.
/// Throws NotSubspace unless w is contained in u.
Subspace complement_in(const Subspace& u, const Subspace& w);

/// Sum of subspaces of a common ambient space.
Subspace join(const Subspace& u, const Subspace& w);

} // namespace nichols
