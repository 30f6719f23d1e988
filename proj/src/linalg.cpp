#include "nichols/linalg.hpp"

namespace nichols {

ScalarMatrix::ScalarMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Scalar(0)) {}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DegreeMismatch("vector size mismatch");
    std::vector<Scalar> r(rows_, Scalar(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

namespace {

// pivot preference: smallest polynomial size keeps intermediate fractions flat
long entry_complexity(const Scalar& s) {
    return static_cast<long>(s.num().term_count() + s.den().term_count()) +
           (s.num().high() - s.num().low()) + s.den().high();
}

} // namespace

std::vector<int> ScalarMatrix::rref() {
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        long best = 0;
        for (int r = row; r < rows_; ++r) {
            if (at(r, col).is_zero()) continue;
            long c = entry_complexity(at(r, col));
            if (pivot < 0 || c < best) {
                pivot = r;
                best = c;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(row, j));
        Scalar inv = at(row, col).inverse();
        for (int j = col; j < cols_; ++j) at(row, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero()) continue;
            Scalar factor = at(r, col);
            for (int j = col; j < cols_; ++j) at(r, j) -= factor * at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

int ScalarMatrix::rank() const {
    ScalarMatrix copy = *this;
    return static_cast<int>(copy.rref().size());
}

ScalarMatrix operator_matrix(const BraidingMatrix& A, const BraidOperator& op, const Block& b) {
    if (op.strand_count() != b.degree())
        throw DegreeMismatch("operator strand count does not match block degree");
    ScalarMatrix M(b.dim(), b.dim());
    for (int j = 0; j < b.dim(); ++j) {
        TensorElement image = apply_operator(A, op, TensorElement::monomial(b.basis()[j]));
        auto coords = b.coordinates(image);
        for (int i = 0; i < b.dim(); ++i) M.at(i, j) = coords[i];
    }
    return M;
}

Subspace::Subspace(int ambient_dim, std::vector<std::vector<Scalar>> vectors)
    : ambient_dim_(ambient_dim) {
    ScalarMatrix M(static_cast<int>(vectors.size()), ambient_dim);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<int>(vectors[i].size()) != ambient_dim)
            throw InputError("vector dimension mismatch");
        for (int j = 0; j < ambient_dim; ++j) M.at(static_cast<int>(i), j) = vectors[i][j];
    }
    auto pivots = M.rref();
    for (size_t r = 0; r < pivots.size(); ++r) {
        std::vector<Scalar> row(ambient_dim, Scalar(0));
        for (int j = 0; j < ambient_dim; ++j) row[j] = M.at(static_cast<int>(r), j);
        basis_.push_back(std::move(row));
    }
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    // reduce v against the RREF basis rows
    std::vector<Scalar> rem = v;
    for (const auto& row : basis_) {
        int pivot = -1;
        for (int j = 0; j < ambient_dim_; ++j)
            if (!row[j].is_zero()) {
                pivot = j;
                break;
            }
        if (pivot < 0) continue;
        if (rem[pivot].is_zero()) continue;
        Scalar factor = rem[pivot];
        for (int j = 0; j < ambient_dim_; ++j) rem[j] -= factor * row[j];
    }
    for (const auto& c : rem)
        if (!c.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
}

Subspace span_of(int ambient_dim, const std::vector<std::vector<Scalar>>& vectors) {
    return Subspace(ambient_dim, vectors);
}

Subspace kernel(const ScalarMatrix& M) {
    ScalarMatrix R = M;
    auto pivots = R.rref();
    std::vector<bool> is_pivot(M.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> vectors;
    for (int free_col = 0; free_col < M.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(M.cols(), Scalar(0));
        v[free_col] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -R.at(static_cast<int>(r), free_col);
        vectors.push_back(std::move(v));
    }
    return Subspace(M.cols(), vectors);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw InputError("ambient dimensions differ");
    const int du = u.dim(), dw = w.dim();
    if (du == 0 || dw == 0) return Subspace(u.ambient_dim());
    // null space of [U^T | -W^T]: a combination of u-rows equal to one of
    // w-rows is exactly an intersection vector
    ScalarMatrix M(u.ambient_dim(), du + dw);
    for (int j = 0; j < du; ++j)
        for (int i = 0; i < u.ambient_dim(); ++i) M.at(i, j) = u.basis()[j][i];
    for (int j = 0; j < dw; ++j)
        for (int i = 0; i < u.ambient_dim(); ++i) M.at(i, du + j) = -w.basis()[j][i];
    Subspace null = kernel(M);
    std::vector<std::vector<Scalar>> vectors;
    for (const auto& nv : null.basis()) {
        std::vector<Scalar> v(u.ambient_dim(), Scalar(0));
        for (int j = 0; j < du; ++j)
            for (int i = 0; i < u.ambient_dim(); ++i) v[i] += nv[j] * u.basis()[j][i];
        vectors.push_back(std::move(v));
    }
    return Subspace(u.ambient_dim(), vectors);
}

Subspace complement_in(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw InputError("ambient dimensions differ");
    if (!u.contains(w)) throw NotSubspace("complement_in: second argument not contained in first");
    std::vector<std::vector<Scalar>> current = w.basis();
    std::vector<std::vector<Scalar>> added;
    Subspace span = w;
    for (const auto& v : u.basis()) {
        if (span.contains(v)) continue;
        added.push_back(v);
        current.push_back(v);
        span = Subspace(u.ambient_dim(), current);
    }
    return Subspace(u.ambient_dim(), added);
}

Subspace join(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw InputError("ambient dimensions differ");
    std::vector<std::vector<Scalar>> vectors = u.basis();
    for (const auto& v : w.basis()) vectors.push_back(v);
    return Subspace(u.ambient_dim(), vectors);
}

} // namespace nichols
