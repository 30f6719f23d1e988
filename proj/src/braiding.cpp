#include "nichols/braiding.hpp"

namespace nichols {

CartanMatrix::CartanMatrix(std::vector<std::vector<long>> entries) : entries_(std::move(entries)) {
    const size_t n = entries_.size();
    if (n == 0) throw InvalidCartan("empty matrix");
    for (size_t i = 0; i < n; ++i) {
        if (entries_[i].size() != n) throw InvalidCartan("matrix is not square");
        if (entries_[i][i] != 2) throw InvalidCartan("diagonal entry is not 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (entries_[i][j] > 0) throw InvalidCartan("positive off-diagonal entry");
            if ((entries_[i][j] == 0) != (entries_[j][i] == 0))
                throw InvalidCartan("c_ij = 0 requires c_ji = 0");
        }
    }
}

bool CartanMatrix::is_symmetric() const {
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (entries_[i][j] != entries_[j][i]) return false;
    return true;
}

RationalMatrix::RationalMatrix(std::vector<std::vector<Rational>> entries)
    : entries_(std::move(entries)) {
    for (const auto& row : entries_)
        if (row.size() != entries_.size()) throw InputError("matrix is not square");
}

RationalMatrix::RationalMatrix(const CartanMatrix& c) {
    entries_.resize(c.size());
    for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < c.size(); ++j) entries_[i].emplace_back(c.at(i, j));
}

bool RationalMatrix::is_symmetric() const {
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (entries_[i][j] != entries_[j][i]) return false;
    return true;
}

RationalMatrix average(const CartanMatrix& c) {
    std::vector<std::vector<Rational>> avg(c.size());
    for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < c.size(); ++j) {
            Rational v(c.at(i, j) + c.at(j, i), 2);
            v.canonicalize();
            avg[i].push_back(v);
        }
    return RationalMatrix(std::move(avg));
}

BraidingMatrix::BraidingMatrix(std::vector<std::vector<Scalar>> entries, MatrixOrigin origin)
    : entries_(std::move(entries)), origin_(origin) {
    const size_t n = entries_.size();
    if (n == 0) throw InputError("empty braiding matrix");
    for (const auto& row : entries_) {
        if (row.size() != n) throw InputError("braiding matrix is not square");
        for (const auto& e : row)
            if (e.is_zero()) throw InputError("braiding entry is zero");
    }
    symmetric_ = true;
    for (size_t i = 0; i < n && symmetric_; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (entries_[i][j] != entries_[j][i]) {
                symmetric_ = false;
                break;
            }
}

BraidingMatrix BraidingMatrix::from_cartan(const RationalMatrix& c, CartanSide side, MatrixOrigin origin) {
    std::vector<std::vector<Scalar>> entries(c.size());
    for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < c.size(); ++j) {
            // q^(c_ij) = t^(2 c_ij); averaged entries have denominator 2
            Rational doubled = 2 * c.at(i, j);
            if (doubled.get_den() != 1)
                throw InputError("matrix entry is not a half-integer");
            long e = static_cast<long>(doubled.get_num().get_si());
            if (side == CartanSide::Positive) e = -e;
            entries[i].push_back(Scalar::t_power(e));
        }
    return BraidingMatrix(std::move(entries), origin);
}

BraidingMatrix BraidingMatrix::from_cartan(const CartanMatrix& c, CartanSide side) {
    return from_cartan(RationalMatrix(c), side, MatrixOrigin::FromCartan);
}

BraidingMatrix BraidingMatrix::from_t_exponents(const std::vector<std::vector<long>>& exps) {
    std::vector<std::vector<Scalar>> entries(exps.size());
    for (size_t i = 0; i < exps.size(); ++i)
        for (long e : exps[i]) entries[i].push_back(Scalar::t_power(e));
    return BraidingMatrix(std::move(entries), MatrixOrigin::Free);
}

long BraidingMatrix::t_exponent(int i, int j) const {
    Rational coeff;
    long exp = 0;
    if (!entries_[i][j].is_monomial(&coeff, &exp) || coeff != 1) throw NonMonomialBraiding();
    return exp;
}

bool BraidingMatrix::is_monomial() const {
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            Rational coeff;
            long exp = 0;
            if (!entries_[i][j].is_monomial(&coeff, &exp) || coeff != 1) return false;
        }
    return true;
}

} // namespace nichols
