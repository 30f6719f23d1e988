#include "nichols/degsearch.hpp"

#include <algorithm>
#include <cmath>

namespace nichols {

ThetaForm::ThetaForm(const BraidingMatrix& A) : n_(A.size()) {
    diag_.resize(n_);
    pair_.assign(n_, std::vector<long>(n_, 0));
    for (int k = 0; k < n_; ++k) diag_[k] = A.t_exponent(k, k);
    for (int p = 0; p < n_; ++p)
        for (int q = p + 1; q < n_; ++q) pair_[p][q] = A.t_exponent(p, q) + A.t_exponent(q, p);
}

long ThetaForm::pair_exponent(int p, int q) const {
    if (p == q) throw InputError("pair exponent needs p != q");
    return p < q ? pair_[p][q] : pair_[q][p];
}

long ThetaForm::theta_exponent(const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != n_) throw InputError("point size mismatch");
    long e = 0;
    for (int k = 0; k < n_; ++k) e += diag_[k] * static_cast<long>(x[k]) * (x[k] - 1);
    for (int p = 0; p < n_; ++p)
        for (int q = p + 1; q < n_; ++q) e += pair_[p][q] * static_cast<long>(x[p]) * x[q];
    return e;
}

std::vector<Multidegree> zero_blocks(const ThetaForm& tf, int height_max) {
    std::vector<Multidegree> result;
    for (int h = 2; h <= height_max; ++h)
        for (const auto& md : multidegrees_of(tf.size(), h))
            if (tf.theta_exponent(md) == 0) result.push_back(md);
    std::sort(result.begin(), result.end());
    return result;
}

QuadraticForm::QuadraticForm(int n, std::vector<std::vector<Rational>> b_upper)
    : n_(n), b_(std::move(b_upper)) {
    if (static_cast<int>(b_.size()) != n) throw InputError("coefficient table size mismatch");
}

QuadraticForm QuadraticForm::from_theta(const ThetaForm& tf) {
    const long d = tf.diagonal(0);
    if (d == 0) throw InputError("quadratic form needs a nonzero diagonal exponent");
    for (int k = 1; k < tf.size(); ++k)
        if (tf.diagonal(k) != d) throw InputError("quadratic form needs a uniform diagonal exponent");
    std::vector<std::vector<Rational>> b(tf.size(), std::vector<Rational>(tf.size(), 0));
    for (int p = 0; p < tf.size(); ++p)
        for (int q = p + 1; q < tf.size(); ++q) {
            Rational v(-2 * tf.pair_exponent(p, q), d);
            v.canonicalize();
            b[p][q] = v;
        }
    return QuadraticForm(tf.size(), std::move(b));
}

Rational QuadraticForm::b(int p, int q) const {
    if (p == q) return 0;
    return p < q ? b_[p][q] : b_[q][p];
}

Rational QuadraticForm::value(const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != n_) throw InputError("point size mismatch");
    Rational v = 0;
    for (int i = 0; i < n_; ++i) v += Rational(static_cast<long>(x[i]) * x[i]);
    for (int p = 0; p < n_; ++p)
        for (int q = p + 1; q < n_; ++q) v -= b_[p][q] * x[p] * x[q];
    return v;
}

bool QuadraticForm::is_semipositive() const {
    // pivoted symmetric elimination on the Gram matrix: at every stage a
    // negative diagonal entry, or a zero diagonal with a nonzero row, rules
    // out semi-positivity
    std::vector<std::vector<Rational>> g(n_, std::vector<Rational>(n_, 0));
    for (int i = 0; i < n_; ++i) g[i][i] = 1;
    for (int p = 0; p < n_; ++p)
        for (int q = p + 1; q < n_; ++q) {
            Rational half(-b_[p][q] / 2);
            half.canonicalize();
            g[p][q] = g[q][p] = half;
        }
    std::vector<bool> active(n_, true);
    for (int step = 0; step < n_; ++step) {
        int pivot = -1;
        for (int i = 0; i < n_; ++i)
            if (active[i] && g[i][i] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    if (active[i] && active[j] && g[i][j] != 0) return false;
            return true;
        }
        if (g[pivot][pivot] < 0) return false;
        active[pivot] = false;
        for (int i = 0; i < n_; ++i) {
            if (!active[i]) continue;
            for (int j = 0; j < n_; ++j) {
                if (!active[j]) continue;
                g[i][j] -= g[i][pivot] * g[pivot][j] / g[pivot][pivot];
            }
        }
    }
    return true;
}

long s_value(const std::vector<int>& x) {
    long s = 0;
    for (int v : x) s += static_cast<long>(v - 1) * (v - 1);
    return s;
}

EnumerationResult enumerate_E(const QuadraticForm& qf, int fallback_height, bool all_integers) {
    EnumerationResult result;
    const int n = qf.size();
    result.bounded = qf.is_semipositive();

    std::vector<int> x(n, 0);
    auto on_curve = [&](const std::vector<int>& pt) {
        return qf.value(pt) + Rational(s_value(pt)) == Rational(n);
    };

    if (result.bounded) {
        // S(x) <= n confines every coordinate to |x_i - 1| <= sqrt(n)
        int radius = static_cast<int>(std::sqrt(static_cast<double>(n))) + 1;
        while (static_cast<long>(radius) * radius > n) --radius;
        int lo = all_integers ? 1 - radius : std::max(0, 1 - radius);
        int hi = 1 + radius;
        auto sweep = [&](auto&& self, int pos) -> void {
            if (pos == n) {
                if (on_curve(x)) result.points.push_back(x);
                return;
            }
            for (int v = lo; v <= hi; ++v) {
                x[pos] = v;
                self(self, pos + 1);
            }
        };
        sweep(sweep, 0);
    } else {
        result.truncated_at = fallback_height;
        if (all_integers) {
            auto sweep = [&](auto&& self, int pos) -> void {
                if (pos == n) {
                    if (on_curve(x)) result.points.push_back(x);
                    return;
                }
                for (int v = -fallback_height; v <= fallback_height; ++v) {
                    x[pos] = v;
                    self(self, pos + 1);
                }
            };
            sweep(sweep, 0);
        } else {
            // bounded sweep over multidegrees by total height
            auto sweep = [&](auto&& self, int pos, int remaining) -> void {
                if (pos == n) {
                    if (on_curve(x)) result.points.push_back(x);
                    return;
                }
                for (int v = 0; v <= remaining; ++v) {
                    x[pos] = v;
                    self(self, pos + 1, remaining - v);
                }
            };
            sweep(sweep, 0, fallback_height);
        }
    }
    std::sort(result.points.begin(), result.points.end());
    result.points.erase(std::unique(result.points.begin(), result.points.end()), result.points.end());
    return result;
}

} // namespace nichols
