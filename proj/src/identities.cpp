#include "nichols/identities.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "nichols/parallel.hpp"

namespace nichols {

void IdentityReport::merge(const IdentityReport& o) {
    checks += o.checks;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

BraidingMatrix random_monomial_braiding(std::mt19937& rng, int n_letters, int range) {
    std::uniform_int_distribution<int> dist(-range, range);
    std::vector<std::vector<Scalar>> entries(n_letters);
    for (int i = 0; i < n_letters; ++i)
        for (int j = 0; j < n_letters; ++j) entries[i].push_back(Scalar::t_power(dist(rng)));
    return BraidingMatrix(std::move(entries));
}

BraidingMatrix random_symmetric_braiding(std::mt19937& rng, int n_letters, int range) {
    std::uniform_int_distribution<int> dist(-range, range);
    std::vector<std::vector<long>> exps(n_letters, std::vector<long>(n_letters, 0));
    for (int i = 0; i < n_letters; ++i)
        for (int j = i; j < n_letters; ++j) exps[i][j] = exps[j][i] = dist(rng);
    return BraidingMatrix::from_t_exponents(exps);
}

TensorElement random_element(std::mt19937& rng, int n_letters, int degree, int terms) {
    std::uniform_int_distribution<int> letter(1, n_letters);
    std::uniform_int_distribution<int> exp(-3, 3);
    std::uniform_int_distribution<int> numer(1, 5);
    TensorElement x;
    for (int t = 0; t < terms; ++t) {
        Word w;
        for (int p = 0; p < degree; ++p) w.push_back(letter(rng));
        x += TensorElement::monomial(w, Scalar(Rational(numer(rng))) * Scalar::t_power(exp(rng)));
    }
    return x;
}

namespace {

std::string md_str(const Multidegree& md) {
    std::string s = "(";
    for (size_t i = 0; i < md.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(md[i]);
    }
    return s + ")";
}

bool matrices_equal(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

BraidOperator power_op(int n, const std::vector<int>& base, int k) {
    BraidOperator op = BraidOperator::identity(n);
    BraidOperator b = BraidOperator::word(n, positive_word(base));
    for (int i = 0; i < k; ++i) op = op * b;
    return op;
}

std::vector<int> run_down(int from, int to) {
    std::vector<int> v;
    for (int i = from; i >= to; --i) v.push_back(i);
    return v;
}

} // namespace

IdentityReport braid_identity_suite(const BraidingMatrix& A, int n) {
    IdentityReport report;
    const int N = A.size();

    struct NamedPair {
        std::string label;
        BraidOperator lhs;
        BraidOperator rhs;
    };
    std::vector<NamedPair> pairs;

    BraidOperator garside = make_operator(OperatorName::Garside, n);
    BraidOperator theta = make_operator(OperatorName::Theta, n);
    for (int i = 1; i <= n - 1; ++i)
        pairs.push_back({"sigma_i*Garside = Garside*sigma_(n-i), i=" + std::to_string(i),
                         BraidOperator::word(n, positive_word({i})) * garside,
                         garside * BraidOperator::word(n, positive_word({n - i}))});

    std::vector<int> full_run = run_down(n - 1, 1);
    pairs.push_back({"Theta = (sigma_{n-1}...sigma_1)^n", theta, power_op(n, full_run, n)});
    std::vector<int> squared_run{n - 1};
    squared_run.insert(squared_run.end(), full_run.begin(), full_run.end());
    pairs.push_back({"Theta = (sigma_{n-1}^2 sigma_{n-2}...sigma_1)^(n-1)", theta, power_op(n, squared_run, n - 1)});

    BraidOperator telescoping_sum = BraidOperator::zero(n);
    for (int k = 0; k <= n - 2; ++k) telescoping_sum = telescoping_sum + power_op(n, squared_run, k);
    pairs.push_back({"telescoping sum gives 1 - Theta",
                     telescoping_sum * (BraidOperator::identity(n) -
                                        BraidOperator::word(n, positive_word(squared_run))),
                     BraidOperator::identity(n) - theta});

    BraidOperator sn = make_operator(OperatorName::SnDirect, n);
    pairs.push_back({"SnDirect = SnFactoredT", sn, make_operator(OperatorName::SnFactoredT, n)});
    pairs.push_back({"SnDirect = SnFactoredU", sn, make_operator(OperatorName::SnFactoredU, n)});

    BraidOperator tn = make_operator(OperatorName::Tn, n);
    BraidOperator un = make_operator(OperatorName::Un, n);
    BraidOperator pn = make_operator(OperatorName::Pn, n);
    BraidOperator qn = make_operator(OperatorName::Qn, n);
    pairs.push_back({"Tn*Pn = TnPrime", tn * pn, make_operator(OperatorName::TnPrime, n)});
    pairs.push_back({"Un*Qn = UnPrime", un * qn, make_operator(OperatorName::UnPrime, n)});
    pairs.push_back({"Garside*Tn = Un*Garside", garside * tn, un * garside});
    pairs.push_back({"Garside*Pn = Qn*Garside", garside * pn, qn * garside});

    auto mds = multidegrees_of(N, n);
    std::vector<IdentityReport> partial(mds.size());
    parallel_for(mds.size(), [&](size_t idx) {
        auto blk = block(N, mds[idx]);
        IdentityReport& local = partial[idx];
        for (const auto& p : pairs) {
            ++local.checks;
            if (!matrices_equal(operator_matrix(A, p.lhs, *blk), operator_matrix(A, p.rhs, *blk)))
                local.failures.push_back({p.label, "block " + md_str(mds[idx])});
        }
        // the full twist acts by the closed-form scalar
        ++local.checks;
        ScalarMatrix theta_m = operator_matrix(A, theta, *blk);
        Scalar expected = theta_scalar(A, mds[idx]);
        bool scalar_ok = true;
        for (int i = 0; i < blk->dim() && scalar_ok; ++i)
            for (int j = 0; j < blk->dim(); ++j) {
                const Scalar& want = i == j ? expected : Scalar(0);
                if (theta_m.at(i, j) != want) {
                    scalar_ok = false;
                    break;
                }
            }
        if (!scalar_ok)
            local.failures.push_back({"Theta acts by theta_scalar on the block", "block " + md_str(mds[idx])});
    });
    for (const auto& p : partial) report.merge(p);
    return report;
}

IdentityReport braid_relation_suite(const BraidingMatrix& A, int n, std::mt19937& rng) {
    IdentityReport report;
    const int N = A.size();
    TensorElement x = random_element(rng, N, n, 4);

    auto word_of = [&](const std::vector<int>& v) { return positive_word(v); };
    for (int i = 1; i <= n - 2; ++i) {
        ++report.checks;
        if (apply_word(A, word_of({i, i + 1, i}), x) != apply_word(A, word_of({i + 1, i, i + 1}), x))
            report.failures.push_back({"braid relation sigma_i sigma_(i+1) sigma_i", "i=" + std::to_string(i)});
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
            ++report.checks;
            if (apply_word(A, word_of({i, j}), x) != apply_word(A, word_of({j, i}), x))
                report.failures.push_back({"distant generators commute",
                                           "i=" + std::to_string(i) + " j=" + std::to_string(j)});
        }
    for (int i = 1; i <= n - 1; ++i) {
        ++report.checks;
        BraidWord w{{i, +1}, {i, -1}};
        if (apply_word(A, w, x) != x)
            report.failures.push_back({"sigma_i inverse", "i=" + std::to_string(i)});
    }

    // Matsumoto-Tits: every reduced word of a permutation acts identically
    std::vector<int> longest(n);
    for (int i = 0; i < n; ++i) longest[i] = n - i;
    std::vector<std::vector<int>> perms{longest};
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    perms.push_back(p);
    for (const auto& perm : perms) {
        auto words = all_reduced_words(perm);
        TensorElement reference = apply_word(A, matsumoto_lift(perm), x);
        for (const auto& w : words) {
            ++report.checks;
            if (apply_word(A, w, x) != reference) {
                report.failures.push_back({"reduced words act identically", "n=" + std::to_string(n)});
                break;
            }
        }
    }
    return report;
}

IdentityReport calculus_identity_suite(const BraidingMatrix& A, int n, std::mt19937& rng) {
    IdentityReport report;
    const int N = A.size();
    TensorElement x = random_element(rng, N, n, 4);

    // T_n x = sum_i dR_i(x) v_i and U_n x = sum_i v_i dL_i(x)
    {
        ++report.checks;
        TensorElement rhs;
        for (int i = 1; i <= N; ++i)
            rhs += dR(A, i, x).concat_mul(TensorElement::generator(i));
        if (apply_operator(A, make_operator(OperatorName::Tn, n), x) != rhs)
            report.failures.push_back({"T_n x = sum dR_i(x) v_i", "n=" + std::to_string(n)});
        ++report.checks;
        TensorElement lhs;
        for (int i = 1; i <= N; ++i)
            lhs += TensorElement::generator(i).concat_mul(dL(A, i, x));
        if (apply_operator(A, make_operator(OperatorName::Un, n), x) != lhs)
            report.failures.push_back({"U_n x = sum v_i dL_i(x)", "n=" + std::to_string(n)});
    }

    // dL_a dR_b = dR_b dL_a
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            ++report.checks;
            if (dL(A, a, dR(A, b, x)) != dR(A, b, dL(A, a, x)))
                report.failures.push_back({"dL_a dR_b = dR_b dL_a",
                                           "a=" + std::to_string(a) + " b=" + std::to_string(b)});
        }

    // recursion matches the coproduct definition
    for (int i = 1; i <= N; ++i) {
        ++report.checks;
        if (dR(A, i, x) != dR_via_coproduct(A, i, x))
            report.failures.push_back({"dR recursion = coproduct definition", "i=" + std::to_string(i)});
        ++report.checks;
        if (dL(A, i, x) != dL_via_coproduct(A, i, x))
            report.failures.push_back({"dL recursion = coproduct definition", "i=" + std::to_string(i)});
    }

    // both splittings of the product axiom evaluate the pairing identically;
    // the coproduct-axiom route joins them on symmetric braidings
    {
        int d = std::min(n, 4);
        TensorElement u = random_element(rng, N, d, 3);
        TensorElement v = random_element(rng, N, d, 3);
        ++report.checks;
        if (pairing(A, u, v) != pairing_front_peel(A, u, v))
            report.failures.push_back({"pairing splittings agree", "degree " + std::to_string(d)});
        if (A.is_symmetric()) {
            ++report.checks;
            if (pairing(A, u, v) != pairing_oracle(A, u, v))
                report.failures.push_back({"pairing axiom routes agree", "degree " + std::to_string(d)});
        }
    }

    // coassociativity via both double-coproduct expansions
    {
        ++report.checks;
        TensorElement y = random_element(rng, N, std::min(n, 4), 2);
        std::map<std::tuple<Word, Word, Word>, Scalar> lhs, rhs;
        const TensorSquareElement cp_y = coproduct(A, y);
        for (const auto& [wp, c] : cp_y.terms()) {
            const TensorSquareElement cp_first = coproduct(A, TensorElement::monomial(wp.first));
            for (const auto& [wq, d] : cp_first.terms()) {
                auto key = std::make_tuple(wq.first, wq.second, wp.second);
                auto val = c * d;
                auto it = lhs.find(key);
                if (it == lhs.end()) lhs[key] = val;
                else { it->second += val; if (it->second.is_zero()) lhs.erase(it); }
            }
            const TensorSquareElement cp_second = coproduct(A, TensorElement::monomial(wp.second));
            for (const auto& [wq, d] : cp_second.terms()) {
                auto key = std::make_tuple(wp.first, wq.first, wq.second);
                auto val = c * d;
                auto it = rhs.find(key);
                if (it == rhs.end()) rhs[key] = val;
                else { it->second += val; if (it->second.is_zero()) rhs.erase(it); }
            }
        }
        if (lhs != rhs)
            report.failures.push_back({"coassociativity", "n=" + std::to_string(n)});

        // counit laws: the (x, 1) and (1, x) components recover y
        ++report.checks;
        TensorElement left_part, right_part;
        for (const auto& [wp, c] : cp_y.terms()) {
            if (wp.second.empty()) left_part.add_term(wp.first, c);
            if (wp.first.empty()) right_part.add_term(wp.second, c);
        }
        if (left_part != y || right_part != y)
            report.failures.push_back({"counit laws", "n=" + std::to_string(n)});
    }

    // ker T_n agrees with the intersection of the dR kernels per block
    auto mds = multidegrees_of(N, n);
    std::vector<IdentityReport> partial(mds.size());
    parallel_for(mds.size(), [&](size_t idx) {
        const Multidegree& md = mds[idx];
        auto blk = block(N, md);
        Subspace kt = kernel(operator_matrix(A, make_operator(OperatorName::Tn, n), *blk));
        Subspace kd = kernel(ScalarMatrix(0, blk->dim()));
        for (int i = 1; i <= N; ++i) {
            if (md[i - 1] == 0) continue;
            Multidegree lowered = md;
            --lowered[i - 1];
            auto target = block(N, lowered);
            ScalarMatrix M(target->dim(), blk->dim());
            for (int j = 0; j < blk->dim(); ++j) {
                auto coords = target->coordinates(dR(A, i, TensorElement::monomial(blk->basis()[j])));
                for (int r = 0; r < target->dim(); ++r) M.at(r, j) = coords[r];
            }
            kd = intersect(kd, kernel(M));
        }
        ++partial[idx].checks;
        if (!(kt == kd))
            partial[idx].failures.push_back({"ker T_n = intersection of dR kernels", "block " + md_str(md)});
    });
    for (const auto& p : partial) report.merge(p);
    return report;
}

IdentityReport bar_identity_suite(const BraidingMatrix& A, int n, std::mt19937& rng) {
    IdentityReport report;
    if (!A.is_symmetric()) return report;
    const int N = A.size();
    TensorElement x = random_element(rng, N, n, 4);

    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            ++report.checks;
            TensorElement lhs = dR(A, j, dbarR(A, i, x));
            TensorElement rhs = A.at(i - 1, j - 1).inverse() * dbarR(A, i, dR(A, j, x));
            if (lhs != rhs)
                report.failures.push_back({"dR_j dbar_i = q_ij^{-1} dbar_i dR_j",
                                           "i=" + std::to_string(i) + " j=" + std::to_string(j)});
        }

    // Delta_n P_n v = (-1)^(n-1) bar(P_n bar(v)) on full-twist-fixed monomials
    BraidOperator garside = make_operator(OperatorName::Garside, n);
    BraidOperator pn = make_operator(OperatorName::Pn, n);
    Scalar sign((n - 1) % 2 == 0 ? 1 : -1);
    for (const auto& md : multidegrees_of(N, n)) {
        if (theta_scalar(A, md) != Scalar(1)) continue;
        auto blk = block(N, md);
        for (const auto& w : blk->basis()) {
            ++report.checks;
            TensorElement v = TensorElement::monomial(w);
            TensorElement lhs = apply_operator(A, garside, apply_operator(A, pn, v));
            TensorElement rhs = sign * bar_element(apply_operator(A, pn, bar_element(v)));
            if (lhs != rhs) {
                report.failures.push_back({"Delta P_n v = (-1)^(n-1) bar(P_n bar v)", "block " + md_str(md)});
                break;
            }
        }
    }
    return report;
}

IdentityReport run_identity_suites(int n_max, unsigned seed, int trials) {
    IdentityReport report;
    std::mt19937 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        int N = 1 + static_cast<int>(rng() % 3);
        BraidingMatrix A = random_monomial_braiding(rng, N);
        BraidingMatrix S = random_symmetric_braiding(rng, N);
        for (int n = 2; n <= n_max; ++n) {
            report.merge(braid_identity_suite(A, n));
            report.merge(braid_relation_suite(A, n, rng));
            report.merge(calculus_identity_suite(A, n, rng));
            report.merge(bar_identity_suite(S, n, rng));
        }
    }
    return report;
}

std::string report_summary(const IdentityReport& r) {
    std::ostringstream out;
    out << r.checks << " checks, " << r.failures.size() << " failures";
    for (const auto& f : r.failures) out << "\n  FAIL " << f.identity << " [" << f.context << "]";
    return out.str();
}

} // namespace nichols
