// Acceptance suite: one pass/fail line per criterion, exact assertions.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "nichols.h"
#include "nichols/degsearch.hpp"
#include "nichols/identities.hpp"
#include "nichols/json_io.hpp"
#include "nichols/specialize.hpp"

using namespace nichols;
using nlohmann::json;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s  %2d  %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(), seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

const char* example_cartan_json = R"({"cartan": [[2,-2,-1],[-1,2,-1],[-3,-1,2]]})";

BraidingMatrix example_braiding() {
    return BraidingMatrix::from_t_exponents({{4, -4, -2}, {-2, 4, -2}, {-6, -2, 4}});
}

BraidingMatrix a2_braiding() {
    return BraidingMatrix::from_t_exponents({{4, -2}, {-2, 4}});
}

TensorElement golden_relation() {
    return TensorElement::monomial({3, 3, 3, 1}) -
           (Scalar::q_power(-3) + Scalar::q_power(-1) + Scalar::q_power(1)) *
               TensorElement::monomial({3, 3, 1, 3}) +
           (Scalar::q_power(-4) + Scalar::q_power(-2) + Scalar(1)) *
               TensorElement::monomial({3, 1, 3, 3}) -
           Scalar::q_power(-3) * TensorElement::monomial({1, 3, 3, 3});
}

ClassicalElement classical_golden() {
    ClassicalElement u;
    u.add_term({{3, 3, 3, 1}, {}}, 1);
    u.add_term({{3, 3, 1, 3}, {}}, -3);
    u.add_term({{3, 1, 3, 3}, {}}, 3);
    u.add_term({{1, 3, 3, 3}, {}}, -1);
    return u;
}

int height_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

} // namespace

int main() {
    std::printf("acceptance suite\n");

    criterion(1, "golden counterexample block at degree 4", 5.0, [&](std::string& detail) {
        // the library path
        BraidingMatrix A = example_braiding();
        RelationSet rel = prerelations(A, 4, Side::Right);
        const BlockRelations* target = nullptr;
        for (const auto& b : rel.blocks)
            if (b.md == Multidegree{1, 0, 3}) target = &b;
        if (!target || target->span.dim() != 1 || target->relations.size() != 1) {
            detail = "block (1,0,3) missing or not one-dimensional";
            return false;
        }
        TensorElement golden = golden_relation();
        auto blk = block(3, {1, 0, 3});
        if (!(target->span == span_of(blk->dim(), {blk->coordinates(golden)}))) {
            detail = "span differs from the expected relation";
            return false;
        }
        if (target->relations[0] != golden) {
            detail = "normalized representative differs";
            return false;
        }
        // the command path emits the same table
        nq_matrix* m = nullptr;
        if (nq_matrix_parse(example_cartan_json, 0, &m) != NQ_OK) {
            detail = "matrix parse failed";
            return false;
        }
        char* out = nullptr;
        nq_status s = nq_relations(m, 4, "right", "prerelations", 0, &out);
        bool cli_ok = false;
        if (s == NQ_OK) {
            json table = json::parse(out);
            for (const auto& b : table["blocks"])
                if (b["multidegree"] == json::array({1, 0, 3}))
                    cli_ok = tensor_from_json(b["relations"][0]) == golden;
            nq_string_free(out);
        }
        nq_matrix_free(m);
        if (!cli_ok) detail = "command output missing the golden block";
        return cli_ok;
    });

    criterion(2, "specialization chain and radical witness", 1.0, [&](std::string& detail) {
        RationalMatrix C{CartanMatrix({{2, -2, -1}, {-1, 2, -1}, {-3, -1, 2}})};
        ClassicalElement u = specialize_element(golden_relation());
        if (u != classical_golden()) {
            detail = "specialized element differs";
            return false;
        }
        ClassicalElement step1 = ad_e(C, 3, u);
        ClassicalElement expect1;
        expect1.add_term({{3, 3, 1}, {}}, 3);
        expect1.add_term({{3, 1, 3}, {}}, -6);
        expect1.add_term({{1, 3, 3}, {}}, 3);
        if (step1 != expect1) {
            detail = "first adjoint step differs";
            return false;
        }
        ClassicalElement step2 = ad_e(C, 3, step1);
        ClassicalElement expect2;
        expect2.add_term({{3, 1}, {}}, 12);
        expect2.add_term({{1, 3}, {}}, -12);
        if (step2 != expect2) {
            detail = "second adjoint step differs";
            return false;
        }
        ClassicalElement step3 = ad_e(C, 3, step2);
        ClassicalElement expect3;
        expect3.add_term({{1}, {}}, 36);
        if (step3 != expect3) {
            detail = "third adjoint step differs";
            return false;
        }
        WitnessResult w = r_minus_witness(C, u, 3);
        if (w.verdict != WitnessVerdict::NotInRadical || w.chain != std::vector<int>{3, 3, 3}) {
            detail = "witness verdict or chain differs";
            return false;
        }
        return true;
    });

    criterion(3, "braid identity suite, n <= 5, 20 random braidings", 120.0, [&](std::string& detail) {
        std::mt19937 rng(601);
        for (int trial = 0; trial < 20; ++trial) {
            int N = 1 + trial % 3;
            BraidingMatrix A = random_monomial_braiding(rng, N, 4);
            for (int n = 2; n <= 5; ++n) {
                IdentityReport r = braid_identity_suite(A, n);
                if (!r.ok()) {
                    detail = "trial " + std::to_string(trial) + ": " + r.failures[0].identity;
                    return false;
                }
            }
        }
        return true;
    });

    criterion(4, "differential duality and kernels, n <= 5, 10 braidings", 60.0, [&](std::string& detail) {
        std::mt19937 rng(701);
        for (int trial = 0; trial < 10; ++trial) {
            int N = 1 + trial % 3;
            BraidingMatrix A = random_monomial_braiding(rng, N, 4);
            for (int n = 2; n <= 5; ++n) {
                IdentityReport r = calculus_identity_suite(A, n, rng);
                if (!r.ok()) {
                    detail = "trial " + std::to_string(trial) + ": " + r.failures[0].identity;
                    return false;
                }
            }
        }
        return true;
    });

    criterion(5, "degree-2 completeness on 50 random braidings", 30.0, [&](std::string& detail) {
        std::mt19937 rng(801);
        BraidOperator s2 = make_operator(OperatorName::SnDirect, 2);
        for (int trial = 0; trial < 50; ++trial) {
            int N = 1 + trial % 3;
            BraidingMatrix A = random_monomial_braiding(rng, N, 3);
            if (trial % 5 == 0) {
                // plant a -1 diagonal to cover the square relation
                std::vector<std::vector<Scalar>> entries(N, std::vector<Scalar>(N, Scalar(1)));
                for (int i = 0; i < N; ++i)
                    for (int j = 0; j < N; ++j) entries[i][j] = A.at(i, j);
                entries[0][0] = Scalar(-1);
                A = BraidingMatrix(std::move(entries));
            }
            RelationSet set = degree2_relations(A);
            std::map<Multidegree, Subspace> by_md;
            for (const auto& b : set.blocks) by_md[b.md] = b.span;
            for (const auto& md : multidegrees_of(N, 2)) {
                auto blk = block(N, md);
                Subspace ker_s2 = kernel(operator_matrix(A, s2, *blk));
                Subspace listed = by_md.count(md) ? by_md[md] : Subspace(blk->dim());
                if (!(listed == ker_s2)) {
                    detail = "trial " + std::to_string(trial) + ": kernel mismatch";
                    return false;
                }
            }
        }
        return true;
    });

    criterion(6, "A2 Serre recovery at degree 3", 10.0, [&](std::string& detail) {
        BraidingMatrix A = a2_braiding();
        RationalMatrix C{CartanMatrix({{2, -1}, {-1, 2}})};
        RelationSet rel = prerelations(A, 3, Side::Right);
        std::map<Multidegree, const BlockRelations*> by_md;
        for (const auto& b : rel.blocks) by_md[b.md] = &b;
        if (by_md.size() != 2 || !by_md.count({2, 1}) || !by_md.count({1, 2})) {
            detail = "expected exactly the blocks (2,1) and (1,2)";
            return false;
        }
        for (const auto& [md, b] : by_md) {
            if (b->span.dim() != 1 || b->relations.size() != 1) {
                detail = "block is not one-dimensional";
                return false;
            }
            // brute-force kernel agreement
            auto blk = block(2, md);
            Subspace kt = kernel(operator_matrix(A, make_operator(OperatorName::Tn, 3), *blk));
            if (!(kt == b->span)) {
                detail = "span differs from the brute-force kernel";
                return false;
            }
            ClassicalElement u = specialize_element(b->relations[0]);
            if (!serre_ideal_member(C, u, 3)) {
                detail = "specialization misses the Serre ideal";
                return false;
            }
        }
        return true;
    });

    criterion(7, "twist pruning soundness, n <= 5", 90.0, [&](std::string& detail) {
        std::vector<BraidingMatrix> matrices{example_braiding(), a2_braiding()};
        std::mt19937 rng(901);
        for (int trial = 0; trial < 4; ++trial)
            matrices.push_back(random_monomial_braiding(rng, 1 + trial % 3, 3));
        for (const auto& A : matrices) {
            ThetaForm tf{A};
            auto zb = zero_blocks(tf, 5);
            std::set<Multidegree> zb_set(zb.begin(), zb.end());
            for (int n = 2; n <= 5; ++n) {
                for (const auto& md : multidegrees_of(A.size(), n)) {
                    bool scalar_fixed = theta_scalar(A, md) == Scalar(1);
                    if (scalar_fixed != (zb_set.count(md) > 0)) {
                        detail = "zero_blocks disagrees with theta_scalar";
                        return false;
                    }
                }
                RelationSet rel = prerelations(A, n, Side::Right);
                for (const auto& b : rel.blocks)
                    if (theta_scalar(A, b.md) != Scalar(1)) {
                        detail = "pre-relation on a non-fixed block";
                        return false;
                    }
            }
        }
        return true;
    });

    criterion(8, "Garside balance of spans, n <= 4", 120.0, [&](std::string& detail) {
        std::vector<BraidingMatrix> matrices{example_braiding(), a2_braiding()};
        std::mt19937 rng(1001);
        for (int trial = 0; trial < 3; ++trial)
            matrices.push_back(random_monomial_braiding(rng, 1 + trial % 2, 3));
        for (const auto& A : matrices)
            for (int n = 2; n <= 4; ++n) {
                if (!balance_check(A, n, RelationKind::Prerelation).balanced) {
                    detail = "pre-relation spans unbalanced at n=" + std::to_string(n);
                    return false;
                }
                if (!balance_check(A, n, RelationKind::Constant).balanced) {
                    detail = "constant spans unbalanced at n=" + std::to_string(n);
                    return false;
                }
            }
        return true;
    });

    criterion(9, "bar laws on symmetric matrices, n <= 4", 60.0, [&](std::string& detail) {
        std::mt19937 rng(1101);
        std::vector<BraidingMatrix> matrices;
        matrices.push_back(BraidingMatrix::from_cartan(
            average(CartanMatrix({{2, -2, -1}, {-1, 2, -1}, {-3, -1, 2}})), CartanSide::Negative,
            MatrixOrigin::Averaged));
        for (int trial = 0; trial < 4; ++trial)
            matrices.push_back(random_symmetric_braiding(rng, 1 + trial % 2, 3));
        for (const auto& S : matrices) {
            if (!S.is_symmetric()) {
                detail = "matrix not symmetric";
                return false;
            }
            for (int n = 2; n <= 4; ++n) {
                IdentityReport r = bar_identity_suite(S, n, rng);
                if (!r.ok()) {
                    detail = r.failures[0].identity;
                    return false;
                }
            }
        }
        return true;
    });

    criterion(10, "finiteness behavior of the twist form", 120.0, [&](std::string& detail) {
        // A2: bounded, and pre-relations only at heights of integral points
        BraidingMatrix A = a2_braiding();
        EnumerationResult e = enumerate_E(QuadraticForm::from_theta(ThetaForm{A}), 6);
        if (!e.bounded) {
            detail = "A2 form not recognized semi-positive";
            return false;
        }
        std::set<int> allowed_heights;
        for (const auto& p : e.points)
            if (height_of(p) >= 2) allowed_heights.insert(height_of(p));
        for (int n = 2; n <= 6; ++n) {
            RelationSet rel = prerelations(A, n, Side::Right);
            if (!rel.blocks.empty() && !allowed_heights.count(n)) {
                detail = "pre-relations at height " + std::to_string(n) + " outside the point set";
                return false;
            }
        }
        // the counterexample matrix: indefinite, with the golden block listed
        EnumerationResult ex = enumerate_E(QuadraticForm::from_theta(ThetaForm{example_braiding()}), 4);
        if (ex.bounded) {
            detail = "example form wrongly semi-positive";
            return false;
        }
        bool has_golden = false;
        for (const auto& p : ex.points)
            if (p == std::vector<int>{1, 0, 3}) has_golden = true;
        if (!has_golden) detail = "partial list misses (1,0,3)";
        return has_golden;
    });

    criterion(11, "generated ideal slices equal symmetrizer kernels, n <= 4", 300.0,
              [&](std::string& detail) {
        std::vector<BraidingMatrix> matrices{a2_braiding(),
                                             BraidingMatrix::from_t_exponents({{2, 2}, {-2, 2}})};
        std::mt19937 rng(1201);
        matrices.push_back(random_monomial_braiding(rng, 2, 2));
        matrices.push_back(random_monomial_braiding(rng, 2, 3));
        matrices.push_back(random_monomial_braiding(rng, 3, 2));
        for (const auto& A : matrices) {
            auto pre = relations_up_to(A, 4, Side::Right, RelationKind::Prerelation);
            auto con = relations_up_to(A, 4, Side::Right, RelationKind::Constant);
            for (const auto& gens : {pre, con}) {
                for (int n = 2; n <= 4; ++n) {
                    auto comp = ideal_component(A, gens, n);
                    BraidOperator sn = make_operator(OperatorName::SnDirect, n);
                    for (const auto& md : multidegrees_of(A.size(), n)) {
                        auto blk = block(A.size(), md);
                        Subspace ker_sn = kernel(operator_matrix(A, sn, *blk));
                        Subspace comp_md = comp.count(md) ? comp.at(md) : Subspace(blk->dim());
                        if (!(comp_md == ker_sn)) {
                            detail = "slice mismatch at degree " + std::to_string(n);
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    });

    std::printf("%d criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
