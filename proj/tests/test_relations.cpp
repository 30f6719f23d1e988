#include <doctest.h>

#include <random>

#include "nichols/identities.hpp"
#include "nichols/relations.hpp"

using namespace nichols;

namespace {

BraidingMatrix example_braiding() {
    // q_ij = q^(c_ij) for C = [[2,-2,-1],[-1,2,-1],[-3,-1,2]]
    return BraidingMatrix::from_t_exponents({{4, -4, -2}, {-2, 4, -2}, {-6, -2, 4}});
}

BraidingMatrix a2_braiding() {
    // q_ij = q^(c_ij) for the A2 Cartan matrix
    return BraidingMatrix::from_t_exponents({{4, -2}, {-2, 4}});
}

TensorElement golden_degree4_relation() {
    return TensorElement::monomial({3, 3, 3, 1}) -
           (Scalar::q_power(-3) + Scalar::q_power(-1) + Scalar::q_power(1)) *
               TensorElement::monomial({3, 3, 1, 3}) +
           (Scalar::q_power(-4) + Scalar::q_power(-2) + Scalar(1)) *
               TensorElement::monomial({3, 1, 3, 3}) -
           Scalar::q_power(-3) * TensorElement::monomial({1, 3, 3, 3});
}

} // namespace

TEST_CASE("degree-2 relations match the twist condition") {
    // q_12 q_21 = 1 forces exactly one relation
    BraidingMatrix A = BraidingMatrix::from_t_exponents({{2, 2}, {-2, 2}});
    RelationSet set = degree2_relations(A);
    REQUIRE(set.blocks.size() == 1);
    CHECK(set.blocks[0].md == Multidegree{1, 1});
    REQUIRE(set.blocks[0].relations.size() == 1);
    CHECK(set.blocks[0].relations[0] ==
          TensorElement::monomial({1, 2}) - A.at(0, 1) * TensorElement::monomial({2, 1}));

    // no pair with q_st q_ts = 1: empty
    BraidingMatrix B = BraidingMatrix::from_t_exponents({{2, 2}, {2, 2}});
    CHECK(degree2_relations(B).blocks.empty());

    // diagonal case q_ss = -1 emits the square
    BraidingMatrix C(std::vector<std::vector<Scalar>>{{Scalar(-1)}});
    RelationSet sq = degree2_relations(C);
    REQUIRE(sq.blocks.size() == 1);
    CHECK(sq.blocks[0].relations[0] == TensorElement::monomial({1, 1}));

    // q_ss = +1 satisfies q_ss^2 = 1 but the symmetrizer kernel is trivial
    BraidingMatrix D(std::vector<std::vector<Scalar>>{{Scalar(1)}});
    CHECK(degree2_relations(D).blocks.empty());
}

TEST_CASE("degree-2 relations equal the full symmetrizer kernel") {
    std::mt19937 rng(51);
    for (int trial = 0; trial < 25; ++trial) {
        int N = 1 + static_cast<int>(rng() % 3);
        BraidingMatrix A = random_monomial_braiding(rng, N, 2);
        RelationSet set = degree2_relations(A);
        BraidOperator s2 = make_operator(OperatorName::SnDirect, 2);
        for (const auto& md : multidegrees_of(N, 2)) {
            auto blk = block(N, md);
            Subspace ker_s2 = kernel(operator_matrix(A, s2, *blk));
            Subspace listed(blk->dim());
            for (const auto& b : set.blocks)
                if (b.md == md) listed = b.span;
            CHECK(listed == ker_s2);
        }
    }
}

TEST_CASE("constants: single letter with generic diagonal has none") {
    BraidingMatrix A = BraidingMatrix::from_t_exponents({{-4}});
    for (int n = 2; n <= 5; ++n) {
        CHECK(constants(A, n, Side::Right).blocks.empty());
        CHECK(constants(A, n, Side::Left).blocks.empty());
    }
}

TEST_CASE("constants at degree 2 coincide with the degree-2 relations") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        int N = 1 + static_cast<int>(rng() % 2);
        BraidingMatrix A = random_monomial_braiding(rng, N, 2);
        RelationSet deg2 = degree2_relations(A);
        RelationSet con = constants(A, 2, Side::Right);
        REQUIRE(deg2.blocks.size() == con.blocks.size());
        for (size_t i = 0; i < con.blocks.size(); ++i) {
            CHECK(deg2.blocks[i].md == con.blocks[i].md);
            CHECK(deg2.blocks[i].span == con.blocks[i].span);
        }
    }
}

TEST_CASE("quantum Serre relation appears as an A2 constant in block (2,1)") {
    BraidingMatrix A = a2_braiding();
    RelationSet con = constants(A, 3, Side::Right);
    bool found = false;
    for (const auto& b : con.blocks)
        if (b.md == Multidegree{2, 1}) {
            found = true;
            CHECK(b.span.dim() == 1);
        }
    CHECK(found);
}

TEST_CASE("pre-relations reproduce the degree-4 counterexample block") {
    BraidingMatrix A = example_braiding();
    RelationSet rel = prerelations(A, 4, Side::Right);
    const BlockRelations* target = nullptr;
    for (const auto& b : rel.blocks)
        if (b.md == Multidegree{1, 0, 3}) target = &b;
    REQUIRE(target != nullptr);
    REQUIRE(target->span.dim() == 1);
    REQUIRE(target->relations.size() == 1);
    CHECK(target->relations[0] == golden_degree4_relation());
    REQUIRE(target->witnesses.size() == 1);
    // the witness is annihilated by T_4' but not by the cutoff X_{2,4}
    CHECK(apply_operator(A, make_operator(OperatorName::TnPrime, 4), target->witnesses[0]).is_zero());
    CHECK(!apply_operator(A, make_operator(OperatorName::Xmn, 4, 2), target->witnesses[0]).is_zero());
}

TEST_CASE("pre-relations at degree 2 span the degree-2 relations") {
    std::mt19937 rng(57);
    for (int trial = 0; trial < 10; ++trial) {
        int N = 1 + static_cast<int>(rng() % 2);
        BraidingMatrix A = random_monomial_braiding(rng, N, 2);
        RelationSet pre = prerelations(A, 2, Side::Right);
        RelationSet deg2 = degree2_relations(A);
        REQUIRE(pre.blocks.size() == deg2.blocks.size());
        for (size_t i = 0; i < pre.blocks.size(); ++i) CHECK(pre.blocks[i].span == deg2.blocks[i].span);
        // left pre-relations agree with right ones at degree 2
        RelationSet left = prerelations(A, 2, Side::Left);
        REQUIRE(left.blocks.size() == pre.blocks.size());
        for (size_t i = 0; i < left.blocks.size(); ++i) CHECK(left.blocks[i].span == pre.blocks[i].span);
    }
}

TEST_CASE("pre-relations only live on twist-fixed blocks and inside constants") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 6; ++trial) {
        int N = 1 + static_cast<int>(rng() % 2);
        BraidingMatrix A = random_monomial_braiding(rng, N, 2);
        for (int n = 2; n <= 4; ++n) {
            RelationSet pre = prerelations(A, n, Side::Right);
            RelationSet con = constants(A, n, Side::Right);
            std::map<Multidegree, Subspace> con_by_md;
            for (const auto& b : con.blocks) con_by_md[b.md] = b.span;
            for (const auto& b : pre.blocks) {
                CHECK(theta_scalar(A, b.md) == Scalar(1));
                REQUIRE(con_by_md.count(b.md));
                CHECK(con_by_md[b.md].contains(b.span));
            }
        }
    }
}

TEST_CASE("pre-relation span is stable under witness order reversal") {
    BraidingMatrix A = example_braiding();
    RelationSet rel = prerelations(A, 4, Side::Right);
    REQUIRE(!rel.blocks.empty());
    for (const auto& b : rel.blocks) {
        auto blk = block(3, b.md);
        BraidOperator pn = make_operator(OperatorName::Pn, 4);
        std::vector<std::vector<Scalar>> images;
        for (auto it = b.witnesses.rbegin(); it != b.witnesses.rend(); ++it)
            images.push_back(blk->coordinates(apply_operator(A, pn, *it)));
        CHECK(span_of(blk->dim(), images) == b.span);
    }
}

TEST_CASE("garside balance at small degrees") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 4; ++trial) {
        int N = 1 + static_cast<int>(rng() % 2);
        BraidingMatrix A = random_monomial_braiding(rng, N, 2);
        for (int n = 2; n <= 4; ++n) {
            BalanceReport pre = balance_check(A, n, RelationKind::Prerelation);
            INFO("prerelation balance failed at n=" << n);
            CHECK(pre.balanced);
            BalanceReport con = balance_check(A, n, RelationKind::Constant);
            INFO("constant balance failed at n=" << n);
            CHECK(con.balanced);
        }
    }
    // the example matrix balances too
    CHECK(balance_check(example_braiding(), 4, RelationKind::Prerelation).balanced);
}

TEST_CASE("graded dimensions") {
    // a single letter with generic diagonal is a polynomial ring: dimension 1 forever
    BraidingMatrix A = BraidingMatrix::from_t_exponents({{-4}});
    auto dims = nichols_dims(A, 5);
    REQUIRE(dims.size() == 6);
    for (const auto& g : dims) CHECK(g.total == 1);

    // one degree-2 relation among the four words when q_12 q_21 = 1
    BraidingMatrix B = BraidingMatrix::from_t_exponents({{2, 2}, {-2, 2}});
    auto dims_b = nichols_dims(B, 2);
    CHECK(dims_b[0].total == 1);
    CHECK(dims_b[1].total == 2);
    CHECK(dims_b[2].total == 3);
}

TEST_CASE("generated ideal slices equal the symmetrizer kernels") {
    BraidingMatrix A = a2_braiding();
    auto pre = relations_up_to(A, 4, Side::Right, RelationKind::Prerelation);
    auto con = relations_up_to(A, 4, Side::Right, RelationKind::Constant);
    for (const auto& gens : {pre, con}) {
        for (int n = 2; n <= 4; ++n) {
            auto comp = ideal_component(A, gens, n);
            BraidOperator sn = make_operator(OperatorName::SnDirect, n);
            for (const auto& md : multidegrees_of(2, n)) {
                auto blk = block(2, md);
                Subspace ker_sn = kernel(operator_matrix(A, sn, *blk));
                Subspace comp_md = comp.count(md) ? comp.at(md) : Subspace(blk->dim());
                CHECK(comp_md == ker_sn);
            }
        }
    }
}

TEST_CASE("differentials keep ideal elements inside the lower kernel") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 5; ++trial) {
        int N = 1 + static_cast<int>(rng() % 2);
        BraidingMatrix A = random_monomial_braiding(rng, N, 2);
        for (int m = 3; m <= 4; ++m) {
            BraidOperator sm = make_operator(OperatorName::SnDirect, m);
            BraidOperator sm1 = make_operator(OperatorName::SnDirect, m - 1);
            for (const auto& md : multidegrees_of(N, m)) {
                auto blk = block(N, md);
                Subspace ker_sm = kernel(operator_matrix(A, sm, *blk));
                for (const auto& v : ker_sm.basis()) {
                    TensorElement x = blk->from_coordinates(v);
                    for (int i = 1; i <= N; ++i) {
                        TensorElement d = dR(A, i, x);
                        if (d.is_zero()) continue;
                        Multidegree dm = multidegree(d.terms().begin()->first, N);
                        auto dblk = block(N, dm);
                        Subspace lower = kernel(operator_matrix(A, sm1, *dblk));
                        CHECK(lower.contains(dblk->coordinates(d)));
                    }
                }
            }
        }
    }
}

TEST_CASE("every emitted relation is annihilated by the full symmetrizer") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 4; ++trial) {
        int N = 1 + static_cast<int>(rng() % 2);
        BraidingMatrix A = random_monomial_braiding(rng, N, 2);
        for (int n = 2; n <= 4; ++n) {
            BraidOperator sn = make_operator(OperatorName::SnFactoredT, n);
            for (const auto& set : {prerelations(A, n, Side::Right), constants(A, n, Side::Right)})
                for (const auto& rel : set.all_relations())
                    CHECK(apply_operator(A, sn, rel).is_zero());
        }
    }
}

TEST_CASE("redundancy post-pass separates fresh from generated relations") {
    // the counterexample matrix: the degree-4 blocks cannot be reached by
    // padding the degree-3 relations, so nothing is redundant
    BraidingMatrix A = example_braiding();
    RelationSet deg4 = prerelations(A, 4, Side::Right);
    auto flags = redundancy_flags(A, deg4);
    REQUIRE(!flags.empty());
    for (const auto& [md, block_flags] : flags)
        for (bool f : block_flags) CHECK(!f);

    // exterior-type braiding: q_11 = q_22 = -1, q_12 q_21 = 1; the three
    // degree-2 relations already generate the whole degree-3 kernel, so the
    // degree-3 constants are all flagged
    std::vector<std::vector<Scalar>> entries{{Scalar(-1), Scalar::q_power(1)},
                                             {Scalar::q_power(-1), Scalar(-1)}};
    BraidingMatrix E(std::move(entries));
    RelationSet deg3 = constants(E, 3, Side::Right);
    REQUIRE(deg3.total_dim() > 0);
    auto eflags = redundancy_flags(E, deg3);
    bool saw = false;
    for (const auto& [md, block_flags] : eflags)
        for (bool f : block_flags) {
            saw = true;
            CHECK(f);
        }
    CHECK(saw);
}

TEST_CASE("relation sets reject bad degrees") {
    BraidingMatrix A = a2_braiding();
    CHECK_THROWS_AS(constants(A, 1, Side::Right), InputError);
    CHECK_THROWS_AS(prerelations(A, 0, Side::Left), InputError);
}
