#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "nichols/degsearch.hpp"
#include "nichols/identities.hpp"

using namespace nichols;

namespace {

BraidingMatrix example_braiding() {
    return BraidingMatrix::from_t_exponents({{4, -4, -2}, {-2, 4, -2}, {-6, -2, 4}});
}

} // namespace

TEST_CASE("theta exponent closed form") {
    ThetaForm tf{example_braiding()};
    CHECK(tf.theta_exponent({1, 0, 3}) == 0);
    CHECK(tf.theta_exponent({1, 1, 0}) == -4 + -2);
    CHECK(tf.theta_exponent({1, 0, 0}) == 0);

    // all multiplicities in {0,1} with vanishing pair data stay at zero
    BraidingMatrix flat = BraidingMatrix::from_t_exponents({{4, 2}, {-2, 4}});
    ThetaForm tf2{flat};
    CHECK(tf2.theta_exponent({1, 1}) == 0);

    // single letter q_11 = q^-2: exponent -4 m(m-1)
    BraidingMatrix single = BraidingMatrix::from_t_exponents({{-4}});
    ThetaForm tf1{single};
    for (int m = 0; m <= 4; ++m) CHECK(tf1.theta_exponent({m}) == -4 * m * (m - 1));

    BraidingMatrix bad(std::vector<std::vector<Scalar>>{{Scalar(2)}});
    CHECK_THROWS_AS(ThetaForm{bad}, NonMonomialBraiding);
}

TEST_CASE("theta exponent agrees with the braid-module scalar") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 8; ++trial) {
        int N = 1 + static_cast<int>(rng() % 3);
        BraidingMatrix A = random_monomial_braiding(rng, N);
        ThetaForm tf{A};
        for (int n = 2; n <= 5; ++n)
            for (const auto& md : multidegrees_of(N, n))
                CHECK(theta_scalar(A, md) == Scalar::t_power(tf.theta_exponent(md)));
    }
}

TEST_CASE("zero blocks") {
    ThetaForm tf{example_braiding()};
    auto blocks = zero_blocks(tf, 4);
    CHECK(std::find(blocks.begin(), blocks.end(), Multidegree{1, 0, 3}) != blocks.end());
    CHECK(std::is_sorted(blocks.begin(), blocks.end()));

    // generic single letter: nothing from height 2 on
    BraidingMatrix single = BraidingMatrix::from_t_exponents({{-4}});
    CHECK(zero_blocks(ThetaForm{single}, 6).empty());

    // A2: the Serre blocks appear at height 3
    BraidingMatrix a2 = BraidingMatrix::from_t_exponents({{4, -2}, {-2, 4}});
    auto a2_blocks = zero_blocks(ThetaForm{a2}, 3);
    CHECK(std::find(a2_blocks.begin(), a2_blocks.end(), Multidegree{2, 1}) != a2_blocks.end());
    CHECK(std::find(a2_blocks.begin(), a2_blocks.end(), Multidegree{1, 2}) != a2_blocks.end());
}

TEST_CASE("semi-positive decisions") {
    // x^2 alone
    CHECK(QuadraticForm(1, {{}}).is_semipositive());
    {
        // b_12 = 2: (x - y)^2, degenerate but semi-positive
        std::vector<std::vector<Rational>> b(2, std::vector<Rational>(2, 0));
        b[0][1] = 2;
        CHECK(QuadraticForm(2, b).is_semipositive());
    }
    {
        // b_12 = 4: Q(1,1) = -2
        std::vector<std::vector<Rational>> b(2, std::vector<Rational>(2, 0));
        b[0][1] = 4;
        QuadraticForm qf(2, b);
        CHECK(!qf.is_semipositive());
        CHECK(qf.value({1, 1}) == Rational(-2));
    }
}

TEST_CASE("quadratic form from theta data") {
    // A2: b_12 = -(c_12 + c_21) = 2
    BraidingMatrix a2 = BraidingMatrix::from_t_exponents({{4, -2}, {-2, 4}});
    QuadraticForm qf = QuadraticForm::from_theta(ThetaForm{a2});
    CHECK(qf.b(0, 1) == Rational(2));
    CHECK(qf.is_semipositive());

    // the example matrix fails semi-positivity
    QuadraticForm ex = QuadraticForm::from_theta(ThetaForm{example_braiding()});
    CHECK(ex.b(0, 1) == Rational(3));
    CHECK(ex.b(0, 2) == Rational(4));
    CHECK(ex.b(1, 2) == Rational(2));
    CHECK(!ex.is_semipositive());

    // non-uniform diagonal has no quadratic-form view
    BraidingMatrix skew = BraidingMatrix::from_t_exponents({{4, 0}, {0, 2}});
    CHECK_THROWS_AS(QuadraticForm::from_theta(ThetaForm{skew}), InputError);
}

TEST_CASE("integral point enumeration") {
    // A2 is bounded with exactly the expected non-negative points
    BraidingMatrix a2 = BraidingMatrix::from_t_exponents({{4, -2}, {-2, 4}});
    EnumerationResult e = enumerate_E(QuadraticForm::from_theta(ThetaForm{a2}), 6);
    CHECK(e.bounded);
    CHECK(!e.truncated_at);
    std::vector<std::vector<int>> expected{{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 2}};
    CHECK(e.points == expected);

    // restriction to a height matches the exponent sweep
    ThetaForm tf{a2};
    for (int h = 2; h <= 4; ++h) {
        std::vector<Multidegree> zb;
        for (const auto& md : zero_blocks(tf, h))
            if (std::accumulate(md.begin(), md.end(), 0) == h) zb.push_back(md);
        std::vector<std::vector<int>> from_e;
        for (const auto& p : e.points)
            if (std::accumulate(p.begin(), p.end(), 0) == h) from_e.push_back(p);
        CHECK(zb == from_e);
    }

    // vanishing pair data: exactly the 0/1 vectors survive
    BraidingMatrix flat = BraidingMatrix::from_t_exponents({{4, 0}, {0, 4}});
    EnumerationResult flat_e = enumerate_E(QuadraticForm::from_theta(ThetaForm{flat}), 5);
    CHECK(flat_e.bounded);
    CHECK(flat_e.points == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

    // the unbounded example still lists the golden block below the cutoff
    EnumerationResult ex = enumerate_E(QuadraticForm::from_theta(ThetaForm{example_braiding()}), 4);
    CHECK(!ex.bounded);
    CHECK(ex.truncated_at == 4);
    CHECK(std::find(ex.points.begin(), ex.points.end(), std::vector<int>{1, 0, 3}) != ex.points.end());
}

TEST_CASE("enumeration agrees with zero blocks for random semipositive data") {
    std::mt19937 rng(73);
    int tested = 0;
    while (tested < 5) {
        BraidingMatrix A = random_monomial_braiding(rng, 2);
        ThetaForm tf{A};
        QuadraticForm qf(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, 0)));
        try {
            qf = QuadraticForm::from_theta(tf);
        } catch (const InputError&) {
            continue;
        }
        if (!qf.is_semipositive()) continue;
        ++tested;
        EnumerationResult e = enumerate_E(qf, 8);
        auto zb = zero_blocks(tf, 8);
        for (const auto& md : zb)
            CHECK(std::find(e.points.begin(), e.points.end(), md) != e.points.end());
        for (const auto& p : e.points) {
            int h = std::accumulate(p.begin(), p.end(), 0);
            if (h >= 2) CHECK(std::find(zb.begin(), zb.end(), p) != zb.end());
        }
    }
}

TEST_CASE("single-variable form has no points at heights two and up") {
    EnumerationResult e = enumerate_E(QuadraticForm(1, {{}}), 6);
    CHECK(e.bounded);
    for (const auto& p : e.points) CHECK(p[0] <= 1);
    CHECK(e.points == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("full-integer enumeration behind the flag") {
    BraidingMatrix a2 = BraidingMatrix::from_t_exponents({{4, -2}, {-2, 4}});
    EnumerationResult e = enumerate_E(QuadraticForm::from_theta(ThetaForm{a2}), 6, /*all_integers=*/true);
    CHECK(e.bounded);
    // the non-negative points are among them
    for (const auto& p : std::vector<std::vector<int>>{{0, 0}, {2, 2}})
        CHECK(std::find(e.points.begin(), e.points.end(), p) != e.points.end());
    CHECK(e.points.size() >= 6);
}
