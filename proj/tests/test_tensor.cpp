#include <doctest.h>

#include <random>

#include "nichols/block.hpp"

using namespace nichols;

TEST_CASE("multidegree counting") {
    CHECK(multidegree(Word{3, 3, 3, 1}, 3) == Multidegree{1, 0, 3});
    CHECK(multidegree(Word{}, 3) == Multidegree{0, 0, 0});
    CHECK(multidegree(Word{1, 2, 1}, 2) == Multidegree{2, 1});
    CHECK_THROWS_AS(multidegree(Word{4}, 3), LetterOutOfRange);
    CHECK_THROWS_AS(multidegree(Word{0}, 3), LetterOutOfRange);
}

TEST_CASE("block enumeration is lexicographic and multinomial-sized") {
    Block b(2, {2, 1});
    CHECK(b.basis() == std::vector<Word>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    CHECK(b.dim() == 3);

    Block c(3, {1, 0, 3});
    CHECK(c.dim() == 4); // 4!/3!
    CHECK(c.basis().front() == Word{1, 3, 3, 3});
    CHECK(c.basis().back() == Word{3, 3, 3, 1});

    Block single(1, {1});
    CHECK(single.basis() == std::vector<Word>{{1}});

    // cache returns one object per key
    CHECK(block(2, {2, 1}).get() == block(2, {2, 1}).get());
}

TEST_CASE("multidegrees of a given degree") {
    auto mds = multidegrees_of(2, 2);
    CHECK(mds == std::vector<Multidegree>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(multidegrees_of(3, 4).size() == 15);
}

TEST_CASE("concatenation product") {
    TensorElement v1 = TensorElement::generator(1);
    TensorElement v2 = TensorElement::generator(2);
    CHECK(v1.concat_mul(v2) == TensorElement::monomial({1, 2}));
    CHECK((v1 + v2).concat_mul(v1) ==
          TensorElement::monomial({1, 1}) + TensorElement::monomial({2, 1}));
    CHECK((Scalar::q_power(1) * v1).concat_mul(Scalar::q_power(-1) * v2) ==
          TensorElement::monomial({1, 2}));
}

TEST_CASE("concatenation is associative with the empty-word unit") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> letter(1, 2), len(0, 3), coeff(-2, 2);
    auto random_element = [&] {
        TensorElement x;
        for (int t = 0; t < 3; ++t) {
            Word w;
            for (int l = len(rng); l > 0; --l) w.push_back(letter(rng));
            int c = coeff(rng);
            if (c) x += TensorElement::monomial(w, Scalar(c));
        }
        return x;
    };
    TensorElement unit = TensorElement::unit();
    for (int trial = 0; trial < 25; ++trial) {
        TensorElement a = random_element(), b = random_element(), c = random_element();
        CHECK(a.concat_mul(b).concat_mul(c) == a.concat_mul(b.concat_mul(c)));
        CHECK(a.concat_mul(unit) == a);
        CHECK(unit.concat_mul(a) == a);
    }
}

TEST_CASE("block projections reassemble the element") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> letter(1, 3), coeff(-3, 3);
    TensorElement x;
    for (int t = 0; t < 8; ++t) {
        Word w;
        for (int l = 0; l < 4; ++l) w.push_back(letter(rng));
        x += TensorElement::monomial(w, Scalar(coeff(rng)));
    }
    TensorElement reassembled;
    for (const auto& md : multidegrees_of(3, 4)) reassembled += x.project(md, 3);
    CHECK(reassembled == x);
}

TEST_CASE("degrees and homogeneity") {
    TensorElement x = TensorElement::monomial({1, 2}) + TensorElement::monomial({2, 2});
    CHECK(x.homogeneous_degree() == 2);
    TensorElement mixed = x + TensorElement::generator(1);
    CHECK(mixed.degrees() == std::set<int>{1, 2});
    CHECK_THROWS_AS(mixed.homogeneous_degree(), DegreeMismatch);
}
