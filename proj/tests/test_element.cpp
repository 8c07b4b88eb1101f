#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "qnsym/element.hpp"
#include "qnsym/immaculate.hpp"
#include "qnsym/io.hpp"
#include "qnsym/linalg.hpp"
#include "test_util.hpp"

using namespace qnsym;

TEST_CASE("element arithmetic and pruning") {
    const GradedElement e = m_term({1, 2}) + m_term({3}, 2);
    CHECK((e + GradedElement{}) == e);
    CHECK((e - e).is_zero());
    CHECK((m_term({1}) * 2).coefficient(BasisIndex(Basis::M, {1})) == 2);
    CHECK((e * 0).is_zero());

    GradedElement f;
    f.add_term(BasisIndex(Basis::M, {3}), 2);
    f.add_term(BasisIndex(Basis::M, {1, 2}), 1);
    CHECK(f == e);  // canonical representation, insertion order irrelevant
    f.add_term(BasisIndex(Basis::M, {3}), -2);
    CHECK(f.coefficient(BasisIndex(Basis::M, {3})) == 0);
    CHECK(f.term_count() == 1);
}

TEST_CASE("side mixing is rejected") {
    GradedElement e = m_term({1});
    CHECK_THROWS_AS(e.add_term(BasisIndex(Basis::H, {1}), 1), std::invalid_argument);
    CHECK_NOTHROW(e.add_term(BasisIndex(Basis::F, {1}), 1));  // same side is fine
}

TEST_CASE("canonical index order: degree, tag, lex") {
    GradedElement e;
    e.add_term(BasisIndex(Basis::F, {2, 1}), 1);
    e.add_term(BasisIndex(Basis::F, {1, 2}), 1);
    e.add_term(BasisIndex(Basis::F, {1}), 1);
    e.add_term(BasisIndex(Basis::M, {3}), 1);
    CHECK(to_plain(e) == "F[1] + M[3] + F[1,2] + F[2,1]");
}

TEST_CASE("skew indices normalize when inner is empty") {
    const BasisIndex straight = dual_imm_index(SkewShape(Composition{2, 1}, Composition{}));
    CHECK(straight.basis() == Basis::DualImm);
    CHECK_FALSE(straight.is_skew());
    const BasisIndex skewed = dual_imm_index(SkewShape(Composition{2, 1}, Composition{1}));
    CHECK(skewed.basis() == Basis::SkewDualImm);
    CHECK(skewed.degree() == 2);
}

TEST_CASE("extend_linear is linear") {
    std::mt19937 rng(testing::kSeed);
    auto identity = [](const BasisIndex& i) { return GradedElement::term(i); };
    for (int t = 0; t < 20; ++t) {
        const GradedElement a = testing::random_qsym_f(rng, 4);
        const GradedElement b = testing::random_qsym_f(rng, 4);
        CHECK(extend_linear(identity, a) == a);
        auto f = [](const BasisIndex& i) { return m_to_f(i.index()) * 2; };
        CHECK(extend_linear(f, a * 2 + b * 3) ==
              extend_linear(f, a) * 2 + extend_linear(f, b) * 3);
    }
}

TEST_CASE("solve_against_basis") {
    const std::vector<GradedElement> targets = {f_term({2}) + f_term({1, 1}),
                                                f_term({1, 1})};
    SECTION("unit vector") {
        const auto x = solve_against_basis(targets, targets[0]);
        CHECK(x == std::vector<Rational>{1, 0});
    }
    SECTION("zero element") {
        const auto x = solve_against_basis(targets, GradedElement{});
        CHECK(x == std::vector<Rational>{0, 0});
    }
    SECTION("generic combination round-trips") {
        const GradedElement e = targets[0] * 3 - targets[1] * 5;
        const auto x = solve_integral(targets, e);
        CHECK(x == std::vector<Int>{3, -5});
    }
    SECTION("outside the span") {
        CHECK_THROWS_AS(solve_against_basis(targets, f_term({3})), std::runtime_error);
    }
    SECTION("ambiguous dependent system") {
        const std::vector<GradedElement> dep = {f_term({2}), f_term({2}) * 2};
        CHECK_THROWS_AS(solve_against_basis(dep, f_term({2})), std::runtime_error);
    }
    SECTION("expansion of F_(1,2) against the degree-3 dual immaculates") {
        std::vector<GradedElement> dis;
        for (const auto& a : compositions_of(3)) dis.push_back(dual_immaculate(a));
        const auto x = solve_integral(dis, f_term({1, 2}));
        GradedElement back;
        for (std::size_t i = 0; i < dis.size(); ++i) back += dis[i] * x[i];
        CHECK(back == f_term({1, 2}));
    }
}

TEST_CASE("invert_unimodular") {
    const std::vector<std::vector<Int>> m = {{1, 1}, {0, 1}};
    CHECK(invert_unimodular(m) == std::vector<std::vector<Int>>{{1, -1}, {0, 1}});
    CHECK_THROWS_AS(invert_unimodular({{1, 1}, {1, 1}}), std::runtime_error);
    CHECK_THROWS_AS(invert_unimodular({{2}}), std::runtime_error);  // inverse not integral
}
