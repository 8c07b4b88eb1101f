#include <map>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "qnsym/nsym.hpp"
#include "test_util.hpp"

using namespace qnsym;

TEST_CASE("products are concatenation") {
    CHECK(h_product(h_term({1, 2}), h_term({1})) == h_term({1, 2, 1}));
    CHECK(h_product(h_term({}), h_term({2, 1})) == h_term({2, 1}));
    CHECK(e_product(e_term({2}), e_term({2})) == e_term({2, 2}));
}

TEST_CASE("e_to_h and h_to_e") {
    CHECK(e_to_h({1}) == h_term({1}));
    CHECK(e_to_h({2}) == h_term({1, 1}) - h_term({2}));
    CHECK(e_to_h({3}) ==
          h_term({1, 1, 1}) - h_term({1, 2}) - h_term({2, 1}) + h_term({3}));
    for (int n = 0; n <= 6; ++n)
        for (const auto& a : compositions_of(n)) {
            CHECK(nsym_to_h(h_to_e(a)) == h_term(a));
            CHECK(nsym_to_e(e_to_h(a)) == e_term(a));
        }
}

TEST_CASE("coproduct on H") {
    TensorElement d1;
    d1.add_term(BasisIndex(Basis::H, {}), BasisIndex(Basis::H, {1}), 1);
    d1.add_term(BasisIndex(Basis::H, {1}), BasisIndex(Basis::H, {}), 1);
    CHECK(coproduct_h(Composition{1}) == d1);

    TensorElement d0;
    d0.add_term(BasisIndex(Basis::H, {}), BasisIndex(Basis::H, {}), 1);
    CHECK(coproduct_h(Composition{}) == d0);

    TensorElement d2;
    d2.add_term(BasisIndex(Basis::H, {}), BasisIndex(Basis::H, {2}), 1);
    d2.add_term(BasisIndex(Basis::H, {1}), BasisIndex(Basis::H, {1}), 1);
    d2.add_term(BasisIndex(Basis::H, {2}), BasisIndex(Basis::H, {}), 1);
    CHECK(coproduct_h(Composition{2}) == d2);

    // multiplicative extension picks up multiplicities
    CHECK(coproduct_h(Composition{1, 1})
              .coefficient(BasisIndex(Basis::H, {1}), BasisIndex(Basis::H, {1})) == 2);
}

TEST_CASE("coassociativity of the H coproduct") {
    using Tensor3 = std::map<std::tuple<BasisIndex, BasisIndex, BasisIndex>, Int>;
    for (int n = 0; n <= 6; ++n)
        for (const auto& a : compositions_of(n)) {
            Tensor3 left, right;
            for (const auto& [key, c] : coproduct_h(a).terms()) {
                for (const auto& [k2, c2] : coproduct_h(key.first.index()).terms())
                    left[{k2.first, k2.second, key.second}] += c * c2;
                for (const auto& [k2, c2] : coproduct_h(key.second.index()).terms())
                    right[{key.first, k2.first, k2.second}] += c * c2;
            }
            std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
            CHECK(left == right);
        }
}

TEST_CASE("antipode on H") {
    CHECK(antipode_h(Composition{}) == h_term({}));
    CHECK(antipode_h(Composition{1}) == h_term({1}, -1));
    CHECK(antipode_h(Composition{2}) == h_term({1, 1}) - h_term({2}));

    // both contractions of the antipode identity, degrees <= 6
    for (int n = 0; n <= 6; ++n)
        for (const auto& a : compositions_of(n)) {
            GradedElement left, right;
            for (const auto& [key, c] : coproduct_h(a).terms()) {
                left += h_product(antipode_h(GradedElement::term(key.first)),
                                  GradedElement::term(key.second)) *
                        c;
                right += h_product(GradedElement::term(key.first),
                                   antipode_h(GradedElement::term(key.second))) *
                         c;
            }
            GradedElement expected;
            if (n == 0) expected = h_term({});
            CHECK(left == expected);
            CHECK(right == expected);
        }
}

TEST_CASE("psi on NSym") {
    CHECK(psi_nsym(e_to_h({3, 1})) == h_term({3, 1}));  // psi(E_a) = H_a
    for (int n = 0; n <= 6; ++n)
        for (const auto& a : compositions_of(n))
            CHECK(psi_nsym(psi_nsym(h_term(a))) == h_term(a));

    std::mt19937 rng(testing::kSeed);
    for (int t = 0; t < 25; ++t) {
        const GradedElement a = testing::random_nsym_h(rng, 5);
        const GradedElement b = testing::random_nsym_h(rng, 5);
        CHECK(psi_nsym(h_product(a, b)) == h_product(psi_nsym(a), psi_nsym(b)));
    }
}
