#include <catch2/catch_amalgamated.hpp>

#include "finba/core/elementary_product.hpp"
#include "finba/core/field_algebra.hpp"

using namespace finba;

TEST_CASE("powerset algebra basics", "[core]") {
    FieldAlgebra p3 = powerset_algebra(3);
    CHECK(p3.ground_size() == 3);
    CHECK(p3.zero().mask() == 0);
    CHECK(p3.one().mask() == 0b111);
    CHECK(p3.singleton(1).mask() == 0b010);
    CHECK(p3.ground_labels() == std::vector<std::string>{"0", "1", "2"});
    CHECK(p3.index_of("2") == 2);
    CHECK_FALSE(p3.index_of("x").has_value());
}

TEST_CASE("labelled ground sets reject duplicates and oversize", "[core]") {
    CHECK_THROWS_MATCHES(FieldAlgebra({"a", "a"}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::duplicate_label; }));
    CHECK_THROWS_MATCHES(powerset_algebra(25), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::ground_too_large; }));
    // The hard cap is one machine word; an explicit limit cannot lift it.
    CHECK_THROWS_AS(powerset_algebra(65, 100), Error);
    FieldAlgebra big = powerset_algebra(64, 64);
    CHECK(big.one().mask() == ~Mask{0});
}

TEST_CASE("element operations are the set operations", "[core]") {
    FieldAlgebra p4 = powerset_algebra(4);
    Element x = p4.element(0b0011);
    Element y = p4.element(0b0110);
    CHECK((x + y).mask() == 0b0111);
    CHECK((x * y).mask() == 0b0010);
    CHECK((-x).mask() == 0b1100);
    CHECK(x.signed_power(true) == x);
    CHECK(x.signed_power(false) == -x);
    CHECK(x.leq(x + y));
    CHECK_FALSE(x.leq(y));
    CHECK(x.disjoint_from(p4.element(0b1100)));
    CHECK_FALSE(x.disjoint_from(y));
    CHECK(p4.zero().is_zero());
    CHECK(p4.one().is_one());
    CHECK(p4.singleton(2).is_atom());
    CHECK_FALSE(x.is_atom());
    CHECK(x.member_labels() == std::vector<std::string>{"0", "1"});
}

TEST_CASE("boolean identities hold on random elements", "[core]") {
    FieldAlgebra p5 = powerset_algebra(5);
    for (Mask a = 0; a < 32; a += 7) {
        for (Mask b = 0; b < 32; b += 5) {
            Element x = p5.element(a), y = p5.element(b);
            CHECK(-(x + y) == (-x) * (-y));
            CHECK(-(x * y) == (-x) + (-y));
            CHECK(x + (x * y) == x);
            CHECK(x * (x + y) == x);
            CHECK(x + (-x) == p5.one());
            CHECK(x * (-x) == p5.zero());
        }
    }
}

TEST_CASE("elements of distinct algebras never mix", "[core]") {
    FieldAlgebra a = powerset_algebra(2);
    FieldAlgebra b = powerset_algebra(2);
    CHECK_FALSE(a == b); // same shape, distinct identity
    CHECK_FALSE(a.one() == b.one());
    CHECK_THROWS_MATCHES(a.one() + b.one(), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::algebra_mismatch; }));
    FieldAlgebra a2 = a; // copies share identity
    CHECK(a == a2);
    CHECK(a.one() == a2.one());
}

TEST_CASE("empty sum is zero and empty product is one", "[core]") {
    FieldAlgebra p3 = powerset_algebra(3);
    CHECK(sum(p3, std::vector<Element>{}) == p3.zero());
    CHECK(product(p3, std::vector<Element>{}) == p3.one());
    std::vector<Element> xs{p3.element(0b011), p3.element(0b110)};
    CHECK(sum(p3, xs).mask() == 0b111);
    CHECK(product(p3, xs).mask() == 0b010);
}

TEST_CASE("elementary products evaluate signed meets", "[core]") {
    FieldAlgebra p4 = powerset_algebra(4);
    std::vector<Element> gens{p4.element(0b0011), p4.element(0b0101)};

    ElementaryProduct empty{};
    CHECK(eval_elementary_product(empty, gens, p4) == p4.one());

    ElementaryProduct both{0b11, 0b11}; // x0 * x1
    CHECK(eval_elementary_product(both, gens, p4).mask() == 0b0001);

    ElementaryProduct mixed{0b11, 0b01}; // x0 * -x1
    CHECK(eval_elementary_product(mixed, gens, p4).mask() == 0b0010);

    ElementaryProduct neg{0b11, 0b00}; // -x0 * -x1
    CHECK(eval_elementary_product(neg, gens, p4).mask() == 0b1000);

    CHECK(full_pattern(2, 0b10).support == 0b11);
    CHECK(full_pattern(2, 0b10).positive == 0b10);

    ElementaryProduct out_of_range{0b100, 0b100};
    CHECK_THROWS_MATCHES(
        eval_elementary_product(out_of_range, gens, p4), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& e) { return e.code() == errc::unknown_generator_index; }));
}

TEST_CASE("degenerate powersets", "[core]") {
    FieldAlgebra p0 = powerset_algebra(0);
    CHECK(p0.zero() == p0.one()); // the one-element algebra
    FieldAlgebra p1 = powerset_algebra(1);
    CHECK(p1.one().is_atom());
    CHECK(full_mask(0) == 0);
}
