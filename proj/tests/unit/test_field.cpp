#include "permcx/field.hpp"
#include "permcx/rng.hpp"

#include <doctest.h>

using namespace permcx;

TEST_SUITE("field") {

TEST_CASE("find_irreducible pins the smallest polynomial") {
    CHECK(find_irreducible(2, 1) == std::vector<int>{0, 1});
    CHECK(find_irreducible(2, 2) == std::vector<int>{1, 1, 1}); // t^2+t+1
    CHECK(find_irreducible(3, 2) == std::vector<int>{1, 0, 1}); // t^2+1
    CHECK_THROWS_AS(find_irreducible(4, 2), Error);
    CHECK_THROWS_AS(find_irreducible(2, 0), Error);
}

TEST_CASE("irreducibility by trial division") {
    CHECK(is_irreducible_mod_p({1, 1, 1}, 2));
    CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, 2)); // (t+1)^2
    CHECK(is_irreducible_mod_p({1, 1, 0, 0, 1}, 2)); // t^4+t+1
    CHECK_FALSE(is_irreducible_mod_p({0, 1, 1}, 2)); // t(t+1)
}

TEST_CASE("prime field inverse") {
    const auto f3 = Field::make(3);
    CHECK(f3->inv(f3->from_int(2)) == f3->from_int(2)); // 2*2 = 4 = 1 mod 3
    CHECK_THROWS_AS(f3->inv(0), Error);
}

TEST_CASE("F_4 reduction by the modulus") {
    const auto f4 = Field::make(2, 2);
    const fq_t t = f4->from_coeffs({0, 1});
    const fq_t t_plus_1 = f4->from_coeffs({1, 1});
    CHECK(f4->mul(t, t) == t_plus_1); // t^2 = t+1 mod t^2+t+1
}

TEST_CASE("additive inverses across fields") {
    for (const auto& f : {Field::make(2), Field::make(3), Field::make(5), Field::make(2, 3),
                          Field::make(3, 2)}) {
        for (int a = 0; a < f->q(); ++a)
            CHECK(f->add(static_cast<fq_t>(a), f->neg(static_cast<fq_t>(a))) == 0);
    }
}

TEST_CASE("field axioms on random triples") {
    Rng rng(20260810);
    for (const auto& f : {Field::make(2), Field::make(3), Field::make(5), Field::make(7),
                          Field::make(2, 2), Field::make(2, 3), Field::make(3, 2)}) {
        for (int it = 0; it < 200; ++it) {
            const fq_t a = static_cast<fq_t>(rng.uniform(f->q()));
            const fq_t b = static_cast<fq_t>(rng.uniform(f->q()));
            const fq_t c = static_cast<fq_t>(rng.uniform(f->q()));
            CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == f->one());
        }
    }
}

TEST_CASE("frobenius fixes every element") {
    for (const auto& f : {Field::make(2, 2), Field::make(2, 3), Field::make(3, 2),
                          Field::make(5, 2), Field::make(3, 4)}) {
        for (int a = 0; a < f->q(); ++a)
            CHECK(f->pow(static_cast<fq_t>(a), f->q()) == static_cast<fq_t>(a));
    }
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(Field::with_modulus(2, {1, 0, 1}), Error); // reducible
    CHECK_THROWS_AS(Field::with_modulus(2, {1, 1}), Error);     // degree-1 must be t
    CHECK_THROWS_AS(Field::with_modulus(6, {0, 1}), Error);     // nonprime
    CHECK(Field::with_modulus(2, {1, 1, 1})->q() == 4);
}

TEST_CASE("scalar api reports field mixing") {
    const Scalar a{Field::make(2), 1};
    const Scalar b{Field::make(3), 1};
    CHECK_THROWS_AS(scalar_add(a, b), Error);
    CHECK(scalar_add(a, a).value == 0);
    const Scalar two{Field::make(3), 2};
    CHECK(scalar_inv(two).value == 2);
    CHECK_THROWS_AS(scalar_inv(Scalar{Field::make(3), 0}), Error);
}

} // TEST_SUITE
