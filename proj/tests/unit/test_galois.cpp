#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qproduct/galois.hpp"

using namespace qproduct;

namespace {

const std::vector<std::uint32_t> kTabulated = {2,  3,  4,  5,  7,  8,  9,   11,  13,  16,  17,  19,  25,  27,
                                               32, 49, 64, 81, 121, 125, 128, 169, 243, 256, 289, 343, 361, 512};

}  // namespace

TEST_CASE("addition") {
    CHECK(gf(2)->add(1, 1) == 0);
    CHECK(gf(4)->add(2, 3) == 1);  // w + w^2 = 1
    CHECK(gf(5)->add(3, 4) == 2);
    CHECK(gf(9)->add(gf(9)->neg(7), 7) == 0);
}

TEST_CASE("multiplication") {
    const auto f4 = gf(4);
    CHECK(f4->modulus_string() == "x^2+x+1");
    CHECK(f4->mul(2, 3) == 1);
    for (Elem a = 0; a < 4; ++a) CHECK(f4->mul(a, 0) == 0);
    const auto f8 = gf(8);
    CHECK(f8->modulus_string() == "x^3+x+1");
    CHECK(f8->mul(2, 4) == 3);
}

TEST_CASE("inverse, power, negation") {
    CHECK(gf(4)->inv(2) == 3);
    CHECK(gf(5)->inv(2) == 3);
    CHECK(gf(4)->pow(2, 3) == 1);
    CHECK(gf(7)->neg(3) == 4);
    CHECK_THROWS_AS(gf(4)->inv(0), std::domain_error);
    CHECK(gf(8)->pow(5, 0) == 1);
    CHECK(gf(8)->pow(0, 5) == 0);
}

TEST_CASE("field element wrapper rejects mixed fields") {
    const FieldElement a(gf(4), 2), b(gf(8), 2);
    CHECK_THROWS_AS(add(a, b), std::invalid_argument);
    CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
    CHECK((a * FieldElement(gf(4), 3)).value() == 1);
    CHECK(inv(a).value() == 3);
    CHECK_THROWS_AS(FieldElement(gf(4), 4), std::invalid_argument);
}

TEST_CASE("built-in moduli are irreducible and primitive") {
    for (auto q : kTabulated) {
        CAPTURE(q);
        const auto f = gf(q);
        CHECK(is_irreducible(f->characteristic(), f->modulus()));
        CHECK(f->multiplicative_order(f->primitive()) == q - 1);
        if (f->degree() > 1) CHECK(f->primitive() == f->characteristic());  // x itself
    }
    CHECK(gf(5)->modulus_string() == "x+3");
    CHECK(gf(9)->modulus_string() == "x^2+2x+2");
}

TEST_CASE("non-tabulated fields fall back to a searched primitive modulus") {
    const auto f = gf(1024);
    CHECK(f->degree() == 10);
    CHECK(is_irreducible(2, f->modulus()));
    CHECK(f->multiplicative_order(f->primitive()) == 1023);
    CHECK_THROWS_AS(gf(6), std::invalid_argument);
    CHECK_THROWS_AS(gf(1), std::invalid_argument);
    CHECK_THROWS_AS(gf(65537 * 2), std::invalid_argument);
}

TEST_CASE("reducible modulus rejected") {
    CHECK_THROWS_AS(FieldSpec::make(2, 2, {1, 0, 1}), std::invalid_argument);  // (x+1)^2
    CHECK_NOTHROW(FieldSpec::make(2, 2, {1, 1, 1}));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(7);
    for (auto q : kTabulated) {
        CAPTURE(q);
        const auto f = gf(q);
        std::uniform_int_distribution<unsigned> pick(0, q - 1);
        for (int t = 0; t < 200; ++t) {
            const Elem a = Elem(pick(rng)), b = Elem(pick(rng)), c = Elem(pick(rng));
            CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
        }
    }
}

TEST_CASE("frobenius over the quadratic subfield") {
    const auto f4 = gf(4);
    CHECK(f4->frobenius_q(2) == 3);
    CHECK(f4->frobenius_q(0) == 0);
    CHECK(f4->frobenius_q(1) == 1);
    CHECK_THROWS_AS(gf(8)->frobenius_q(2), std::invalid_argument);
    for (auto q : {4u, 16u, 9u, 64u, 25u}) {
        const auto f = gf(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f->frobenius_q(f->frobenius_q(Elem(a))) == a);
            for (std::uint32_t b = 0; b < q && q <= 16; ++b) {
                CHECK(f->frobenius_q(f->add(Elem(a), Elem(b))) ==
                      f->add(f->frobenius_q(Elem(a)), f->frobenius_q(Elem(b))));
                CHECK(f->frobenius_q(f->mul(Elem(a), Elem(b))) ==
                      f->mul(f->frobenius_q(Elem(a)), f->frobenius_q(Elem(b))));
            }
        }
    }
}

TEST_CASE("trace to the prime field") {
    const auto f4 = gf(4);
    CHECK(f4->trace_to_prime(2) == 1);
    CHECK(f4->trace_to_prime(1) == 0);
    for (auto q : {4u, 8u, 9u, 16u}) {
        const auto f = gf(q);
        bool nonzero = false;
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f->trace_to_prime(Elem(a)) < f->characteristic());
            nonzero = nonzero || f->trace_to_prime(Elem(a)) != 0;
            for (std::uint32_t b = 0; b < q; ++b)
                CHECK(f->trace_to_prime(f->add(Elem(a), Elem(b))) ==
                      f->add(f->trace_to_prime(Elem(a)), f->trace_to_prime(Elem(b))));
            for (unsigned c = 0; c < f->characteristic(); ++c)
                CHECK(f->trace_to_prime(f->mul(Elem(c), Elem(a))) == f->mul(Elem(c), f->trace_to_prime(Elem(a))));
        }
        CHECK(nonzero);
    }
}

TEST_CASE("roots of unity") {
    CHECK(gf(4)->root_of_unity(3) == gf(4)->primitive());
    CHECK(gf(8)->root_of_unity(7) == gf(8)->primitive());
    const auto f5 = gf(5);
    const Elem r = f5->root_of_unity(4);
    CHECK(f5->pow(r, 4) == 1);
    CHECK(f5->pow(r, 2) != 1);
    CHECK_THROWS_AS(gf(4)->root_of_unity(5), std::invalid_argument);
    for (auto q : {16u, 49u, 81u}) {
        const auto f = gf(q);
        for (std::uint32_t n = 1; n < q; ++n) {
            if ((q - 1) % n) continue;
            const Elem z = f->root_of_unity(n);
            CHECK(f->pow(z, n) == 1);
            for (std::uint32_t k = 1; k < n; ++k) CHECK(f->pow(z, k) != 1);
        }
    }
}

TEST_CASE("prime embedding") {
    CHECK(embed_prime(1, gf(4)).value() == 1);
    CHECK(embed_prime(0, gf(7)).value() == 0);
    const auto two = embed_prime(2, gf(9));
    CHECK((two * two).value() == 1);
    CHECK_THROWS_AS(embed_prime(3, gf(9)), std::invalid_argument);
}

TEST_CASE("digit encoding round trip") {
    const auto f = gf(27);
    for (std::uint32_t a = 0; a < 27; ++a) CHECK(f->from_digits(f->digits(Elem(a))) == a);
    CHECK(f->digits(5) == std::vector<Elem>{2, 1, 0});
}
