#include <doctest.h>

#include "affinecodes/chain_ring.hpp"
#include "affinecodes/rpoly.hpp"

using namespace afc;

TEST_CASE("ring construction and parameters") {
    RingPtr z8 = ChainRing::make(2, 3, 1);
    CHECK(z8->pt() == 8);
    CHECK(z8->q() == 2);

    RingPtr z4 = ChainRing::make(2, 2, 1);
    CHECK(z4->pt() == 4);

    // GR(4,3) with the divisor of X^7 - 1
    RingPtr gr43 = ChainRing::make(2, 2, 3, {3, 1, 2, 1});
    CHECK(gr43->q() == 8);
    CHECK(gr43->pt() == 4);

    CHECK_THROWS_AS(ChainRing::make(4, 2, 1), std::invalid_argument);   // p not prime
    CHECK_THROWS_AS(ChainRing::make(2, 2, 2, {1, 0, 1}), std::invalid_argument);  // X^2+1 = (X+1)^2 mod 2
    CHECK_THROWS_AS(ChainRing::make(2, 2, 2, {1, 1}), std::invalid_argument);     // wrong degree
}

TEST_CASE("default modulus is the lexicographically first lifted irreducible") {
    RingPtr gr43 = ChainRing::make(2, 2, 3);
    // X^3+X+1 lifts to X^3+2X^2+X+3 as a divisor of X^7-1 over Z4
    CHECK(gr43->modulus() == std::vector<uint64_t>{3, 1, 2, 1});
    RingPtr gr42 = ChainRing::make(2, 2, 2);
    // X^2+X+1 lifts to X^2+X+1? the lift divides X^3-1 over Z4: X^3-1 = (X-1)(X^2+X+1)
    CHECK(gr42->modulus() == std::vector<uint64_t>{1, 1, 1});
}

TEST_CASE("arithmetic in Z8 and GR(4,2)") {
    RingPtr z8 = ChainRing::make(2, 3, 1);
    CHECK(z8->from_int(3) * z8->from_int(5) == z8->from_int(7));

    RingPtr gr42 = ChainRing::make(2, 2, 2, {1, 1, 1});  // X^2+X+1
    RElem x = gr42->gen();
    CHECK(x * x == gr42->from_coeffs({3, 3}));  // x^2 = -x-1 = 3x+3

    RingPtr z4 = ChainRing::make(2, 2, 1);
    CHECK(z4->from_int(3).inv() == z4->from_int(3));
    CHECK_THROWS_AS(z4->from_int(2).inv(), std::domain_error);
}

TEST_CASE("valuation and unit decomposition") {
    RingPtr z8 = ChainRing::make(2, 3, 1);
    auto [v6, u6] = unit_decompose(z8->from_int(6));
    CHECK(v6 == 1);
    CHECK(*u6 == z8->from_int(3));

    auto [v0, u0] = unit_decompose(z8->zero());
    CHECK(v0 == 3);
    CHECK(!u0.has_value());

    RingPtr z4 = ChainRing::make(2, 2, 1);
    auto [v3, u3] = unit_decompose(z4->from_int(3));
    CHECK(v3 == 0);
    CHECK(*u3 == z4->from_int(3));
}

TEST_CASE("reconstruction and norm of products") {
    RingPtr z8 = ChainRing::make(2, 3, 1);
    for (int64_t a = 0; a < 8; ++a) {
        RElem x = z8->from_int(a);
        if (x.is_zero()) continue;
        auto [v, u] = unit_decompose(x);
        CHECK(u->shift_up(v) == x);
        for (int64_t b = 0; b < 8; ++b) {
            RElem y = z8->from_int(b);
            uint32_t expect = std::min<uint32_t>(x.val() + y.val(), 3);
            CHECK((x * y).val() == expect);
        }
    }
}

TEST_CASE("Teichmuller digits") {
    RingPtr z4 = ChainRing::make(2, 2, 1);
    auto d3 = z4->from_int(3).teichmuller_digits();
    CHECK(d3[0] == z4->one());
    CHECK(d3[1] == z4->one());
    auto d2 = z4->from_int(2).teichmuller_digits();
    CHECK(d2[0] == z4->zero());
    CHECK(d2[1] == z4->one());

    // exhaustive over GR(4,2): digits satisfy g^q = g and re-sum to x
    RingPtr gr42 = ChainRing::make(2, 2, 2, {1, 1, 1});
    for (const RElem& x : gr42->all_elements()) {
        auto digits = x.teichmuller_digits();
        RElem sum = gr42->zero();
        for (uint32_t i = 0; i < digits.size(); ++i) {
            CHECK(digits[i].pow(gr42->q()) == digits[i]);
            sum += digits[i].shift_up(i);
        }
        CHECK(sum == x);
    }
}
