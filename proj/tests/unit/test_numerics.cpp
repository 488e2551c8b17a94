#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

#include <cmath>
#include <random>

using namespace univoque;
using namespace univoque::testing;

TEST_CASE("rational base construction and range checks") {
    BaseValue two = base_from_rational(Int(2), Int(1), 1);
    REQUIRE(two.kind() == BaseKind::Rational);
    REQUIRE(two.rational_value() == Rat(2));

    BaseValue nine_fifths = base_from_rational(Int(9), Int(5), 1);
    REQUIRE(nine_fifths.rational_value() == Rat(9, 5));

    REQUIRE_THROWS_AS(base_from_rational(Int(3), Int(1), 1), OutOfRange); // 3 > M+1 = 2
    REQUIRE_THROWS_AS(base_from_rational(Int(1), Int(1), 1), OutOfRange);
    REQUIRE_THROWS_AS(base_from_rational(Int(1), Int(2), 1), OutOfRange);
}

TEST_CASE("algebraic base construction isolates a single root") {
    BaseValue phi = base_from_polynomial({Int(1), Int(-1), Int(-1)}, Rat(3, 2), Rat(17, 10), 1);
    REQUIRE(phi.kind() == BaseKind::Algebraic);
    REQUIRE(std::abs(phi.approx() - 1.6180339887) < 1e-6);

    BaseValue trib =
        base_from_polynomial({Int(1), Int(-1), Int(-1), Int(-1)}, Rat(9, 5), Rat(19, 10), 1);
    REQUIRE(std::abs(trib.approx() - 1.8392867552) < 1e-6);

    // [1.0, 2.0] still isolates the golden ratio: the second root is negative
    BaseValue phi_wide = base_from_polynomial({Int(1), Int(-1), Int(-1)}, Rat(1), Rat(2), 1);
    REQUIRE(std::abs(phi_wide.approx() - 1.6180339887) < 1e-6);

    // (x-1)(x-2) has two roots in [1,2]
    REQUIRE_THROWS_AS(base_from_polynomial({Int(1), Int(-3), Int(2)}, Rat(1), Rat(2), 1),
                      NotIsolating);
    // no root at all
    REQUIRE_THROWS_AS(base_from_polynomial({Int(1), Int(0), Int(1)}, Rat(1), Rat(2), 1),
                      NotIsolating);
}

TEST_CASE("rational roots of a defining polynomial collapse to rational bases") {
    // x^2 - 4x + 4 = (x-2)^2; squarefree part x-2 has the rational root 2
    BaseValue b = base_from_polynomial({Int(1), Int(-4), Int(4)}, Rat(3, 2), Rat(2), 1);
    REQUIRE(b.kind() == BaseKind::Rational);
    REQUIRE(b.rational_value() == Rat(2));
}

TEST_CASE("refine_interval is nested and meets the width contract") {
    BaseValue trib = tribonacci();
    DyadicInterval i10 = refine_interval(trib, 10);
    DyadicInterval i20 = refine_interval(trib, 20);
    REQUIRE(i20.lo >= i10.lo);
    REQUIRE(i20.hi <= i10.hi);
    REQUIRE(i20.width() <= Rat(1, Int(1) << 19)); // <= 2^(1-20)
    REQUIRE(i20.lo <= Rat(18392868, 10000000));
    REQUIRE(i20.hi >= Rat(18392867, 10000000));

    BaseValue r = base_from_rational(Int(9), Int(5), 1);
    DyadicInterval ir = refine_interval(r, 30);
    REQUIRE(ir.lo == Rat(9, 5));
    REQUIRE(ir.hi == Rat(9, 5));

    auto kl = kl_constant(1, 12);
    REQUIRE(kl.interval.width() <= Rat(1, 1 << 11));
    REQUIRE(to_double(kl.interval.lo) < 1.78724);
    REQUIRE(to_double(kl.interval.hi) > 1.78722);
}

TEST_CASE("field_sign decides defining relations and strict comparisons") {
    BaseValue phi = golden();
    FieldElement q = FieldElement::q(phi);
    FieldElement one = FieldElement::one(phi);

    REQUIRE(field_sign(q * q - q - one) == 0);
    REQUIRE(field_sign(q - fe(phi, Rat(162, 100))) == -1); // phi < 1.62
    REQUIRE(field_sign(q - fe(phi, Rat(161, 100))) == 1);

    BaseValue trib = tribonacci();
    FieldElement t = FieldElement::q(trib);
    REQUIRE(field_sign(t * t * t - t * t - t - FieldElement::one(trib)) == 0);
}

TEST_CASE("field_eval_prefix computes exact prefix values") {
    BaseValue two = base_from_rational(Int(2), Int(1), 1);
    REQUIRE(field_eval_prefix(w("1"), two).rational_part() == Rat(1, 2));

    BaseValue phi = golden();
    REQUIRE(field_sign(field_eval_prefix(w("11"), phi) - FieldElement::one(phi)) == 0);

    BaseValue trib = tribonacci();
    REQUIRE(field_sign(field_eval_prefix(w("111"), trib) - FieldElement::one(trib)) == 0);

    FieldElement a = field_eval_prefix(w("1101"), phi);
    REQUIRE(field_sign(a - a) == 0);
}

TEST_CASE("non-minimal companion polynomials stay exact through the gcd fallback") {
    // x^4 - x^3 - x^2 - 1 = (x+1)(x^3 - 2x^2 + x - 1); construction strips the -1 root
    BaseValue b = base_from_polynomial({Int(1), Int(-1), Int(-1), Int(0), Int(-1)}, Rat(17, 10),
                                       Rat(18, 10), 1);
    REQUIRE(b.kind() == BaseKind::Algebraic);
    REQUIRE(b.defining_polynomial().degree() == 3);
    REQUIRE(std::abs(b.approx() - 1.7548776662) < 1e-6);
    REQUIRE(field_sign(field_eval_prefix(w("1101"), b) - FieldElement::one(b)) == 0);
}

TEST_CASE("field inverse and division round-trip") {
    BaseValue phi = golden();
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        FieldElement e(phi, {Rat(coeff(rng)), Rat(coeff(rng))});
        if (field_sign(e) == 0) continue;
        FieldElement prod = e * e.inverse();
        REQUIRE(field_sign(prod - FieldElement::one(phi)) == 0);
    }
    REQUIRE_THROWS_AS(FieldElement::zero(phi).inverse(), DivisionByZero);
}

TEST_CASE("comparison is a total order consistent with floating approximations") {
    BaseValue trib = tribonacci();
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        FieldElement a(trib, {Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng))});
        FieldElement b(trib, {Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng))});
        int c = compare(a, b);
        double da = a.approx(), db = b.approx();
        if (std::abs(da - db) > 1e-9) REQUIRE(c == (da < db ? -1 : 1));
        REQUIRE(compare(b, a) == -c);
    }
}

TEST_CASE("digit-stream bases refuse exact field arithmetic") {
    auto kl = kl_constant(1, 8);
    REQUIRE_THROWS_AS(FieldElement::one(kl.base), UnsupportedBase);
    REQUIRE_THROWS_AS(greedy_expand(FieldElement::one(golden()), kl.base, 16), UnsupportedBase);
}

TEST_CASE("base spec grammar round-trips the documented forms") {
    REQUIRE(parse_base_spec("9/5", 1).rational_value() == Rat(9, 5));
    REQUIRE(parse_base_spec("2", 1).rational_value() == Rat(2));
    BaseValue trib = parse_base_spec("poly:1,-1,-1,-1@[1.8,1.9]", 1);
    REQUIRE(std::abs(trib.approx() - 1.8392867552) < 1e-6);
    REQUIRE(std::abs(parse_base_spec("golden:M=1", 1).approx() - 1.618034) < 1e-5);
    REQUIRE(parse_base_spec("golden:M=2", 2).rational_value() == Rat(2));
    REQUIRE(parse_base_spec("kl:M=1", 1).kind() == BaseKind::DigitStream);
    REQUIRE(std::abs(parse_base_spec("tribonacci", 1).approx() - 1.839287) < 1e-5);
    REQUIRE_THROWS_AS(parse_base_spec("5/2", 1), OutOfRange);
    REQUIRE_THROWS_AS(parse_base_spec("golden:M=2", 1), ParseError);
    REQUIRE_THROWS_AS(parse_base_spec("poly:1,-1@nope", 1), ParseError);
}
