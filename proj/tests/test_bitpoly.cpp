#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pentparity/bitpoly.hpp"
#include "pentparity/errors.hpp"
#include "pentparity/modulus.hpp"

using namespace pentparity;

namespace {

BitPoly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<BitPoly::Word> w(static_cast<std::size_t>(degree / 64 + 1));
  for (auto& x : w) x = rng();
  w.back() &= (BitPoly::Word{2} << (degree % 64)) - 1;
  w.back() |= BitPoly::Word{1} << (degree % 64);
  return BitPoly(w);
}

BitPoly from_mask(std::uint64_t m) { return BitPoly(std::vector<BitPoly::Word>{m}); }

}  // namespace

TEST_CASE("construction and printing") {
  CHECK(BitPoly().is_zero());
  CHECK(BitPoly().degree() == BitPoly::kZeroDegree);
  CHECK(BitPoly::one().is_one());
  CHECK(BitPoly::x().degree() == 1);
  CHECK(BitPoly::monomial(130).degree() == 130);
  const BitPoly p = BitPoly::from_exponents({7, 5, 3, 1, 0});
  CHECK(p.to_string() == "X^7+X^5+X^3+X+1");
  CHECK(p.weight() == 5);
  CHECK(p.exponents() == std::vector<int>{0, 1, 3, 5, 7});
  CHECK(BitPoly().to_string() == "0");
  CHECK(BitPoly(std::vector<BitPoly::Word>{5, 0, 0}).words().size() == 1);
}

TEST_CASE("hex round trip") {
  CHECK(BitPoly::from_hex("7") == BitPoly::from_exponents({2, 1, 0}));
  CHECK(BitPoly::from_hex("0").is_zero());
  CHECK(BitPoly().to_hex() == "0");
  CHECK(BitPoly::from_exponents({4}).to_hex() == "01");
  CHECK_THROWS_AS(BitPoly::from_hex(""), ParseError);
  CHECK_THROWS_AS(BitPoly::from_hex("70"), ParseError);
  CHECK_THROWS_AS(BitPoly::from_hex("7g"), ParseError);
  CHECK_THROWS_AS(BitPoly::from_hex("A"), ParseError);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const BitPoly p = random_poly(rng, static_cast<int>(rng() % 300));
    REQUIRE(BitPoly::from_hex(p.to_hex()) == p);
  }
}

TEST_CASE("pentanomial shapes") {
  CHECK(pent_poly(PentShape::create(7, 2)).to_string() == "X^7+X^5+X^3+X+1");
  CHECK(pent_poly(PentShape::create(25, 6)).to_string() == "X^25+X^19+X^13+X^7+1");
  CHECK_THROWS_AS(PentShape::create(7, 3), ShapeError);
  CHECK_THROWS_AS(PentShape::create(6, 1), ShapeError);
  CHECK_THROWS_AS(PentShape::create(9, 0), ShapeError);
  CHECK_FALSE(PentShape::try_create(9, 3).has_value());
  CHECK(PentShape::try_create(10, 3).has_value());
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(BitPoly::from_exponents({7, 5, 3, 1, 0})).to_string() == "X^7+X^6+X^4+X^2+1");
  CHECK(reciprocal(BitPoly::from_hex("7")) == BitPoly::from_hex("7"));
  CHECK_THROWS_AS(reciprocal(BitPoly::from_exponents({3, 1})), DomainError);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    BitPoly p = random_poly(rng, 1 + static_cast<int>(rng() % 200));
    if (!p.constant_term()) p ^= BitPoly::one();
    REQUIRE(reciprocal(reciprocal(p)) == p);
  }
}

TEST_CASE("basic ring operations") {
  const BitPoly xp1 = BitPoly::from_exponents({1, 0});
  CHECK(mul(xp1, xp1) == BitPoly::from_exponents({2, 0}));
  CHECK(derivative(BitPoly::from_exponents({4, 2, 0})).is_zero());
  CHECK(derivative(BitPoly::from_exponents({5, 4, 3, 1})) == BitPoly::from_exponents({4, 2, 0}));
  CHECK(gcd(BitPoly::from_exponents({2, 0}), xp1) == xp1);
  CHECK(square(xp1) == mul(xp1, xp1));
  CHECK_THROWS_AS(divrem(xp1, BitPoly()), DomainError);
  CHECK_THROWS_AS(rem(xp1, BitPoly()), DomainError);
  CHECK_THROWS_AS(gcd(BitPoly(), BitPoly()), DomainError);
  CHECK(gcd(BitPoly(), xp1) == xp1);
  CHECK(square_root(BitPoly::from_exponents({4, 2, 0})) == BitPoly::from_exponents({2, 1, 0}));
}

TEST_CASE("small products and remainders agree with the bit-mask oracle") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t a = rng() >> (rng() % 64), b = rng() >> (32 + rng() % 32);
    const auto [lo, hi] = oracle::clmul(a, b);
    REQUIRE(mul(from_mask(a), from_mask(b)) == BitPoly(std::vector<BitPoly::Word>{lo, hi}));
    if (b != 0) REQUIRE(rem(from_mask(a), from_mask(b)) == from_mask(oracle::mod64(a, b)));
  }
}

TEST_CASE("algebraic properties on large random inputs") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 60; ++i) {
    const BitPoly a = random_poly(rng, static_cast<int>(rng() % 4000));
    const BitPoly b = random_poly(rng, static_cast<int>(rng() % 4000));
    const BitPoly c = random_poly(rng, static_cast<int>(rng() % 2000));
    const BitPoly m = random_poly(rng, 1 + static_cast<int>(rng() % 900));

    const BitPoly ab = mul(a, b);
    REQUIRE(ab.degree() == a.degree() + b.degree());
    REQUIRE(ab == mul(b, a));
    REQUIRE(mul(a, b + c) == ab + mul(a, c));
    REQUIRE(square(a) == mul(a, a));

    const DivRem qr = divrem(a, m);
    REQUIRE(qr.remainder.degree() < m.degree());
    REQUIRE(mul(qr.quotient, m) + qr.remainder == a);
    REQUIRE(rem(ab, m) == rem(mul(rem(a, m), rem(b, m)), m));

    const BitPoly g = gcd(a, b);
    REQUIRE(g == gcd(b, a));
    REQUIRE(rem(a, g).is_zero());
    REQUIRE(rem(b, g).is_zero());
    REQUIRE(gcd(mul(a, c), mul(b, c)) == mul(g, c));

    REQUIRE(derivative(ab) == mul(derivative(a), b) + mul(a, derivative(b)));
    REQUIRE(square_root(square(a)) == a);
  }
}

TEST_CASE("Modulus reduction agrees with long division") {
  std::mt19937_64 rng(15);
  std::vector<BitPoly> moduli = {BitPoly::from_exponents({1, 0}), BitPoly::from_exponents({64, 1}),
                                 BitPoly::from_exponents({63, 1, 0}),
                                 BitPoly::from_exponents({128, 7, 2, 1, 0}),
                                 pent_poly(PentShape::create(2999, 6)),
                                 pent_poly(PentShape::create(127, 42))};
  for (int i = 0; i < 20; ++i) moduli.push_back(random_poly(rng, 1 + static_cast<int>(rng() % 700)));
  for (const BitPoly& m : moduli) {
    CAPTURE(m.degree());
    const Modulus mod(m);
    for (int j = 0; j < 6; ++j) {
      const BitPoly a = random_poly(rng, static_cast<int>(rng() % (2 * m.degree() + 70)));
      const BitPoly b = random_poly(rng, static_cast<int>(rng() % (m.degree() + 1)));
      const BitPoly ra = mod.reduce(a);
      REQUIRE(ra == divrem(a, m).remainder);
      REQUIRE(mod.mul(ra, mod.reduce(b)) == divrem(mul(a, b), m).remainder);
      REQUIRE(mod.sqr(ra) == divrem(square(a), m).remainder);
    }
  }
  CHECK(Modulus(pent_poly(PentShape::create(101, 10))).sparse());
  CHECK_THROWS_AS(Modulus(BitPoly::one()), DomainError);
}
