#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pentparity/errors.hpp"
#include "pentparity/factor.hpp"

using namespace pentparity;

namespace {

BitPoly from_mask(std::uint64_t m) { return BitPoly(std::vector<BitPoly::Word>{m}); }
BitPoly pent(int n, int s) { return pent_poly(PentShape::create(n, s)); }
const BitPoly kX2X1 = BitPoly::from_exponents({2, 1, 0});
const BitPoly kX4X2 = BitPoly::from_exponents({4, 2, 0});

}  // namespace

TEST_CASE("squarefree") {
  CHECK_FALSE(is_squarefree(kX4X2));
  CHECK(is_squarefree(kX2X1));
  CHECK(is_squarefree(pent(7, 2)));
  const auto parts = squarefree_decomposition(kX4X2);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].factor == kX2X1);
  CHECK(parts[0].multiplicity == 2);
}

TEST_CASE("squarefree decomposition reassembles the input") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    BitPoly p = BitPoly::one();
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < k; ++j) {
      const BitPoly f = from_mask((rng() >> 50) | 2);
      for (int e = 0; e < 1 + static_cast<int>(rng() % 5); ++e) p = mul(p, f);
    }
    BitPoly back = BitPoly::one();
    for (const auto& part : squarefree_decomposition(p)) {
      REQUIRE(is_squarefree(part.factor));
      for (int e = 0; e < part.multiplicity; ++e) back = mul(back, part.factor);
    }
    REQUIRE(back == p);
  }
}

TEST_CASE("Frobenius powers") {
  CHECK(pow_frobenius(kX2X1, 1) == BitPoly::from_exponents({1, 0}));
  CHECK(pow_frobenius(kX2X1, 2) == BitPoly::x());
  CHECK(pow_frobenius(kX4X2, 0) == BitPoly::x());
  CHECK(pow_frobenius(BitPoly::x(), 0).is_zero());
  // additivity: X^(2^(a+b)) = (X^(2^a))^(2^b) evaluated by composition
  const BitPoly m = pent(61, 14);
  const BitPoly a3 = pow_frobenius(m, 3);
  BitPoly sq = a3;
  for (int i = 0; i < 4; ++i) sq = rem(square(sq), m);
  CHECK(sq == pow_frobenius(m, 7));
}

TEST_CASE("irreducibility of the named shapes") {
  CHECK(is_irreducible(pent(7, 2)));
  CHECK_FALSE(is_irreducible(pent(11, 2)));
  CHECK_FALSE(is_irreducible(pent(9, 2)));
  CHECK(is_irreducible(kX2X1));
  CHECK(is_irreducible(BitPoly::x()));
  CHECK_FALSE(is_irreducible(kX4X2));
  CHECK_THROWS_AS(is_irreducible(BitPoly::one()), DomainError);
}

TEST_CASE("factor counts") {
  CHECK(factor_count(kX2X1).total == 1);
  CHECK(factor_count(kX4X2).total == 2);
  const FactorCount f11 = factor_count(pent(11, 2));
  CHECK(f11.total % 2 == 0);
  CHECK(f11.parity().parity == Parity::even);
  CHECK(f11.by_degree == oracle::trial_factor(pent(11, 2).words()[0]));
  const FactorCount f9 = factor_count(pent(9, 2));
  CHECK(f9.total % 2 == 1);
  CHECK(f9.total > 1);
}

TEST_CASE("brute force agrees with trial division on random polynomials") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 3000; ++i) {
    const int deg = 1 + static_cast<int>(rng() % 24);
    const std::uint64_t mask = (rng() & ((std::uint64_t{1} << deg) - 1)) | (std::uint64_t{1} << deg);
    const BitPoly p = from_mask(mask);
    const auto expect = oracle::trial_factor(mask);
    const FactorCount fc = factor_count(p);
    REQUIRE(fc.by_degree == expect);
    REQUIRE(is_irreducible(p) == (fc.total == 1));
  }
}

TEST_CASE("irreducible iff one factor, degrees up to 63") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 400; ++i) {
    const int deg = 25 + static_cast<int>(rng() % 39);
    std::uint64_t mask = rng() & ((std::uint64_t{1} << deg) - 1);
    mask |= (std::uint64_t{1} << deg) | 1;
    const BitPoly p = from_mask(mask);
    const FactorCount fc = factor_count(p);
    REQUIRE(is_irreducible(p) == (fc.total == 1));
    long deg_sum = 0;
    for (const auto& [d, c] : fc.by_degree) deg_sum += d * c;
    REQUIRE(deg_sum == deg);
  }
}

TEST_CASE("reciprocal preserves the factor pattern") {
  for (int n = 7; n < 120; n += 2)
    for (int s = 2; 3 * s < n; s += 2) {
      const BitPoly p = pent(n, s);
      REQUIRE(factor_count(p).by_degree == factor_count(reciprocal(p)).by_degree);
    }
}

TEST_CASE("small factor detection") {
  CHECK(has_factor_of_degree_le(kX4X2, 2));
  CHECK_FALSE(has_factor_of_degree_le(pent(7, 2), 3));
  const auto expect13 = oracle::trial_factor(pent(13, 2).words()[0]);
  CHECK(has_factor_of_degree_le(pent(13, 2), 6) == (expect13.begin()->first <= 6));
  CHECK_THROWS_AS(has_factor_of_degree_le(pent(7, 2), 7), DomainError);
  CHECK_THROWS_AS(has_factor_of_degree_le(pent(7, 2), 0), DomainError);

  std::mt19937_64 rng(24);
  for (int i = 0; i < 1000; ++i) {
    const int deg = 8 + static_cast<int>(rng() % 30);
    const std::uint64_t mask =
        (rng() & ((std::uint64_t{1} << deg) - 1)) | (std::uint64_t{1} << deg) | 1;
    const int smallest = oracle::trial_factor(mask).begin()->first;
    const BitPoly p = from_mask(mask);
    for (int d : {1, 3, 5, 7}) {
      REQUIRE(has_factor_of_degree_le(p, d) == (smallest <= d));
      const auto sd = smallest_factor_degree(p, d);
      if (smallest <= d) {
        REQUIRE(sd == smallest);
      } else {
        REQUIRE_FALSE(sd.has_value());
      }
    }
  }
}
