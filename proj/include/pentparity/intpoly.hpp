#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pentparity/bitpoly.hpp"

namespace pentparity {

// Sparse polynomial with arbitrary-precision integer coefficients.
// Terms are kept with strictly decreasing exponents and nonzero coefficients.
class IntPoly {
 public:
  struct Term {
    int exponent;
    mpz_class coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  IntPoly() = default;
  static IntPoly from_terms(std::vector<Term> terms);  // merges and sorts
  static IntPoly from_dense(std::span<const mpz_class> coeffs);  // coeffs[i] of X^i
  static IntPoly from_dense(std::initializer_list<long> coeffs);

  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : terms_.front().exponent; }
  bool is_monic() const { return !terms_.empty() && terms_.front().coeff == 1; }
  mpz_class coeff(int exponent) const;
  mpz_class constant_term() const { return coeff(0); }
  const mpz_class& leading_coeff() const { return terms_.front().coeff; }
  const std::vector<Term>& terms() const { return terms_; }

  // Lowest exponent carrying a nonzero coefficient (X-adic valuation).
  int valuation() const { return terms_.empty() ? -1 : terms_.back().exponent; }

  std::vector<mpz_class> dense() const;  // size degree() + 1
  BitPoly reduce_mod2() const;

  std::string to_string() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<Term> terms_;
};

IntPoly derivative(const IntPoly& f);
IntPoly reciprocal(const IntPoly& f);  // X^deg f * f(1/X); f(0) != 0

// 0/1-coefficient integer lift of a nonzero binary polynomial.
IntPoly lift(const BitPoly& p);

// n F(X) - X F'(X), n = deg F. F monic, deg F >= 1.
IntPoly h_poly(const IntPoly& f);

// Modulus for power-sum tables: exact integers, or residues mod 2^k.
struct SumModulus {
  int bits = 0;  // 0 means exact

  static SumModulus exact() { return {0}; }
  static SumModulus pow2(int k);
  bool is_exact() const { return bits == 0; }
  std::string to_string() const;

  friend bool operator==(const SumModulus&, const SumModulus&) = default;
};

// S_0 .. S_upto of the roots of a monic integer polynomial.
class PowerSumTable {
 public:
  PowerSumTable(std::vector<mpz_class> values, SumModulus modulus, int degree)
      : values_(std::move(values)), modulus_(modulus), degree_(degree) {}

  const mpz_class& operator[](int m) const { return values_.at(static_cast<std::size_t>(m)); }
  int upto() const { return static_cast<int>(values_.size()) - 1; }
  SumModulus modulus() const { return modulus_; }
  int degree() const { return degree_; }
  const std::vector<mpz_class>& values() const { return values_; }

 private:
  std::vector<mpz_class> values_;
  SumModulus modulus_;
  int degree_;
};

// Newton's identities. F monic, upto >= 0.
PowerSumTable power_sums(const IntPoly& f, int upto, SumModulus modulus = SumModulus::exact());

// T_k = sum_{i<j} (a_i a_j)^k = (S_k^2 - S_2k) / 2. Needs an exact table
// reaching 2k.
mpz_class second_power_sums(const PowerSumTable& table, int k);

// S_-1 .. S_-count from the series X F'(X) sum_{i>=0} (-1)^(i+1) (F(X)-1)^i.
// F monic with F(0) = 1.
std::vector<mpz_class> neg_power_sums(const IntPoly& f, int count);

// Res(A, B) by the subresultant pseudo-remainder sequence. A monic,
// deg A >= 1, B nonzero. Equals prod B(a_i) over the roots a_i of A.
mpz_class resultant(const IntPoly& a, const IntPoly& b);

// Discriminant of a monic F with F(0) = 1, as (-1)^(n(n-1)/2) Res(F, H).
mpz_class discriminant(const IntPoly& f);
// The textbook route (-1)^(n(n-1)/2) Res(F, F'), for any monic F of degree >= 1.
mpz_class discriminant_classic(const IntPoly& f);

// discriminant(F) mod 8, in 0..7.
int discriminant_mod8(const IntPoly& f);
int discriminant_mod8_classic(const IntPoly& f);

// Nonnegative residue of v mod 2^bits.
mpz_class mod_pow2(const mpz_class& v, int bits);
int mod8(const mpz_class& v);

}  // namespace pentparity
