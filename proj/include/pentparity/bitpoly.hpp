#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pentparity {

// Dense polynomial over GF(2). Coefficients are packed 64 per word, bit i of
// the packed vector being the coefficient of X^i. The word vector never
// carries high zero words, so equality is plain vector equality.
class BitPoly {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  // Degree reported for the zero polynomial. Below every real degree; no
  // operation accepts it as a size.
  static constexpr int kZeroDegree = -1;

  BitPoly() = default;
  explicit BitPoly(std::vector<Word> words);

  static BitPoly one() { return monomial(0); }
  static BitPoly x() { return monomial(1); }
  static BitPoly monomial(int exponent);
  static BitPoly from_exponents(std::initializer_list<int> exponents);
  static BitPoly from_exponents(std::span<const int> exponents);

  // Lowercase hex, little-endian nibble order: the first digit holds
  // X^0..X^3. Zero is "0"; no other string ends in '0'.
  static BitPoly from_hex(std::string_view hex);
  std::string to_hex() const;

  // "X^7+X^5+X^3+X+1"; "0" for zero.
  std::string to_string() const;

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  int degree() const { return degree_; }
  bool coeff(int i) const;
  bool constant_term() const { return !words_.empty() && (words_[0] & 1); }
  std::size_t weight() const;
  std::vector<int> exponents() const;  // ascending

  std::span<const Word> words() const { return words_; }

  BitPoly& operator^=(const BitPoly& other);
  friend BitPoly operator+(BitPoly a, const BitPoly& b) { return a ^= b; }
  friend bool operator==(const BitPoly& a, const BitPoly& b) { return a.words_ == b.words_; }

  // Takes ownership of a raw word buffer and trims it.
  static BitPoly adopt(std::vector<Word>&& words);

 private:
  void normalize();

  std::vector<Word> words_;
  int degree_ = kZeroDegree;
};

// The pair (n, s) of a class 2 pentanomial X^n + X^(n-s) + X^(n-2s) + X^(n-3s) + 1.
class PentShape {
 public:
  static PentShape create(int n, int s);  // throws ShapeError
  static std::optional<PentShape> try_create(int n, int s);
  static bool valid(int n, int s) { return s >= 1 && n >= 7 && n > 3 * s; }

  int n() const { return n_; }
  int s() const { return s_; }

  friend bool operator==(const PentShape&, const PentShape&) = default;
  friend auto operator<=>(const PentShape&, const PentShape&) = default;

 private:
  PentShape(int n, int s) : n_(n), s_(s) {}
  int n_;
  int s_;
};

BitPoly pent_poly(const PentShape& shape);

// X^deg(p) * p(1/X). Requires p(0) = 1 so that the degree is preserved.
BitPoly reciprocal(const BitPoly& p);

BitPoly mul(const BitPoly& a, const BitPoly& b);
BitPoly square(const BitPoly& a);
BitPoly derivative(const BitPoly& p);

struct DivRem {
  BitPoly quotient;
  BitPoly remainder;
};
DivRem divrem(const BitPoly& a, const BitPoly& m);
BitPoly rem(const BitPoly& a, const BitPoly& m);
BitPoly gcd(const BitPoly& a, const BitPoly& b);

// p^(1/2) for a perfect square p (only even exponents present).
BitPoly square_root(const BitPoly& p);

}  // namespace pentparity
