#include "pentparity/bitpoly.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "pentparity/errors.hpp"
#include "pentparity/kernels.hpp"
#include "pentparity/modulus.hpp"
#include "word_ops.hpp"

namespace pentparity {

using Word = BitPoly::Word;

BitPoly::BitPoly(std::vector<Word> words) : words_(std::move(words)) { normalize(); }

BitPoly BitPoly::adopt(std::vector<Word>&& words) {
  BitPoly p;
  p.words_ = std::move(words);
  p.normalize();
  return p;
}

void BitPoly::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
  degree_ = words_.empty() ? kZeroDegree
                           : static_cast<int>(64 * (words_.size() - 1)) + 63 -
                                 std::countl_zero(words_.back());
}

BitPoly BitPoly::monomial(int exponent) {
  if (exponent < 0) throw DomainError("monomial: negative exponent");
  std::vector<Word> w(static_cast<std::size_t>(exponent) / 64 + 1, 0);
  w.back() = Word{1} << (exponent % 64);
  return adopt(std::move(w));
}

BitPoly BitPoly::from_exponents(std::initializer_list<int> exponents) {
  return from_exponents(std::span<const int>(exponents.begin(), exponents.size()));
}

BitPoly BitPoly::from_exponents(std::span<const int> exponents) {
  int top = -1;
  for (int e : exponents) {
    if (e < 0) throw DomainError("from_exponents: negative exponent");
    top = std::max(top, e);
  }
  if (top < 0) return {};
  std::vector<Word> w(static_cast<std::size_t>(top) / 64 + 1, 0);
  for (int e : exponents) w[e / 64] ^= Word{1} << (e % 64);
  return adopt(std::move(w));
}

bool BitPoly::coeff(int i) const {
  if (i < 0 || i > degree_) return false;
  return (words_[i / 64] >> (i % 64)) & 1;
}

std::size_t BitPoly::weight() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<int> BitPoly::exponents() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < words_.size(); ++j) {
    for (Word w = words_[j]; w != 0; w &= w - 1) {
      out.push_back(static_cast<int>(64 * j) + std::countr_zero(w));
    }
  }
  return out;
}

BitPoly& BitPoly::operator^=(const BitPoly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  normalize();
  return *this;
}

BitPoly BitPoly::from_hex(std::string_view hex) {
  if (hex.empty()) throw ParseError("empty hex polynomial");
  if (hex.size() > 1 && hex.back() == '0') {
    throw ParseError("hex polynomial has a trailing zero nibble: " + std::string(hex));
  }
  std::vector<Word> w((hex.size() + 15) / 16, 0);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const char c = hex[i];
    Word nibble;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<Word>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<Word>(c - 'a' + 10);
    } else {
      throw ParseError("invalid hex digit '" + std::string(1, c) + "' in " + std::string(hex));
    }
    w[i / 16] |= nibble << (4 * (i % 16));
  }
  return adopt(std::move(w));
}

std::string BitPoly::to_hex() const {
  if (is_zero()) return "0";
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t nibbles = static_cast<std::size_t>(degree_) / 4 + 1;
  std::string out(nibbles, '0');
  for (std::size_t i = 0; i < nibbles; ++i) {
    out[i] = kDigits[(words_[i / 16] >> (4 * (i % 16))) & 15];
  }
  return out;
}

std::string BitPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  const std::vector<int> exps = exponents();
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    if (!out.empty()) out += '+';
    if (*it == 0) {
      out += '1';
    } else if (*it == 1) {
      out += 'X';
    } else {
      out += "X^" + std::to_string(*it);
    }
  }
  return out;
}

PentShape PentShape::create(int n, int s) {
  if (!valid(n, s)) {
    throw ShapeError("invalid class 2 pentanomial shape (n=" + std::to_string(n) +
                     ", s=" + std::to_string(s) + "): need s >= 1, n >= 7, n > 3s");
  }
  return PentShape(n, s);
}

std::optional<PentShape> PentShape::try_create(int n, int s) {
  if (!valid(n, s)) return std::nullopt;
  return PentShape(n, s);
}

BitPoly pent_poly(const PentShape& shape) {
  const int n = shape.n();
  const int s = shape.s();
  return BitPoly::from_exponents({n, n - s, n - 2 * s, n - 3 * s, 0});
}

BitPoly reciprocal(const BitPoly& p) {
  if (!p.constant_term()) throw DomainError("reciprocal: constant term must be 1");
  const int d = p.degree();
  std::vector<int> exps = p.exponents();
  for (int& e : exps) e = d - e;
  return BitPoly::from_exponents(exps);
}

BitPoly mul(const BitPoly& a, const BitPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Word> out(a.words().size() + b.words().size(), 0);
  detail::mul_words(out, a.words(), b.words(), kernels::best());
  return BitPoly::adopt(std::move(out));
}

BitPoly square(const BitPoly& a) {
  if (a.is_zero()) return {};
  std::vector<Word> out(2 * a.words().size(), 0);
  kernels::best().square(out, a.words());
  return BitPoly::adopt(std::move(out));
}

BitPoly derivative(const BitPoly& p) {
  // d/dX X^e = e X^(e-1): odd exponents survive, shifted down by one.
  std::vector<Word> w(p.words().begin(), p.words().end());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = (w[i] >> 1) & 0x5555'5555'5555'5555ULL;
  }
  return BitPoly::adopt(std::move(w));
}

DivRem divrem(const BitPoly& a, const BitPoly& m) {
  if (m.is_zero()) throw DomainError("division by the zero polynomial");
  const int dm = m.degree();
  int da = a.degree();
  if (da < dm) return {BitPoly{}, a};

  const auto& k = kernels::best();
  std::vector<Word> r(a.words().begin(), a.words().end());
  std::vector<Word> q(static_cast<std::size_t>(da - dm) / 64 + 1, 0);
  while (da >= dm) {
    const int shift = da - dm;
    q[shift / 64] |= Word{1} << (shift % 64);
    k.xor_shifted(r, m.words(), static_cast<std::size_t>(shift));
    da = detail::degree_below(r, da);
  }
  return {BitPoly::adopt(std::move(q)), BitPoly::adopt(std::move(r))};
}

BitPoly rem(const BitPoly& a, const BitPoly& m) {
  if (m.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.degree() < m.degree()) return a;
  if (m.degree() == 0) return {};
  if (a.degree() - m.degree() >= 64) return Modulus(m).reduce(a);
  return divrem(a, m).remainder;
}

BitPoly gcd(const BitPoly& a, const BitPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  std::vector<Word> x(a.words().begin(), a.words().end());
  std::vector<Word> y(b.words().begin(), b.words().end());
  detail::gcd_in_place(x, y, kernels::best());
  return BitPoly::adopt(std::move(x));
}

BitPoly square_root(const BitPoly& p) {
  std::vector<Word> out((p.words().size() + 1) / 2, 0);
  const auto w = p.words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] & 0xAAAA'AAAA'AAAA'AAAAULL) throw DomainError("square_root: not a perfect square");
    Word x = w[i] & 0x5555'5555'5555'5555ULL;
    x = (x | (x >> 1)) & 0x3333'3333'3333'3333ULL;
    x = (x | (x >> 2)) & 0x0F0F'0F0F'0F0F'0F0FULL;
    x = (x | (x >> 4)) & 0x00FF'00FF'00FF'00FFULL;
    x = (x | (x >> 8)) & 0x0000'FFFF'0000'FFFFULL;
    x = (x | (x >> 16)) & 0x0000'0000'FFFF'FFFFULL;
    out[i / 2] |= x << (32 * (i % 2));
  }
  return BitPoly::adopt(std::move(out));
}

}  // namespace pentparity
