#pragma once

#include <bit>
#include <span>
#include <vector>

#include "pentparity/bitpoly.hpp"
#include "pentparity/kernels.hpp"

namespace pentparity::detail {

using Word = BitPoly::Word;

// Degree of a word buffer, scanning down from bit `hint` (inclusive).
inline int degree_below(std::span<const Word> w, int hint) {
  if (hint < 0) return BitPoly::kZeroDegree;
  std::size_t j = static_cast<std::size_t>(hint) / 64;
  if (j >= w.size()) j = w.size() - 1;
  for (std::size_t i = j + 1; i-- > 0;) {
    if (w[i] != 0) return static_cast<int>(64 * i) + 63 - std::countl_zero(w[i]);
  }
  return BitPoly::kZeroDegree;
}

inline int degree_of(std::span<const Word> w) {
  return w.empty() ? BitPoly::kZeroDegree : degree_below(w, static_cast<int>(64 * w.size()) - 1);
}

// Below this many words per operand Karatsuba does not pay for itself.
inline constexpr std::size_t kKaratsubaWords = 24;

// out ^= a * b; out.size() >= a.size() + b.size().
void mul_words(std::span<Word> out, std::span<const Word> a, std::span<const Word> b,
               const kernels::KernelSet& k);

// x <- gcd(x, y). y is clobbered. Not both zero.
void gcd_in_place(std::vector<Word>& x, std::vector<Word>& y, const kernels::KernelSet& k);

}  // namespace pentparity::detail
