#include "kernels_impl.hpp"

namespace pentparity::kernels {
namespace {

// 4-bit windowed carry-less multiply. The top three bits of b are handled
// separately so that every table entry fits in one word.
Product128 clmul_scalar(Word a, Word b) {
  const Word low_b = b & 0x1FFF'FFFF'FFFF'FFFFULL;
  Word table[16];
  table[0] = 0;
  for (int i = 1; i < 16; ++i) {
    table[i] = (table[i >> 1] << 1) ^ ((i & 1) ? low_b : 0);
  }

  Word lo = table[a & 15];
  Word hi = 0;
  for (int i = 4; i < 64; i += 4) {
    const Word t = table[(a >> i) & 15];
    lo ^= t << i;
    hi ^= t >> (64 - i);
  }
  for (int j = 61; j < 64; ++j) {
    const Word mask = Word{0} - ((b >> j) & 1);
    lo ^= (a << j) & mask;
    hi ^= (a >> (64 - j)) & mask;
  }
  return {lo, hi};
}

void mul_acc_scalar(std::span<Word> out, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Product128 p = clmul_scalar(a[i], b[j]);
      out[i + j] ^= p.lo;
      out[i + j + 1] ^= p.hi;
    }
  }
}

Word spread32(std::uint32_t v) {
  Word x = v;
  x = (x | (x << 16)) & 0x0000'FFFF'0000'FFFFULL;
  x = (x | (x << 8)) & 0x00FF'00FF'00FF'00FFULL;
  x = (x | (x << 4)) & 0x0F0F'0F0F'0F0F'0F0FULL;
  x = (x | (x << 2)) & 0x3333'3333'3333'3333ULL;
  x = (x | (x << 1)) & 0x5555'5555'5555'5555ULL;
  return x;
}

void square_scalar(std::span<Word> out, std::span<const Word> a) {
  // Walk downwards so that out may alias a.
  for (std::size_t i = a.size(); i-- > 0;) {
    const Word w = a[i];
    out[2 * i + 1] = spread32(static_cast<std::uint32_t>(w >> 32));
    out[2 * i] = spread32(static_cast<std::uint32_t>(w));
  }
}

}  // namespace

void xor_shifted_scalar(std::span<Word> dst, std::span<const Word> src, std::size_t shift) {
  const std::size_t word_shift = shift / 64;
  const unsigned bit_shift = shift % 64;
  const std::size_t n = dst.size();
  if (bit_shift == 0) {
    for (std::size_t i = 0; i < src.size() && i + word_shift < n; ++i) {
      dst[i + word_shift] ^= src[i];
    }
    return;
  }
  Word carry = 0;
  std::size_t i = 0;
  for (; i < src.size() && i + word_shift < n; ++i) {
    dst[i + word_shift] ^= (src[i] << bit_shift) | carry;
    carry = src[i] >> (64 - bit_shift);
  }
  if (i == src.size() && i + word_shift < n) dst[i + word_shift] ^= carry;
}

const KernelSet& scalar() {
  static const KernelSet set{"scalar", clmul_scalar, mul_acc_scalar, square_scalar,
                             xor_shifted_scalar};
  return set;
}

}  // namespace pentparity::kernels
