#include "kernels_impl.hpp"

#if defined(__x86_64__) && defined(__GNUC__)
#include <immintrin.h>

namespace pentparity::kernels {
namespace {

#define PP_TARGET __attribute__((target("pclmul,sse4.1,avx2")))

PP_TARGET Product128 clmul_x86(Word a, Word b) {
  const __m128i p = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                         _mm_cvtsi64_si128(static_cast<long long>(b)), 0x00);
  return {static_cast<Word>(_mm_cvtsi128_si64(p)),
          static_cast<Word>(_mm_extract_epi64(p, 1))};
}

PP_TARGET inline void xor128(Word* dst, __m128i v) {
  __m128i* p = reinterpret_cast<__m128i*>(dst);
  _mm_storeu_si128(p, _mm_xor_si128(_mm_loadu_si128(p), v));
}

PP_TARGET void mul_acc_x86(std::span<Word> out, std::span<const Word> a,
                           std::span<const Word> b) {
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const __m128i ai = _mm_set1_epi64x(static_cast<long long>(a[i]));
    Word* row = out.data() + i;
    std::size_t j = 0;
    // Two products per pair of b words; even and odd offsets overlap by one
    // word, so they are accumulated separately.
    for (; j + 2 <= nb; j += 2) {
      const __m128i bj = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b.data() + j));
      xor128(row + j, _mm_clmulepi64_si128(ai, bj, 0x00));
      xor128(row + j + 1, _mm_clmulepi64_si128(ai, bj, 0x10));
    }
    for (; j < nb; ++j) {
      const __m128i bj = _mm_cvtsi64_si128(static_cast<long long>(b[j]));
      xor128(row + j, _mm_clmulepi64_si128(ai, bj, 0x00));
    }
  }
}

PP_TARGET void square_x86(std::span<Word> out, std::span<const Word> a) {
  for (std::size_t i = a.size(); i-- > 0;) {
    const __m128i v = _mm_cvtsi64_si128(static_cast<long long>(a[i]));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out.data() + 2 * i),
                     _mm_clmulepi64_si128(v, v, 0x00));
  }
}

PP_TARGET void xor_shifted_x86(std::span<Word> dst, std::span<const Word> src,
                               std::size_t shift) {
  const std::size_t word_shift = shift / 64;
  const unsigned bit_shift = shift % 64;
  if (src.size() < 8 || word_shift >= dst.size()) {
    xor_shifted_scalar(dst, src, shift);
    return;
  }
  // Output word k (relative to word_shift) is (src[k] << b) | (src[k-1] >> (64-b)).
  // The vector loop covers k in [1, limit); k = 0 and the tail go scalar.
  const std::size_t room = dst.size() - word_shift;
  const std::size_t limit = std::min(src.size(), room);
  Word* out = dst.data() + word_shift;
  const Word* in = src.data();

  std::size_t k = 1;
  if (bit_shift == 0) {
    out[0] ^= in[0];
    for (; k + 4 <= limit; k += 4) {
      __m256i* o = reinterpret_cast<__m256i*>(out + k);
      const __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + k));
      _mm256_storeu_si256(o, _mm256_xor_si256(_mm256_loadu_si256(o), cur));
    }
    for (; k < limit; ++k) out[k] ^= in[k];
    return;
  }

  const __m128i left = _mm_cvtsi32_si128(static_cast<int>(bit_shift));
  const __m128i right = _mm_cvtsi32_si128(static_cast<int>(64 - bit_shift));
  out[0] ^= in[0] << bit_shift;
  for (; k + 4 <= limit; k += 4) {
    const __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + k));
    const __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + k - 1));
    const __m256i v = _mm256_or_si256(_mm256_sll_epi64(cur, left), _mm256_srl_epi64(prev, right));
    __m256i* o = reinterpret_cast<__m256i*>(out + k);
    _mm256_storeu_si256(o, _mm256_xor_si256(_mm256_loadu_si256(o), v));
  }
  for (; k < limit; ++k) out[k] ^= (in[k] << bit_shift) | (in[k - 1] >> (64 - bit_shift));
  if (limit == src.size() && limit < room) out[limit] ^= in[limit - 1] >> (64 - bit_shift);
}

#undef PP_TARGET

}  // namespace

const KernelSet* x86_clmul_unchecked() {
  static const KernelSet set{"x86-pclmul-avx2", clmul_x86, mul_acc_x86, square_x86,
                             xor_shifted_x86};
  return &set;
}

}  // namespace pentparity::kernels

#else

namespace pentparity::kernels {
const KernelSet* x86_clmul_unchecked() { return nullptr; }
}  // namespace pentparity::kernels

#endif
