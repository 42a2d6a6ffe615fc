#pragma once

// Word-level GF(2)[X] primitives.
//
// A polynomial is a little-endian array of 64-bit words: bit i of word j is the
// coefficient of X^(64*j + i). Every KernelSet computes bit-identical results;
// the sets differ only in the instructions they use. `best()` picks the fastest
// set the running CPU supports, once, on first use.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace pentparity::kernels {

using Word = std::uint64_t;

struct Product128 {
  Word lo;
  Word hi;

  friend bool operator==(const Product128&, const Product128&) = default;
};

struct KernelSet {
  std::string_view name;

  // Carry-less 64x64 -> 128 bit product.
  Product128 (*clmul)(Word a, Word b);

  // out ^= a * b. out.size() must be at least a.size() + b.size().
  void (*mul_acc)(std::span<Word> out, std::span<const Word> a, std::span<const Word> b);

  // out = a^2 (bit spreading). out.size() must be at least 2 * a.size();
  // words beyond that are left untouched.
  void (*square)(std::span<Word> out, std::span<const Word> a);

  // dst ^= src * X^shift. Words that would land at or beyond dst.size() are
  // dropped; callers size dst so that only zero bits can fall off.
  void (*xor_shifted)(std::span<Word> dst, std::span<const Word> src, std::size_t shift);
};

const KernelSet& scalar();

// PCLMULQDQ + AVX2 implementation, or nullptr when the build target or the
// running CPU lacks either extension.
const KernelSet* x86_clmul();

const KernelSet& best();

}  // namespace pentparity::kernels
