#pragma once

#include <vector>

#include "pentparity/bitpoly.hpp"
#include "pentparity/kernels.hpp"

namespace pentparity {

// Precomputed reduction context for arithmetic in GF(2)[X] / (m).
//
// Reduction works a word at a time. The modulus is shifted by X^z so that its
// degree is a multiple of 64; the quotient word for each high word of the
// dividend then comes from a single Barrett step on the top 65 coefficients.
// Sparse moduli (few terms, e.g. pentanomials) subtract q * m term by term,
// which makes squaring modulo a pentanomial linear in the degree.
class Modulus {
 public:
  explicit Modulus(const BitPoly& m);  // deg(m) >= 1, else DomainError

  const BitPoly& poly() const { return poly_; }
  int degree() const { return degree_; }
  bool sparse() const { return !shifted_terms_.empty(); }

  BitPoly reduce(const BitPoly& a) const;
  BitPoly mul(const BitPoly& a, const BitPoly& b) const;
  BitPoly sqr(const BitPoly& a) const;

  // In-place reduction of an arbitrary word buffer. On return the buffer holds
  // at most words_per_residue() words and represents a polynomial of degree
  // below degree().
  void reduce_words(std::vector<BitPoly::Word>& buf) const;
  std::size_t words_per_residue() const { return residue_words_; }

 private:
  BitPoly poly_;
  int degree_;
  int shift_;                    // z: deg(m) + z is a multiple of 64
  std::size_t top_word_;         // L: the shifted modulus has degree 64 L
  std::size_t residue_words_;
  std::vector<BitPoly::Word> shifted_;  // m * X^z, L + 1 words
  std::vector<int> shifted_terms_;      // exponents of m * X^z below 64 L, if sparse
  BitPoly::Word barrett_mu_;            // floor(X^128 / top65(m X^z)) - X^64
  const kernels::KernelSet* k_;
};

}  // namespace pentparity
