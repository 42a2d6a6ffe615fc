#include "pentparity/modulus.hpp"

#include <algorithm>
#include <bit>

#include "pentparity/errors.hpp"
#include "word_ops.hpp"

namespace pentparity {

using Word = BitPoly::Word;

namespace detail {

namespace {

void mul_rec(std::span<Word> out, std::span<const Word> a, std::span<const Word> b,
             const kernels::KernelSet& k) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (nb == 0) return;
  if (nb < kKaratsubaWords) {
    k.mul_acc(out, a, b);
    return;
  }
  if (na >= 2 * nb) {
    // Unbalanced: slice the longer operand into chunks the size of the shorter.
    for (std::size_t off = 0; off < na; off += nb) {
      const std::size_t len = std::min(nb, na - off);
      mul_rec(out.subspan(off), a.subspan(off, len), b, k);
    }
    return;
  }

  // a = a0 + a1 X^(64h), b = b0 + b1 X^(64h), with nb > h.
  const std::size_t h = (na + 1) / 2;
  const auto a0 = a.first(h);
  const auto a1 = a.subspan(h);
  const auto b0 = b.first(std::min(h, nb));
  const auto b1 = b.subspan(std::min(h, nb));

  std::vector<Word> lo(2 * h, 0);
  std::vector<Word> hi(a1.size() + b1.size(), 0);
  mul_rec(lo, a0, b0, k);
  mul_rec(hi, a1, b1, k);

  std::vector<Word> sa(h, 0);
  std::vector<Word> sb(h, 0);
  for (std::size_t i = 0; i < h; ++i) {
    sa[i] = a0[i] ^ (i < a1.size() ? a1[i] : 0);
    sb[i] = (i < b0.size() ? b0[i] : 0) ^ (i < b1.size() ? b1[i] : 0);
  }
  std::vector<Word> mid(2 * h, 0);
  mul_rec(mid, sa, sb, k);
  for (std::size_t i = 0; i < lo.size(); ++i) mid[i] ^= lo[i];
  for (std::size_t i = 0; i < hi.size(); ++i) mid[i] ^= hi[i];

  for (std::size_t i = 0; i < lo.size(); ++i) out[i] ^= lo[i];
  for (std::size_t i = 0; i < hi.size(); ++i) out[2 * h + i] ^= hi[i];
  for (std::size_t i = 0; i < mid.size() && h + i < out.size(); ++i) out[h + i] ^= mid[i];
}

}  // namespace

void mul_words(std::span<Word> out, std::span<const Word> a, std::span<const Word> b,
               const kernels::KernelSet& k) {
  mul_rec(out, a, b, k);
}

void gcd_in_place(std::vector<Word>& x, std::vector<Word>& y, const kernels::KernelSet& k) {
  int dx = degree_of(x);
  int dy = degree_of(y);
  while (dy >= 0) {
    const std::span<const Word> ys(y.data(), static_cast<std::size_t>(dy) / 64 + 1);
    while (dx >= dy) {
      k.xor_shifted(x, ys, static_cast<std::size_t>(dx - dy));
      dx = degree_below(x, dx);
    }
    std::swap(x, y);
    std::swap(dx, dy);
  }
}

}  // namespace detail

Modulus::Modulus(const BitPoly& m) : poly_(m), degree_(m.degree()), k_(&kernels::best()) {
  if (degree_ < 1) throw DomainError("modulus must have degree >= 1");
  shift_ = (64 - degree_ % 64) % 64;
  top_word_ = static_cast<std::size_t>(degree_ + shift_) / 64;
  residue_words_ = static_cast<std::size_t>(degree_ - 1) / 64 + 1;

  shifted_.assign(top_word_ + 1, 0);
  k_->xor_shifted(shifted_, m.words(), static_cast<std::size_t>(shift_));

  // Barrett constant for M = X^64 + t, t the 64 coefficients under the lead:
  // mu = floor(X^128 / M) = X^64 + mu_lo. Long division, one bit at a time.
  const Word t = shifted_[top_word_ - 1];
  Word rem = t;  // X^128 - X^64 * M = X^64 * t, track the 64 bits below the lead.
  Word mu = 0;
  for (int i = 63; i >= 0; --i) {
    // Remainder currently has degree <= 64 + i; its X^(64+i) coefficient is
    // bit 63 of rem.
    const bool bit = (rem >> 63) & 1;
    rem <<= 1;
    if (bit) {
      mu |= Word{1} << i;
      rem ^= t;
    }
  }
  barrett_mu_ = mu;

  if (m.weight() <= 16) {
    for (int e : m.exponents()) {
      if (e != degree_) shifted_terms_.push_back(e + shift_);
    }
  }
}

void Modulus::reduce_words(std::vector<Word>& buf) const {
  if (detail::degree_of(buf) < degree_) {
    buf.resize(std::min(buf.size(), residue_words_));
    return;
  }
  const std::size_t L = top_word_;
  const std::size_t z = static_cast<std::size_t>(shift_);

  // buf <- buf * X^z
  if (z != 0) {
    buf.push_back(0);
    for (std::size_t i = buf.size() - 1; i > 0; --i) {
      buf[i] = (buf[i] << z) | (buf[i - 1] >> (64 - z));
    }
    buf[0] <<= z;
  }

  for (std::size_t w = buf.size(); w-- > L;) {
    const Word r = buf[w];
    if (r == 0) continue;
    const Word q = r ^ k_->clmul(r, barrett_mu_).hi;
    const std::size_t base = 64 * (w - L);
    buf[w] = 0;
    if (!shifted_terms_.empty()) {
      for (int e : shifted_terms_) {
        const std::size_t pos = base + static_cast<std::size_t>(e);
        const std::size_t j = pos / 64;
        const unsigned b = pos % 64;
        buf[j] ^= q << b;
        if (b != 0) buf[j + 1] ^= q >> (64 - b);
      }
    } else {
      const Word qw[1] = {q};
      k_->mul_acc(std::span<Word>(buf.data() + (w - L), L + 1),
                  std::span<const Word>(shifted_.data(), L), std::span<const Word>(qw, 1));
    }
  }
  buf.resize(L);

  // buf <- buf / X^z
  if (z != 0) {
    for (std::size_t i = 0; i + 1 < L; ++i) {
      buf[i] = (buf[i] >> z) | (buf[i + 1] << (64 - z));
    }
    buf[L - 1] >>= z;
  }
  buf.resize(residue_words_);
}

BitPoly Modulus::reduce(const BitPoly& a) const {
  if (a.degree() < degree_) return a;
  std::vector<Word> buf(a.words().begin(), a.words().end());
  reduce_words(buf);
  return BitPoly::adopt(std::move(buf));
}

BitPoly Modulus::mul(const BitPoly& a, const BitPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Word> buf(a.words().size() + b.words().size() + 1, 0);
  detail::mul_words(buf, a.words(), b.words(), *k_);
  reduce_words(buf);
  return BitPoly::adopt(std::move(buf));
}

BitPoly Modulus::sqr(const BitPoly& a) const {
  if (a.is_zero()) return {};
  std::vector<Word> buf(2 * a.words().size() + 1, 0);
  k_->square(buf, a.words());
  reduce_words(buf);
  return BitPoly::adopt(std::move(buf));
}

}  // namespace pentparity
