#include "pentparity/swan.hpp"

#include "pentparity/errors.hpp"

namespace pentparity {
namespace {

bool is_pm1_mod8(int n) {
  const int r = ((n % 8) + 8) % 8;
  return r == 1 || r == 7;
}

bool is_pm3_mod8(int n) {
  const int r = ((n % 8) + 8) % 8;
  return r == 3 || r == 5;
}

void require_odd_n_even_s(const PentShape& shape, const char* op) {
  if (shape.n() % 2 == 0 || shape.s() % 2 != 0) {
    throw OutOfTheoryError(std::string(op) + ": closed form needs odd n and even s (got n=" +
                           std::to_string(shape.n()) + ", s=" + std::to_string(shape.s()) + ")");
  }
}

}  // namespace

ParityVerdict parity_from_discriminant(int deg_f, int d_mod8) {
  if (deg_f < 1) throw DomainError("parity_from_discriminant: degree must be >= 1");
  if (d_mod8 < 0 || d_mod8 > 7 || d_mod8 % 2 == 0) {
    throw DomainError("parity_from_discriminant: discriminant residue " + std::to_string(d_mod8) +
                      " is not odd; the binary polynomial is not squarefree");
  }
  const int t = (d_mod8 == 1) ? deg_f : deg_f + 1;
  return ParityVerdict::from_parity(parity_of(t), VerdictSource::discriminant);
}

ParityVerdict trinomial_parity(int n, int k) {
  if (!(n > k && k > 0)) throw DomainError("trinomial_parity: need n > k > 0");
  const bool n_odd = n % 2 != 0;
  const bool k_odd = k % 2 != 0;
  if (n_odd && k_odd) {
    throw DomainError("trinomial_parity: n and k both odd; use the reciprocal X^n + X^" +
                      std::to_string(n - k) + " + 1, which has the same factor count");
  }
  if (!n_odd && !k_odd) {
    throw DomainError("trinomial_parity: n and k both even; the trinomial is the square of X^" +
                      std::to_string(n / 2) + " + X^" + std::to_string(k / 2) + " + 1");
  }

  bool even = false;
  if (!n_odd) {
    const long half = static_cast<long>(n) * k / 2;
    even = n != 2 * k && (half % 4 == 0 || half % 4 == 1);
  } else {
    const bool divides = (2 * n) % k == 0;
    even = divides ? is_pm1_mod8(n) : is_pm3_mod8(n);
  }
  return ParityVerdict::from_parity(even ? Parity::even : Parity::odd,
                                    VerdictSource::closed_form);
}

int pent_discriminant_closed_form(const PentShape& shape) {
  require_odd_n_even_s(shape, "pent_discriminant_closed_form");
  return is_pm1_mod8(shape.n()) ? 1 : 5;
}

ParityVerdict pent_parity(const PentShape& shape) {
  require_odd_n_even_s(shape, "pent_parity");
  return ParityVerdict::from_parity(is_pm1_mod8(shape.n()) ? Parity::odd : Parity::even,
                                    VerdictSource::closed_form);
}

bool pent_certified_reducible(const PentShape& shape) {
  if (shape.s() % 2 != 0) {
    throw OutOfTheoryError("pent_certified_reducible: no certificate for odd s (s=" +
                           std::to_string(shape.s()) + ")");
  }
  return shape.n() % 2 == 0 || is_pm3_mod8(shape.n());
}

std::string pent_certificate_reason(const PentShape& shape) {
  const int n = shape.n();
  const int r = ((n % 8) + 8) % 8;
  if (shape.s() % 2 != 0) return "no closed-form verdict for odd s";
  if (n % 2 == 0) return "reducible (n even, s even: the pentanomial is a square)";
  const std::string residue = std::to_string(n) + " ≡ " + std::to_string(r) + " mod 8";
  if (is_pm3_mod8(n)) {
    return "reducible (even s, n ≢ ±1 mod 8: " + residue + ")";
  }
  return "no certificate (even s, n ≡ ±1 mod 8: " + residue + "; odd factor count)";
}

}  // namespace pentparity
