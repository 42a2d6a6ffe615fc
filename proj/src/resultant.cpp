#include <utility>

#include "pentparity/errors.hpp"
#include "pentparity/intpoly.hpp"

namespace pentparity {
namespace {

using Dense = std::vector<mpz_class>;  // index = exponent, no leading zeros

int deg(const Dense& p) { return static_cast<int>(p.size()) - 1; }

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// lc(b)^(deg a - deg b + 1) * a mod b.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const int db = deg(b);
  const mpz_class& lb = b.back();
  for (int i = deg(a); i >= db; --i) {
    const mpz_class lead = a[static_cast<std::size_t>(i)];
    for (mpz_class& c : a) c *= lb;
    if (lead != 0) {
      const int shift = i - db;
      for (int j = 0; j <= db; ++j) {
        a[static_cast<std::size_t>(j + shift)] -= lead * b[static_cast<std::size_t>(j)];
      }
    }
  }
  a.resize(static_cast<std::size_t>(db));
  trim(a);
  return a;
}

mpz_class power(const mpz_class& base, long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Subresultant PRS (Collins / Brown), without content removal.
mpz_class subresultant(Dense a, Dense b) {
  int sign = 1;
  if (deg(a) < deg(b)) {
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = -sign;
    std::swap(a, b);
  }
  if (deg(b) == 0) return power(b[0], deg(a));

  mpz_class g = 1;
  mpz_class h = 1;
  for (;;) {
    const int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = -sign;
    Dense r = pseudo_remainder(a, b);
    if (r.empty()) return 0;
    a = std::move(b);
    const mpz_class divisor = g * power(h, delta);
    for (mpz_class& c : r) {
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    }
    b = std::move(r);
    g = a.back();
    // h <- h^(1 - delta) g^delta
    if (delta == 0) {
      // unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      mpz_class num = power(g, delta);
      const mpz_class den = power(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (deg(b) == 0) {
      // h <- h^(1 - deg a) lc(b)^deg a
      const int da = deg(a);
      mpz_class num = power(b[0], da);
      const mpz_class den = power(h, da - 1);
      mpz_class out;
      mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return sign * out;
    }
  }
}

int sign_n_choose_2(int n) {
  const long k = static_cast<long>(n) * (n - 1) / 2;
  return (k % 2 == 0) ? 1 : -1;
}

void require_monic_unit_constant(const IntPoly& f, const char* op) {
  if (!f.is_monic() || f.degree() < 1) {
    throw DomainError(std::string(op) + ": F must be monic of degree >= 1");
  }
  if (f.constant_term() != 1) throw DomainError(std::string(op) + ": F(0) must be 1");
}

}  // namespace

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
  if (!a.is_monic() || a.degree() < 1) {
    throw DomainError("resultant: first argument must be monic of degree >= 1");
  }
  if (b.is_zero()) throw DomainError("resultant: second argument is zero");
  return subresultant(a.dense(), b.dense());
}

mpz_class discriminant(const IntPoly& f) {
  require_monic_unit_constant(f, "discriminant");
  return sign_n_choose_2(f.degree()) * resultant(f, h_poly(f));
}

mpz_class discriminant_classic(const IntPoly& f) {
  if (!f.is_monic() || f.degree() < 1) {
    throw DomainError("discriminant_classic: F must be monic of degree >= 1");
  }
  return sign_n_choose_2(f.degree()) * resultant(f, derivative(f));
}

int discriminant_mod8(const IntPoly& f) { return mod8(discriminant(f)); }

int discriminant_mod8_classic(const IntPoly& f) { return mod8(discriminant_classic(f)); }

}  // namespace pentparity
