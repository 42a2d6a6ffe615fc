#include "pentparity/intpoly.hpp"

#include <algorithm>
#include <map>

#include "pentparity/errors.hpp"

namespace pentparity {

IntPoly IntPoly::from_terms(std::vector<Term> terms) {
  std::map<int, mpz_class, std::greater<>> merged;
  for (Term& t : terms) {
    if (t.exponent < 0) throw DomainError("IntPoly: negative exponent");
    merged[t.exponent] += t.coeff;
  }
  IntPoly p;
  for (auto& [e, c] : merged) {
    if (c != 0) p.terms_.push_back({e, std::move(c)});
  }
  return p;
}

IntPoly IntPoly::from_dense(std::span<const mpz_class> coeffs) {
  IntPoly p;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] != 0) p.terms_.push_back({static_cast<int>(i), coeffs[i]});
  }
  return p;
}

IntPoly IntPoly::from_dense(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> v;
  for (long c : coeffs) v.emplace_back(c);
  return from_dense(v);
}

mpz_class IntPoly::coeff(int exponent) const {
  for (const Term& t : terms_) {
    if (t.exponent == exponent) return t.coeff;
    if (t.exponent < exponent) break;
  }
  return 0;
}

std::vector<mpz_class> IntPoly::dense() const {
  std::vector<mpz_class> out(static_cast<std::size_t>(degree() + 1));
  for (const Term& t : terms_) out[static_cast<std::size_t>(t.exponent)] = t.coeff;
  return out;
}

BitPoly IntPoly::reduce_mod2() const {
  std::vector<int> exps;
  for (const Term& t : terms_) {
    if (mpz_odd_p(t.coeff.get_mpz_t())) exps.push_back(t.exponent);
  }
  return BitPoly::from_exponents(exps);
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    const bool neg = t.coeff < 0;
    const mpz_class mag = abs(t.coeff);
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    const bool show_coeff = mag != 1 || t.exponent == 0;
    if (show_coeff) out += mag.get_str();
    if (t.exponent > 0) {
      if (show_coeff) out += '*';
      out += 'X';
      if (t.exponent > 1) out += '^' + std::to_string(t.exponent);
    }
  }
  return out;
}

IntPoly derivative(const IntPoly& f) {
  std::vector<IntPoly::Term> out;
  for (const auto& t : f.terms()) {
    if (t.exponent > 0) out.push_back({t.exponent - 1, t.coeff * t.exponent});
  }
  return IntPoly::from_terms(std::move(out));
}

IntPoly reciprocal(const IntPoly& f) {
  if (f.constant_term() == 0) throw DomainError("reciprocal: constant term must be nonzero");
  const int n = f.degree();
  std::vector<IntPoly::Term> out;
  for (const auto& t : f.terms()) out.push_back({n - t.exponent, t.coeff});
  return IntPoly::from_terms(std::move(out));
}

IntPoly lift(const BitPoly& p) {
  if (p.is_zero()) throw DomainError("lift: zero polynomial");
  std::vector<IntPoly::Term> terms;
  for (int e : p.exponents()) terms.push_back({e, 1});
  return IntPoly::from_terms(std::move(terms));
}

IntPoly h_poly(const IntPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw DomainError("h_poly: F must be monic of degree >= 1");
  const int n = f.degree();
  // n F - X F' has coefficient (n - e) F_e on X^e.
  std::vector<IntPoly::Term> out;
  for (const auto& t : f.terms()) out.push_back({t.exponent, t.coeff * (n - t.exponent)});
  return IntPoly::from_terms(std::move(out));
}

SumModulus SumModulus::pow2(int k) {
  if (k < 1) throw DomainError("modulus 2^k needs k >= 1");
  return {k};
}

std::string SumModulus::to_string() const {
  return is_exact() ? "exact" : "2^" + std::to_string(bits);
}

mpz_class mod_pow2(const mpz_class& v, int bits) {
  mpz_class r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return r;
}

int mod8(const mpz_class& v) { return static_cast<int>(mod_pow2(v, 3).get_ui()); }

}  // namespace pentparity
