#include <string>

#include "pentparity/errors.hpp"
#include "pentparity/intpoly.hpp"

namespace pentparity {

PowerSumTable power_sums(const IntPoly& f, int upto, SumModulus modulus) {
  if (!f.is_monic()) throw DomainError("power_sums: F must be monic");
  if (upto < 0) throw DomainError("power_sums: upto must be >= 0");
  const int n = f.degree();
  const auto reduce = [&](mpz_class& v) {
    if (!modulus.is_exact()) v = mod_pow2(v, modulus.bits);
  };

  std::vector<mpz_class> s(static_cast<std::size_t>(upto) + 1);
  s[0] = n;
  reduce(s[0]);
  // S_m + sum_{i=1}^{min(m-1,n)} F_{n-i} S_{m-i} + [m <= n] m F_{n-m} = 0.
  // Only the nonzero coefficients of F contribute, which keeps sparse inputs cheap.
  for (int m = 1; m <= upto; ++m) {
    mpz_class acc = 0;
    for (const auto& t : f.terms()) {
      if (t.exponent == n) continue;
      const int i = n - t.exponent;
      if (i < m) {
        acc += t.coeff * s[static_cast<std::size_t>(m - i)];
      } else if (i == m) {
        acc += t.coeff * m;
      }
    }
    s[static_cast<std::size_t>(m)] = -acc;
    reduce(s[static_cast<std::size_t>(m)]);
  }
  return PowerSumTable(std::move(s), modulus, n);
}

mpz_class second_power_sums(const PowerSumTable& table, int k) {
  if (!table.modulus().is_exact()) {
    throw DomainError("second_power_sums: needs an exact power-sum table");
  }
  if (k < 0 || 2 * k > table.upto()) {
    throw DomainError("second_power_sums: table does not reach S_" + std::to_string(2 * k));
  }
  const mpz_class v = table[k] * table[k] - table[2 * k];
  if (mpz_odd_p(v.get_mpz_t())) {
    throw ConsistencyError("S_k^2 - S_2k is odd for k = " + std::to_string(k));
  }
  return v / 2;
}

namespace {

using Series = std::vector<mpz_class>;  // coefficients of X^0 .. X^(size-1)

Series series_mul(const Series& a, const Series& b) {
  Series out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

std::vector<mpz_class> neg_power_sums(const IntPoly& f, int count) {
  if (!f.is_monic() || f.degree() < 1) {
    throw DomainError("neg_power_sums: F must be monic of degree >= 1");
  }
  if (f.constant_term() != 1) throw DomainError("neg_power_sums: F(0) must be 1");
  if (count < 1) throw DomainError("neg_power_sums: count must be >= 1");

  const std::size_t len = static_cast<std::size_t>(count) + 1;
  Series p(len);  // F - 1, truncated
  Series xdf(len);  // X F'(X), truncated
  for (const auto& t : f.terms()) {
    const auto e = static_cast<std::size_t>(t.exponent);
    if (e == 0 || e >= len) continue;
    p[e] = t.coeff;
    xdf[e] = t.coeff * t.exponent;
  }
  const int order = f.terms()[f.terms().size() - 2].exponent;

  // sum_{i>=0} (-1)^(i+1) (F-1)^i; (F-1)^i has X-adic order >= i * order, so
  // the terms with i * order > count vanish after truncation.
  Series geom(len);
  Series power(len);
  power[0] = 1;
  for (int i = 0; static_cast<long>(i) * order <= count; ++i) {
    if (i > 0) power = series_mul(power, p);
    for (std::size_t j = 0; j < len; ++j) {
      if (i % 2 == 0) {
        geom[j] -= power[j];
      } else {
        geom[j] += power[j];
      }
    }
  }
  const Series total = series_mul(xdf, geom);
  return {total.begin() + 1, total.end()};
}

}  // namespace pentparity
