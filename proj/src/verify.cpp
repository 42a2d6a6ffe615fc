#include "pentparity/verify.hpp"

#include <random>
#include <sstream>

#include "pentparity/factor.hpp"
#include "pentparity/intpoly.hpp"
#include "pentparity/swan.hpp"

namespace pentparity {
namespace {

SuiteResult named(std::string name) {
  SuiteResult r;
  r.name = std::move(name);
  return r;
}

void fail(SuiteResult& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

std::string shape_str(int n, int s) {
  return "(" + std::to_string(n) + "," + std::to_string(s) + ")";
}

IntPoly random_unit_constant_poly(std::mt19937_64& rng, int degree) {
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1, 0);
  c[0] = 1;
  c.back() = 1;
  for (int i = 1; i < degree; ++i) c[static_cast<std::size_t>(i)] = static_cast<long>(rng() & 1);
  return IntPoly::from_dense(c);
}

}  // namespace

SuiteResult verify_pent_parity(int n_max) {
  SuiteResult r = named("pentanomial parity: brute force vs closed form");
  for (int n = 7; n < n_max; n += 2) {
    for (int s = 2; 3 * s < n; s += 2) {
      const PentShape shape = PentShape::create(n, s);
      const BitPoly f = pent_poly(shape);
      if (!is_squarefree(f)) {
        ++r.skipped;
        continue;
      }
      ++r.cases;
      if (factor_count(f).parity().parity != pent_parity(shape).parity) {
        fail(r, shape_str(n, s));
      }
    }
  }
  return r;
}

SuiteResult verify_certificate(int n_max) {
  SuiteResult r = named("reducibility certificate soundness");
  for (int n = 7; n < n_max; ++n) {
    for (int s = 2; 3 * s < n; s += 2) {
      const PentShape shape = PentShape::create(n, s);
      if (!pent_certified_reducible(shape)) continue;
      ++r.cases;
      if (is_irreducible(pent_poly(shape))) fail(r, shape_str(n, s));
    }
  }
  return r;
}

SuiteResult verify_trinomials(int n_max) {
  SuiteResult r = named("Swan trinomial rule vs brute force");
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k < n; ++k) {
      if ((n + k) % 2 == 0) continue;
      ++r.cases;
      const BitPoly t = BitPoly::from_exponents({n, k, 0});
      if (factor_count(t).parity().parity != trinomial_parity(n, k).parity) {
        fail(r, "X^" + std::to_string(n) + "+X^" + std::to_string(k) + "+1");
      }
    }
  }
  return r;
}

SuiteResult verify_discriminant(int n_max) {
  SuiteResult r = named("discriminant mod 8: closed form vs resultant");
  for (int n = 7; n <= n_max; n += 2) {
    for (int s = 2; 3 * s < n; s += 2) {
      const PentShape shape = PentShape::create(n, s);
      ++r.cases;
      const IntPoly f = lift(pent_poly(shape));
      const int expected = (n % 8 == 1 || n % 8 == 7) ? 1 : 5;
      if (discriminant_mod8(f) != pent_discriminant_closed_form(shape) ||
          pent_discriminant_closed_form(shape) != expected) {
        fail(r, shape_str(n, s));
      }
    }
  }
  return r;
}

SuiteResult verify_power_sum_identities(int n_max, int t_n_max) {
  SuiteResult r = named("pentanomial power-sum identities");
  for (int n = 7; n <= n_max; n += 2) {
    for (int s = 2; 3 * s < n; s += 2) {
      ++r.cases;
      const PentShape shape = PentShape::create(n, s);
      const IntPoly f = lift(pent_poly(shape));
      const bool with_t = n <= t_n_max;
      const PowerSumTable t = power_sums(f, with_t ? 2 * (n - s) : 2 * n - 4 * s);
      bool ok = t[n - s] == 0 && t[n - 2 * s] == 0 && t[n - 3 * s] == 0;
      ok = ok && mpz_even_p(t[2 * n - 4 * s].get_mpz_t());
      if (with_t) {
        ok = ok && t[2 * n - 2 * s] == t[2 * n - 6 * s];
        ok = ok && second_power_sums(t, n - s) == second_power_sums(t, n - 3 * s);
      }
      if (!ok) fail(r, shape_str(n, s));
    }
  }
  return r;
}

SuiteResult verify_discriminant_routes(int samples, int max_degree, std::uint64_t seed) {
  SuiteResult r = named("discriminant via Res(F,H) = via Res(F,F')");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const int degree = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
    const IntPoly f = random_unit_constant_poly(rng, degree);
    ++r.cases;
    if (discriminant(f) != discriminant_classic(f)) fail(r, f.to_string());
  }
  return r;
}

SuiteResult verify_neg_power_sums(int samples, int max_degree, int count, std::uint64_t seed) {
  SuiteResult r = named("negative power sums vs Newton on the reciprocal");
  std::mt19937_64 rng(seed ^ 0x9e37'79b9'7f4a'7c15ULL);
  for (int i = 0; i < samples; ++i) {
    const int degree = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
    const IntPoly f = random_unit_constant_poly(rng, degree);
    ++r.cases;
    const std::vector<mpz_class> neg = neg_power_sums(f, count);
    const PowerSumTable rec = power_sums(reciprocal(f), count);
    for (int m = 1; m <= count; ++m) {
      if (neg[static_cast<std::size_t>(m - 1)] != rec[m]) {
        fail(r, f.to_string() + " at m=" + std::to_string(m));
        break;
      }
    }
  }
  return r;
}

std::vector<SuiteResult> verify_all(const VerifyBounds& b) {
  return {
      verify_pent_parity(b.pent_n_max),
      verify_certificate(b.pent_n_max + 1),
      verify_trinomials(b.trinomial_n_max),
      verify_discriminant(b.disc_n_max),
      verify_power_sum_identities(b.power_sum_n_max, b.power_sum_t_n_max),
      verify_discriminant_routes(b.samples, 20, b.seed),
      verify_neg_power_sums(b.samples, 30, 60, b.seed),
  };
}

}  // namespace pentparity
