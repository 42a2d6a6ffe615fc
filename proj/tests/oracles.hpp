#pragma once

// Independent reference computations used only by the tests. Deliberately
// naive: nothing here shares code with the library.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

// Binary polynomials of degree < 64 as plain bit masks.
inline int deg64(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

inline std::uint64_t mod64(std::uint64_t a, std::uint64_t m) {
  const int dm = deg64(m);
  for (int d = deg64(a); d >= dm; d = deg64(a)) a ^= m << (d - dm);
  return a;
}

inline std::uint64_t div64(std::uint64_t a, std::uint64_t m) {
  const int dm = deg64(m);
  std::uint64_t q = 0;
  for (int d = deg64(a); d >= dm; d = deg64(a)) {
    q |= std::uint64_t{1} << (d - dm);
    a ^= m << (d - dm);
  }
  return q;
}

// Schoolbook product of two bit masks, 128-bit result as {lo, hi}.
inline std::pair<std::uint64_t, std::uint64_t> clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t lo = 0, hi = 0;
  for (int i = 0; i < 64; ++i) {
    if ((b >> i) & 1) {
      lo ^= a << i;
      if (i) hi ^= a >> (64 - i);
    }
  }
  return {lo, hi};
}

// Factorization by trial division. Returns degree -> count with multiplicity.
inline std::map<int, long> trial_factor(std::uint64_t p) {
  std::map<int, long> out;
  for (std::uint64_t d = 2; deg64(d) >= 1 && 2 * deg64(d) <= deg64(p);) {
    if (mod64(p, d) == 0) {
      ++out[deg64(d)];
      p = div64(p, d);
    } else {
      ++d;
    }
  }
  if (deg64(p) >= 1) ++out[deg64(p)];
  return out;
}

inline long trial_factor_count(std::uint64_t p) {
  long t = 0;
  for (const auto& [d, c] : trial_factor(p)) t += c;
  return t;
}

using Matrix = std::vector<std::vector<mpz_class>>;

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Companion matrix of the monic polynomial with low coefficients c[0..n-1].
inline Matrix companion(const std::vector<mpz_class>& low) {
  const std::size_t n = low.size();
  Matrix c(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 1; i < n; ++i) c[i][i - 1] = 1;
  for (std::size_t i = 0; i < n; ++i) c[i][n - 1] = -low[i];
  return c;
}

// traces[m] = tr(C^m) for m = 1..upto; traces[0] = n.
inline std::vector<mpz_class> companion_traces(const std::vector<mpz_class>& low, int upto) {
  const Matrix c = companion(low);
  std::vector<mpz_class> out{mpz_class(static_cast<long>(low.size()))};
  Matrix p = c;
  for (int m = 1; m <= upto; ++m) {
    mpz_class t = 0;
    for (std::size_t i = 0; i < p.size(); ++i) t += p[i][i];
    out.push_back(t);
    if (m < upto) p = matmul(p, c);
  }
  return out;
}

// Second elementary symmetric function of the eigenvalues of C^k: the sum of
// all principal 2x2 minors.
inline mpz_class companion_e2_of_power(const std::vector<mpz_class>& low, int k) {
  const Matrix c = companion(low);
  Matrix p = c;
  for (int i = 1; i < k; ++i) p = matmul(p, c);
  mpz_class e2 = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) e2 += p[i][i] * p[j][j] - p[i][j] * p[j][i];
  return e2;
}

// Determinant by Bareiss fraction-free elimination.
inline mpz_class determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Res(A, B) as the Sylvester determinant. Dense coefficients, index = exponent.
inline mpz_class sylvester_resultant(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  const std::size_t da = a.size() - 1, db = b.size() - 1;
  const std::size_t n = da + db;
  if (n == 0) return 1;
  Matrix s(n, std::vector<mpz_class>(n, 0));
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t i = 0; i <= da; ++i) s[r][r + i] = a[da - i];
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t i = 0; i <= db; ++i) s[db + r][r + i] = b[db - i];
  return determinant(s);
}

}  // namespace oracle
