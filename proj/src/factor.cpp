#include "pentparity/factor.hpp"

#include <algorithm>
#include <string>

#include "pentparity/errors.hpp"
#include "pentparity/modulus.hpp"

namespace pentparity {
namespace {

// Frobenius images are accumulated in batches of this many degrees before a
// single gcd decides whether any of them found a factor.
constexpr int kDdfBatch = 16;

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void require_positive_degree(const BitPoly& p, const char* op) {
  if (p.degree() < 1) throw DomainError(std::string(op) + ": polynomial must have degree >= 1");
}

void squarefree_rec(const BitPoly& f, int scale, std::vector<SquarefreePart>& out) {
  if (f.degree() < 1) return;
  const BitPoly df = derivative(f);
  if (df.is_zero()) {
    squarefree_rec(square_root(f), 2 * scale, out);
    return;
  }
  BitPoly c = gcd(f, df);
  BitPoly w = divrem(f, c).quotient;
  int i = 1;
  while (w.degree() > 0) {
    const BitPoly y = gcd(w, c);
    const BitPoly z = divrem(w, y).quotient;
    if (z.degree() > 0) out.push_back({z, i * scale});
    ++i;
    w = y;
    c = divrem(c, y).quotient;
  }
  // What is left in c is a perfect square.
  if (c.degree() > 0) squarefree_rec(square_root(c), 2 * scale, out);
}

// gcd(p, prod_{d <= d_max} (X^(2^d) - X)): the product of all irreducible
// factors of p of degree <= d_max.
BitPoly small_factor_part(const BitPoly& p, int d_max) {
  const Modulus mod(p);
  const BitPoly x = mod.reduce(BitPoly::x());
  BitPoly h = x;
  BitPoly acc = BitPoly::one();
  for (int d = 1; d <= d_max && !acc.is_zero(); ++d) {
    h = mod.sqr(h);
    acc = mod.mul(acc, h + x);
  }
  return gcd(acc, p);
}

}  // namespace

std::string_view to_string(VerdictSource s) {
  switch (s) {
    case VerdictSource::closed_form: return "closed_form";
    case VerdictSource::discriminant: return "discriminant";
    case VerdictSource::brute_force: return "brute_force";
  }
  return "?";
}

BitPoly pow_frobenius(const BitPoly& m, int k) {
  require_positive_degree(m, "pow_frobenius");
  if (k < 0) throw DomainError("pow_frobenius: k must be >= 0");
  const Modulus mod(m);
  BitPoly h = mod.reduce(BitPoly::x());
  for (int i = 0; i < k; ++i) h = mod.sqr(h);
  return h;
}

bool is_squarefree(const BitPoly& p) {
  if (p.is_zero()) throw DomainError("is_squarefree: zero polynomial");
  if (p.degree() == 0) return true;
  return gcd(p, derivative(p)).is_one();
}

std::vector<SquarefreePart> squarefree_decomposition(const BitPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree_decomposition: zero polynomial");
  std::vector<SquarefreePart> out;
  squarefree_rec(p, 1, out);
  return out;
}

bool is_irreducible(const BitPoly& p) {
  require_positive_degree(p, "is_irreducible");
  const int n = p.degree();
  if (n == 1) return true;
  if (!p.constant_term()) return false;   // X divides p
  if (p.weight() % 2 == 0) return false;  // X + 1 divides p

  const std::vector<int> primes = prime_divisors(n);
  std::vector<int> checkpoints;
  for (int q : primes) checkpoints.push_back(n / q);
  std::sort(checkpoints.begin(), checkpoints.end());

  const Modulus mod(p);
  const BitPoly x = BitPoly::x();
  BitPoly h = x;
  auto next = checkpoints.begin();
  for (int i = 1; i <= n; ++i) {
    h = mod.sqr(h);
    while (next != checkpoints.end() && *next == i) {
      if (!gcd(h + x, p).is_one()) return false;
      ++next;
    }
  }
  return h == x;
}

std::map<int, long> distinct_degree_counts(const BitPoly& squarefree) {
  require_positive_degree(squarefree, "distinct_degree_counts");
  std::map<int, long> out;
  BitPoly g = squarefree;
  if (g.degree() >= 2) {
    const BitPoly x = BitPoly::x();
    Modulus mod(g);
    BitPoly h = x;
    int d = 0;
    while (2 * (d + 1) <= g.degree()) {
      const int batch_end = std::min(d + kDdfBatch, g.degree() / 2);
      std::vector<BitPoly> images;
      BitPoly acc = BitPoly::one();
      for (int e = d + 1; e <= batch_end; ++e) {
        h = mod.sqr(h);
        images.push_back(h);
        if (!acc.is_zero()) acc = mod.mul(acc, h + x);
      }
      if (gcd(acc, g).is_one()) {
        d = batch_end;
        continue;
      }
      // Some degree in (d, batch_end] splits off; find out which.
      bool done = false;
      for (int e = d + 1; e <= batch_end; ++e) {
        if (2 * e > g.degree()) {
          d = e - 1;
          done = true;
          break;
        }
        const BitPoly he = mod.reduce(images[static_cast<std::size_t>(e - d - 1)]);
        const BitPoly c = gcd(he + x, g);
        if (c.degree() > 0) {
          out[e] += c.degree() / e;
          g = divrem(g, c).quotient;
          if (g.degree() < 1) break;
          mod = Modulus(g);
        }
      }
      if (done || g.degree() < 2) break;
      h = mod.reduce(images.back());
      d = batch_end;
    }
  }
  if (g.degree() > 0) out[g.degree()] += 1;
  return out;
}

FactorCount factor_count(const BitPoly& p) {
  require_positive_degree(p, "factor_count");
  FactorCount fc;
  for (const SquarefreePart& part : squarefree_decomposition(p)) {
    for (const auto& [deg, count] : distinct_degree_counts(part.factor)) {
      fc.by_degree[deg] += count * part.multiplicity;
      fc.total += count * part.multiplicity;
    }
  }
  return fc;
}

bool has_factor_of_degree_le(const BitPoly& p, int d_max) {
  if (d_max < 1 || p.degree() <= d_max) {
    throw DomainError("has_factor_of_degree_le: need deg(p) > d_max >= 1");
  }
  return small_factor_part(p, d_max).degree() > 0;
}

std::optional<int> smallest_factor_degree(const BitPoly& p, int d_max) {
  require_positive_degree(p, "smallest_factor_degree");
  if (d_max < 1) return std::nullopt;
  const BitPoly c = p.degree() > d_max ? small_factor_part(p, d_max) : p;
  if (c.degree() < 1) return std::nullopt;
  const Modulus mod(c);
  const BitPoly x = mod.reduce(BitPoly::x());
  BitPoly h = x;
  for (int d = 1; d <= d_max && d <= c.degree(); ++d) {
    h = mod.sqr(h);
    if (!gcd(h + x, c).is_one()) return d;
  }
  return std::nullopt;
}

}  // namespace pentparity
