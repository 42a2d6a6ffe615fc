#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pentparity/bitpoly.hpp"
#include "pentparity/parity.hpp"

namespace pentparity {

// X^(2^k) mod m, by k modular squarings. deg(m) >= 1, k >= 0.
BitPoly pow_frobenius(const BitPoly& m, int k);

// gcd(p, p') == 1. p nonzero.
bool is_squarefree(const BitPoly& p);

struct SquarefreePart {
  BitPoly factor;  // squarefree, non-constant
  int multiplicity;
};

// p = prod factor^multiplicity with pairwise coprime squarefree factors.
std::vector<SquarefreePart> squarefree_decomposition(const BitPoly& p);

// Rabin's criterion. deg(p) >= 1.
bool is_irreducible(const BitPoly& p);

struct FactorCount {
  // Irreducible factors counted with multiplicity. For squarefree input this is
  // the plain number of irreducible factors.
  long total = 0;
  // degree -> number of irreducible factors of that degree (with multiplicity).
  std::map<int, long> by_degree;

  ParityVerdict parity() const {
    return ParityVerdict::from_parity(parity_of(total), VerdictSource::brute_force);
  }
};

// Squarefree decomposition followed by distinct-degree splitting. deg(p) >= 1.
FactorCount factor_count(const BitPoly& p);

// Number of irreducible factors of a squarefree polynomial, by degree.
std::map<int, long> distinct_degree_counts(const BitPoly& squarefree);

// True iff p has an irreducible factor of degree <= d_max. deg(p) > d_max >= 1.
bool has_factor_of_degree_le(const BitPoly& p, int d_max);

// Smallest degree of an irreducible factor of p, if it is <= d_max.
std::optional<int> smallest_factor_degree(const BitPoly& p, int d_max);

}  // namespace pentparity
