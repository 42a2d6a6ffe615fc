#pragma once

#include <string>

#include "pentparity/bitpoly.hpp"
#include "pentparity/parity.hpp"

namespace pentparity {

// Stickelberger-Swan bridge: for squarefree f with integer lift F,
// t_f = deg f (mod 2) iff D(F) = 1 (mod 8). d_mod8 must be odd.
ParityVerdict parity_from_discriminant(int deg_f, int d_mod8);

// Swan's parity rule for X^n + X^k + 1, n > k > 0, exactly one of n, k odd.
// If both are odd, apply it to the reciprocal X^n + X^(n-k) + 1 instead; if
// both are even the trinomial is a square.
ParityVerdict trinomial_parity(int n, int k);

// Closed-form D(F) mod 8 for the 0/1 lift of a class 2 pentanomial with odd n
// and even s: (-1)^(n(n-1)/2) n mod 8, i.e. 1 for n = +-1 (mod 8), 5 for
// n = +-3 (mod 8).
int pent_discriminant_closed_form(const PentShape& shape);

// Factor-count parity of a class 2 pentanomial with odd n and even s: odd iff
// n = +-1 (mod 8).
ParityVerdict pent_parity(const PentShape& shape);

// Reducibility certificate for even s: true when n is even (the pentanomial is
// a square) or n = +-3 (mod 8) (even factor count). False only means that no
// certificate applies; it does not imply irreducibility. The reciprocal
// pentanomial X^n + X^3s + X^2s + X^s + 1 shares the verdict.
bool pent_certified_reducible(const PentShape& shape);

// One-line human-readable reason for the certificate, or for its absence.
std::string pent_certificate_reason(const PentShape& shape);

}  // namespace pentparity
