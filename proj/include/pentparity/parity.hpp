#pragma once

#include <string_view>

namespace pentparity {

enum class Parity { even, odd };

inline Parity parity_of(long count) { return (count % 2 == 0) ? Parity::even : Parity::odd; }
inline std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

enum class VerdictSource { closed_form, discriminant, brute_force };

std::string_view to_string(VerdictSource s);

// Parity of the number of irreducible factors, and where it came from.
//
// An even count means at least two factors, so the polynomial is reducible.
// An odd count says nothing about irreducibility: one factor and three factors
// look the same. `implies_reducible` therefore tracks the parity alone, and
// `inconclusive()` flags the odd case explicitly.
struct ParityVerdict {
  Parity parity;
  VerdictSource source;
  bool implies_reducible;

  static ParityVerdict from_parity(Parity p, VerdictSource src) {
    return {p, src, p == Parity::even};
  }

  bool inconclusive() const { return !implies_reducible; }

  friend bool operator==(const ParityVerdict&, const ParityVerdict&) = default;
};

}  // namespace pentparity
