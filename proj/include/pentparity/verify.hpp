#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pentparity {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;  // e.g. non-squarefree inputs, reported not asserted
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

struct VerifyBounds {
  int pent_n_max = 500;        // parity agreement and certificate soundness, n < bound
  int trinomial_n_max = 300;   // Swan cross-check, n <= bound
  int disc_n_max = 60;         // closed-form vs resultant discriminant, n <= bound
  int power_sum_n_max = 200;   // S_(n-ks) = 0 and S_(2n-4s) even, n <= bound
  int power_sum_t_n_max = 120; // S_(2n-2s) = S_(2n-6s), T_(n-s) = T_(n-3s), n <= bound
  int samples = 200;           // randomized discriminant / series checks
  std::uint64_t seed = 0x5eed'2024ULL;
};

// Brute-force factor-count parity of every class 2 pentanomial with odd n,
// even s, n < n_max against the closed form. Non-squarefree inputs are
// counted in `skipped` rather than asserted.
SuiteResult verify_pent_parity(int n_max);

// Every certified-reducible shape (even s, any n < n_max) fails Rabin's test.
SuiteResult verify_certificate(int n_max);

// Swan's trinomial rule against brute force, n <= n_max.
SuiteResult verify_trinomials(int n_max);

// Closed-form discriminant residue against the exact resultant, odd n <= n_max.
SuiteResult verify_discriminant(int n_max);

// Vanishing and pairing identities of the pentanomial power sums.
SuiteResult verify_power_sum_identities(int n_max, int t_n_max);

// Res(F, H) and Res(F, F') routes agree; the negative power-sum series matches
// Newton's identities on the reciprocal. Random monic 0/1 polynomials, F(0)=1.
SuiteResult verify_discriminant_routes(int samples, int max_degree, std::uint64_t seed);
SuiteResult verify_neg_power_sums(int samples, int max_degree, int count, std::uint64_t seed);

std::vector<SuiteResult> verify_all(const VerifyBounds& bounds);

}  // namespace pentparity
