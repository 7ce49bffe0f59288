#pragma once

#include <cstdint>
#include <optional>
#include <string>

// Property suites run by `sdpdeg verify` and the acceptance binary.
namespace sdpdeg::verify {

struct SuiteReport {
  std::string name;
  int passed = 0;
  int total = 0;
  /// Inputs and both values of the first failing case.
  std::optional<std::string> first_failure;

  bool ok() const { return total > 0 && passed == total; }
  void record(bool pass, const std::string& description);
  std::string summary() const;
};

/// Random residue sums over roots against the target coefficient.
SuiteReport lemma21(std::uint64_t seed, int cases = 100);

/// Random doubly symmetric P: subset sum against d(r,n) / (r!(n-r)!), several point sets each.
SuiteReport prop22(std::uint64_t seed, int polynomials = 50, int point_sets = 3);

/// h_2(2x1, x1+x2, 2x2) = 7 s_(2) + 3 s_(1,1), symbolically and via psi.
SuiteReport h2_example();
/// psi({0..r} minus {k}) = C(r+1, k+1) for 1 <= r <= max_r, 0 <= k <= r-1.
SuiteReport psi_single_gap(int max_r = 8);
/// psi at lambda = (2^{r-k}, 1^k) equals (k+1) C(r+3, k+3) for 1 <= r <= max_r, 0 <= k <= r.
SuiteReport psi_two_column(int max_r = 6);
/// Coefficient of x^{(n-1)^r} in s_lam prod_{i!=j}(x_i - x_j) is r! for lam = ((n-r)^r), else 0.
SuiteReport vandermonde_square(int max_r = 3, int max_n = 5);
/// Symbolic h_d over pairwise sums decomposes into sum psi_I s_{lambda(I)}.
SuiteReport h_expansion(int max_r = 3, int max_d = 4);

/// Runs every identity suite in this header and merges the counts.
SuiteReport identities();

/// theorem1 = residue = closed form (where it applies), plus duality, for every triple with n <= max_n.
SuiteReport cross_methods(int max_n, std::uint64_t seed);

}  // namespace sdpdeg::verify
