#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdpdeg/degree.hpp"
#include "sdpdeg/numeric.hpp"
#include "sdpdeg/polynomial.hpp"

// Brute-force evaluators for the residue identities behind the degree
// formulas. They sum over roots explicitly and share no code path with
// the coefficient-extraction or subset-sum algorithms they are used to check.
namespace sdpdeg::oracle {

/// Monic Q(x) = prod (x - root) with pairwise-distinct roots.
class RootedPolynomial {
 public:
  explicit RootedPolynomial(std::vector<BigRational> roots);

  const std::vector<BigRational>& roots() const { return roots_; }
  int degree() const { return static_cast<int>(roots_.size()); }
  /// Q'(roots[j]) = prod_{i != j} (roots[j] - roots[i]).
  BigRational derivative_at_root(std::size_t j) const;

 private:
  std::vector<BigRational> roots_;
};

/// sum over all root tuples (a_1..a_n) of F(a) / (Q_1'(a_1) ... Q_n'(a_n)).
/// Requires arity(F) == qs.size() and deg F <= sum (deg Q_i - 1).
BigRational residue_sum(std::span<const RootedPolynomial> qs, const SparsePolynomial& f);

/// True when p is invariant under permutations of its first r variables and,
/// separately, of the remaining ones.
bool is_doubly_symmetric(const SparsePolynomial& p, int r);

/// sum over r-subsets I of P(lambda_I, lambda_{I^c}) / prod_{i in I, j notin I} (lambda_i - lambda_j).
BigRational doubly_symmetric_sum(const SparsePolynomial& p, const SamplePoints& lambdas, int r);

/// Coefficient of x_1^{n-1}...y_{n-r}^{n-1} in
/// P prod_{i!=j}(x_i-x_j) prod_{i!=j}(y_i-y_j) prod_{i,j}(y_i-x_j), by full expansion.
BigRational d_coefficient(const SparsePolynomial& p, int r, int n);

/// Random integer polynomial in x_1..x_r, y_1..y_{n-r} of degree <= max_deg,
/// orbit-summed over both blocks. Same seed, same polynomial.
SparsePolynomial random_doubly_symmetric(int r, int n, int max_deg, std::uint64_t seed);

}  // namespace sdpdeg::oracle
