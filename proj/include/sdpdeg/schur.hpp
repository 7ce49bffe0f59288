#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sdpdeg/numeric.hpp"
#include "sdpdeg/partitions.hpp"
#include "sdpdeg/polynomial.hpp"

namespace sdpdeg {

/// Coefficients of a symmetric polynomial in the Schur basis. Zero entries are never stored.
class SchurExpansion {
 public:
  SchurExpansion() = default;

  void add(const Partition& lam, const BigRational& c);
  BigRational coefficient(const Partition& lam) const;
  const std::map<Partition, BigRational, std::greater<>>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  std::string to_string() const;

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  std::map<Partition, BigRational, std::greater<>> coeffs_;
};

/// s_lam(x_1..x_r) as the quotient a_{lam+delta} / a_delta of alternants.
SparsePolynomial schur_bialternant(const Partition& lam, int r);
SparsePolynomial schur_bialternant(const Partition& lam, const SpacePtr& space);

/// det of the k x k matrix with (i, j) entry e_{j-i+1}(forms). Equals h_k(forms).
SparsePolynomial schur_jacobi_trudi_dual(int k, std::span<const SparsePolynomial> forms);

/// Shapes obtained from lam by adding a vertical strip of k boxes within r rows,
/// in descending lexicographic order.
std::vector<Partition> pieri_multiply(const Partition& lam, int k, int r);

/// Expansion of a symmetric polynomial in Schur polynomials over all of its
/// variables. Throws std::invalid_argument when p is not symmetric.
SchurExpansion schur_decompose(const SparsePolynomial& p);

/// det of the Pascal submatrix with rows `rows` and columns `cols`, entries C(i, j).
BigInt pascal_minor_det(const IndexSet& rows, const IndexSet& cols);

/// Sum over all column sets J of the Pascal minors with rows I.
BigInt psi(const IndexSet& rows);

/// h_d over the pairwise sums x_i + x_j (i <= j) of r variables, in the Schur basis.
SchurExpansion h_schur_expansion(int d, int r);

}  // namespace sdpdeg
