#include "sdpdeg/schur.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sdpdeg/determinant.hpp"

namespace sdpdeg {

void SchurExpansion::add(const Partition& lam, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(lam, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BigRational SchurExpansion::coefficient(const Partition& lam) const {
  auto it = coeffs_.find(lam);
  return it == coeffs_.end() ? BigRational(0) : it->second;
}

std::string SchurExpansion::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [lam, c] : coeffs_) {
    if (!first) out << " + ";
    first = false;
    out << c.str() << "*s" << lam.to_string();
  }
  return out.str();
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// det(x_i^{alpha_j}) expanded over permutations; each permutation gives one monomial.
SparsePolynomial alternant(const std::vector<int>& alpha, const SpacePtr& space) {
  const std::size_t r = alpha.size();
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  do {
    std::vector<int> exps(r);
    for (std::size_t i = 0; i < r; ++i) exps[i] = alpha[perm[i]];
    terms.push_back(Term{Monomial(std::move(exps)), BigRational(permutation_sign(perm))});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SparsePolynomial(space, std::move(terms));
}

}  // namespace

SparsePolynomial schur_bialternant(const Partition& lam, const SpacePtr& space) {
  const int r = static_cast<int>(space->arity());
  if (lam.length() > r) throw std::invalid_argument("partition " + lam.to_string() + " has more parts than variables");
  std::vector<int> shifted = lam.padded(r);
  std::vector<int> staircase(r);
  for (int j = 0; j < r; ++j) {
    staircase[j] = r - 1 - j;
    shifted[j] += staircase[j];
  }
  return divide_exact(alternant(shifted, space), alternant(staircase, space));
}

SparsePolynomial schur_bialternant(const Partition& lam, int r) {
  return schur_bialternant(lam, indexed_space("x", static_cast<std::size_t>(r)));
}

SparsePolynomial schur_jacobi_trudi_dual(int k, std::span<const SparsePolynomial> forms) {
  if (k < 0) throw std::invalid_argument("Jacobi-Trudi degree must be nonnegative");
  if (forms.empty()) throw std::invalid_argument("Jacobi-Trudi over an empty list of forms");
  const SpacePtr& space = forms.front().space();
  const SparsePolynomial zero(space);
  const SparsePolynomial one = SparsePolynomial::constant(space, 1);
  std::vector<SparsePolynomial> e;
  for (int i = 0; i <= k; ++i) e.push_back(elementary_symmetric(forms, i));
  SquareMatrix<SparsePolynomial> m(static_cast<std::size_t>(k), zero);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int index = j - i + 1;
      if (index >= 0) m(i, j) = e[index];
    }
  }
  return bareiss_determinant(std::move(m), one);
}

std::vector<Partition> pieri_multiply(const Partition& lam, int k, int r) {
  if (lam.length() > r) throw std::invalid_argument("partition longer than the number of rows");
  if (k < 0 || k > r) throw std::invalid_argument("vertical strip size must lie in [0, r]");
  const std::vector<int> base = lam.padded(r);
  std::vector<bool> chosen(r, false);
  std::fill(chosen.begin(), chosen.begin() + k, true);
  std::vector<Partition> out;
  // prev_permutation over a sorted-descending mask visits every k-subset of rows.
  do {
    std::vector<int> shape = base;
    for (int i = 0; i < r; ++i) shape[i] += chosen[i] ? 1 : 0;
    if (std::is_sorted(shape.begin(), shape.end(), std::greater<>())) out.emplace_back(std::move(shape));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SchurExpansion schur_decompose(const SparsePolynomial& p) {
  if (!is_symmetric_in(p, 0, p.arity())) {
    throw std::invalid_argument("schur_decompose needs a symmetric polynomial, got " + p.to_string());
  }
  SchurExpansion out;
  SparsePolynomial rest = p;
  while (!rest.is_zero()) {
    const Term lead = rest.leading_term();
    const auto& exps = lead.monomial.exponents();
    if (!std::is_sorted(exps.begin(), exps.end(), std::greater<>())) {
      throw ConsistencyError("leading exponent of a symmetric polynomial is not a partition");
    }
    Partition lam(exps);
    out.add(lam, lead.coeff);
    rest -= scale(schur_bialternant(lam, p.space()), lead.coeff);
  }
  return out;
}

BigInt pascal_minor_det(const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("Pascal minor needs as many rows as columns");
  const std::size_t n = static_cast<std::size_t>(rows.size());
  SquareMatrix<BigInt> m(n, BigInt(0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m(a, b) = binomial(rows.indices()[a], cols.indices()[b]);
  }
  return bareiss_determinant(std::move(m), BigInt(1));
}

BigInt psi(const IndexSet& rows) {
  // The formal sum runs over every r-subset J of N, but C(i, j) = 0 for j > i,
  // so a column beyond max(I) is identically zero and its minors vanish.
  // Only J within {0, ..., max(I)} contribute.
  const int r = rows.size();
  const int width = rows.max() + 1;
  BigInt total = 0;
  if (r == 0) return 1;
  std::vector<int> cols(r);
  std::iota(cols.begin(), cols.end(), 0);
  while (true) {
    total += pascal_minor_det(rows, IndexSet(cols));
    int i = r - 1;
    while (i >= 0 && cols[i] == width - r + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < r; ++j) cols[j] = cols[j - 1] + 1;
  }
  return total;
}

SchurExpansion h_schur_expansion(int d, int r) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  if (r < 1) throw std::invalid_argument("h_schur_expansion needs r >= 1");
  SchurExpansion out;
  for (const auto& lam : enumerate_partitions(d, r)) out.add(lam, BigRational(psi(index_set_of(lam, r))));
  return out;
}

}  // namespace sdpdeg
