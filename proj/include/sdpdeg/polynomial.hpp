#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdpdeg/numeric.hpp"

namespace sdpdeg {

/// Ordered list of distinct variable names. Polynomials over the same
/// space share one instance through a shared pointer.
class VariableSpace {
 public:
  explicit VariableSpace(std::vector<std::string> names);

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  friend bool operator==(const VariableSpace&, const VariableSpace&) = default;

 private:
  std::vector<std::string> names_;
};

using SpacePtr = std::shared_ptr<const VariableSpace>;

SpacePtr make_space(std::vector<std::string> names);
/// prefix1, ..., prefix<count>
SpacePtr indexed_space(const std::string& prefix, std::size_t count);
/// x1..x_r, y1..y_{n-r}: the ring of the degree formulas.
SpacePtr xy_space(int r, int n);

/// Exponent vector. Ordered by total degree, then lexicographically
/// (graded lex), so the largest monomial is the leading one.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(std::size_t arity) { return Monomial(std::vector<int>(arity, 0)); }
  static Monomial uniform(std::size_t arity, int e) { return Monomial(std::vector<int>(arity, e)); }

  std::size_t arity() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const { return degree_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exponent-wise difference; caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Per-variable exponent ceiling applied during multiplication. Products
/// of polynomials with nonnegative exponents can only grow exponents, so a
/// term above the cap in any variable never reaches a monomial below it.
class ExponentCap {
 public:
  static ExponentCap unbounded() { return ExponentCap(); }
  static ExponentCap uniform(std::size_t arity, int max_exponent) {
    return ExponentCap(std::vector<int>(arity, max_exponent));
  }
  static ExponentCap at(const Monomial& m) { return ExponentCap(m.exponents()); }
  explicit ExponentCap(std::vector<int> max_exponents) : max_(std::move(max_exponents)) {}

  bool is_unbounded() const { return !max_.has_value(); }
  bool admits(const Monomial& m) const;
  bool admits(std::span<const int> exps) const;

 private:
  ExponentCap() = default;
  std::optional<std::vector<int>> max_;
};

struct Term {
  Monomial monomial;
  BigRational coeff;
};

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Sparse multivariate polynomial with exact rational coefficients. Terms
/// are kept sorted in descending graded-lex order with no zero coefficient.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(SpacePtr space);
  /// Merges duplicate monomials and drops zeros.
  SparsePolynomial(SpacePtr space, std::vector<Term> terms);

  static SparsePolynomial constant(SpacePtr space, const BigRational& c);
  static SparsePolynomial variable(SpacePtr space, std::size_t index);
  static SparsePolynomial monomial(SpacePtr space, const Monomial& m, const BigRational& c = 1);
  /// Adopts terms that are already distinct, nonzero and in descending order.
  static SparsePolynomial from_sorted(SpacePtr space, std::vector<Term> terms);

  const SpacePtr& space() const { return space_; }
  std::size_t arity() const { return space_->arity(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree, or kZeroDegree for 0.
  int degree() const;
  bool is_homogeneous() const;
  const Term& leading_term() const;

  SparsePolynomial operator-() const;
  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const BigRational& c);

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b);

  std::string to_string() const;

 private:
  SpacePtr space_;
  std::vector<Term> terms_;
};

bool same_space(const SparsePolynomial& a, const SparsePolynomial& b);

SparsePolynomial add(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial subtract(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial mul(const SparsePolynomial& a, const SparsePolynomial& b,
                     const ExponentCap& cap = ExponentCap::unbounded());
SparsePolynomial scale(const SparsePolynomial& p, const BigRational& c);

inline SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) { return add(a, b); }
inline SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) { return subtract(a, b); }
inline SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) { return mul(a, b); }
inline SparsePolynomial operator*(const BigRational& c, const SparsePolynomial& p) { return scale(p, c); }

/// Drops every term the cap rejects.
SparsePolynomial truncate(const SparsePolynomial& p, const ExponentCap& cap);

BigRational coefficient_of(const SparsePolynomial& p, const Monomial& m);

/// Coefficient of m in a*b, computed without forming the product.
BigRational coefficient_of_product(const SparsePolynomial& a, const SparsePolynomial& b,
                                   const Monomial& m);

BigRational evaluate(const SparsePolynomial& p, std::span<const BigRational> point);

/// Quotient of an exact division, by graded-lex long division. Throws
/// ConsistencyError if the remainder is nonzero.
SparsePolynomial divide_exact(const SparsePolynomial& dividend, const SparsePolynomial& divisor);

/// p with variables i and j exchanged.
SparsePolynomial swap_variables(const SparsePolynomial& p, std::size_t i, std::size_t j);

/// Invariance under every transposition of variables in [first, last).
bool is_symmetric_in(const SparsePolynomial& p, std::size_t first, std::size_t last);

/// v_i + v_j for i <= j over the listed variables, in lexicographic (i, j) order.
std::vector<SparsePolynomial> pairwise_sum_forms(const SpacePtr& space,
                                                 std::span<const std::size_t> vars);

/// h_d over the multiset of forms (nonempty).
SparsePolynomial complete_homogeneous(std::span<const SparsePolynomial> forms, int d,
                                      const ExponentCap& cap = ExponentCap::unbounded());

/// e_k over the multiset of forms; 0 when k exceeds the number of forms.
SparsePolynomial elementary_symmetric(std::span<const SparsePolynomial> forms, int k,
                                      const ExponentCap& cap = ExponentCap::unbounded());

}  // namespace sdpdeg
