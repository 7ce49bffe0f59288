#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sdpdeg/numeric.hpp"

namespace sdpdeg {

/// r outside [1, n-1].
class UnsupportedRankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// m outside the Pataki window for (n, r). The message names the violated bound.
class PatakiRangeError : public std::invalid_argument {
 public:
  enum class Bound { lower, upper };
  PatakiRangeError(Bound which, std::int64_t bound, const std::string& what)
      : std::invalid_argument(what), which_(which), bound_(bound) {}
  Bound which() const { return which_; }
  std::int64_t bound() const { return bound_; }

 private:
  Bound which_;
  std::int64_t bound_;
};

/// (m, n, r) inside C(n-r+1, 2) <= m <= C(n+1, 2) - C(r+1, 2), with 1 <= r <= n-1.
class PatakiTriple {
 public:
  /// Validates; throws UnsupportedRankError or PatakiRangeError.
  static PatakiTriple make(std::int64_t m, std::int64_t n, std::int64_t r);

  int m() const { return m_; }
  int n() const { return n_; }
  int r() const { return r_; }
  /// Slack against the lower bound: m - C(n-r+1, 2).
  int k_script() const { return k_; }
  /// Slack against the upper bound: C(n+1, 2) - C(r+1, 2) - m.
  int l_script() const { return l_; }

  static std::int64_t lower_bound(std::int64_t n, std::int64_t r);
  static std::int64_t upper_bound(std::int64_t n, std::int64_t r);

  std::string to_string() const;

  friend bool operator==(const PatakiTriple&, const PatakiTriple&) = default;

 private:
  PatakiTriple(int m, int n, int r, int k, int l) : m_(m), n_(n), r_(r), k_(k), l_(l) {}
  int m_, n_, r_, k_, l_;
};

/// Every valid triple for this n, ordered by (r, m).
std::vector<PatakiTriple> pataki_triples(int n);

enum class Method { theorem1, residue, closed_form, duality_reduced };
enum class MethodChoice { automatic, theorem1, residue, closed };

std::string_view method_name(Method m);
Method parse_method(std::string_view name);
MethodChoice parse_method_choice(std::string_view name);

struct DegreeResult {
  PatakiTriple triple;
  BigInt delta;
  Method method;
  std::chrono::nanoseconds elapsed{0};
  /// Set when a second, independent method reproduced delta.
  std::optional<Method> verified_by;
};

/// Pairwise-distinct exact evaluation points lambda_1..lambda_n.
class SamplePoints {
 public:
  explicit SamplePoints(std::vector<BigRational> lambdas);
  /// lambda_i = i.
  static SamplePoints standard(int n);
  /// n distinct integers drawn from [-span, span], deterministic per seed.
  static SamplePoints random(int n, std::uint64_t seed, int span = 30);

  std::size_t size() const { return lambdas_.size(); }
  const BigRational& operator[](std::size_t i) const { return lambdas_[i]; }
  const std::vector<BigRational>& values() const { return lambdas_; }

 private:
  std::vector<BigRational> lambdas_;
};

/// Method disagreement inside the dispatcher; carries both values.
class MethodDisagreement : public std::runtime_error {
 public:
  MethodDisagreement(const DegreeResult& first, const DegreeResult& second);
  const DegreeResult& first() const { return first_; }
  const DegreeResult& second() const { return second_; }

 private:
  DegreeResult first_;
  DegreeResult second_;
};

/// (C(n+1,2) - m, n, n - r). Always valid; involutive.
PatakiTriple duality_partner(const PatakiTriple& t);

/// Coefficient c(m,n,r) of x_1^{n-1}...y_{n-r}^{n-1} in
/// h_l(X) h_k(Y) prod_{i!=j}(x_i-x_j) prod_{i!=j}(y_i-y_j) prod_{i,j}(y_i-x_j).
BigInt theorem1_coefficient(const PatakiTriple& t);

/// delta = (-1)^k c / (r! (n-r)!).
DegreeResult delta_theorem1(const PatakiTriple& t);

enum class ResidueForm {
  /// (-1)^k sum h_l(Lambda_I) h_k(Lambda_{I^c}) / prod_{i in I, j notin I}(lambda_i - lambda_j)
  rewritten,
  /// (-1)^l sum A_{l,I} A_{k,I^c} / T_I with T_I = (-1)^{r(n-r)} prod(lambda_i - lambda_j)
  signed_torus,
};

/// The exact rational value of the subset sum; integral for a valid triple.
BigRational residue_total(const PatakiTriple& t, const SamplePoints& pts,
                          ResidueForm form = ResidueForm::rewritten);

DegreeResult delta_residue(const PatakiTriple& t, const SamplePoints& pts);
DegreeResult delta_residue(const PatakiTriple& t);

/// Closed form for r = n-1, (3, n, n-2), (4, n, n-2), directly or after duality.
std::optional<DegreeResult> delta_closed(const PatakiTriple& t);

struct DeltaOptions {
  MethodChoice method = MethodChoice::automatic;
  bool cross_check = false;
  std::optional<SamplePoints> points;
};

/// Dispatcher. Throws MethodDisagreement when cross_check finds a mismatch
/// and std::invalid_argument when the closed form is requested but does not apply.
DegreeResult delta(const PatakiTriple& t, const DeltaOptions& options = {});

}  // namespace sdpdeg
