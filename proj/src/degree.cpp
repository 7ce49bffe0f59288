#include "sdpdeg/degree.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "sdpdeg/determinant.hpp"
#include "sdpdeg/polynomial.hpp"

namespace sdpdeg {

// ------------------------------------------------------------ PatakiTriple

std::int64_t PatakiTriple::lower_bound(std::int64_t n, std::int64_t r) { return binomial_small(n - r + 1, 2); }

std::int64_t PatakiTriple::upper_bound(std::int64_t n, std::int64_t r) {
  return binomial_small(n + 1, 2) - binomial_small(r + 1, 2);
}

PatakiTriple PatakiTriple::make(std::int64_t m, std::int64_t n, std::int64_t r) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive integers");
  if (r < 1 || r > n - 1) {
    throw UnsupportedRankError("unsupported rank r=" + std::to_string(r) + ": need 1 <= r <= n-1 = " +
                               std::to_string(n - 1));
  }
  // Keeps C(n+1, 2) and the big-integer formulas comfortably in range.
  if (n > 1000) throw std::invalid_argument("n is too large");
  const std::int64_t lo = lower_bound(n, r);
  const std::int64_t hi = upper_bound(n, r);
  if (m < lo) {
    throw PatakiRangeError(PatakiRangeError::Bound::lower, lo,
                           "m=" + std::to_string(m) + " violates the Pataki lower bound C(n-r+1,2)=" +
                               std::to_string(lo) + " for n=" + std::to_string(n) + ", r=" + std::to_string(r));
  }
  if (m > hi) {
    throw PatakiRangeError(PatakiRangeError::Bound::upper, hi,
                           "m=" + std::to_string(m) + " violates the Pataki upper bound C(n+1,2)-C(r+1,2)=" +
                               std::to_string(hi) + " for n=" + std::to_string(n) + ", r=" + std::to_string(r));
  }
  return PatakiTriple(static_cast<int>(m), static_cast<int>(n), static_cast<int>(r), static_cast<int>(m - lo),
                      static_cast<int>(hi - m));
}

std::string PatakiTriple::to_string() const {
  return "(" + std::to_string(m_) + "," + std::to_string(n_) + "," + std::to_string(r_) + ")";
}

std::vector<PatakiTriple> pataki_triples(int n) {
  std::vector<PatakiTriple> out;
  for (int r = 1; r <= n - 1; ++r) {
    for (std::int64_t m = PatakiTriple::lower_bound(n, r); m <= PatakiTriple::upper_bound(n, r); ++m) {
      out.push_back(PatakiTriple::make(m, n, r));
    }
  }
  return out;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::theorem1: return "theorem1";
    case Method::residue: return "residue";
    case Method::closed_form: return "closed_form";
    case Method::duality_reduced: return "duality_reduced";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::theorem1, Method::residue, Method::closed_form, Method::duality_reduced}) {
    if (method_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown method: " + std::string(name));
}

MethodChoice parse_method_choice(std::string_view name) {
  if (name == "auto") return MethodChoice::automatic;
  if (name == "theorem1") return MethodChoice::theorem1;
  if (name == "residue") return MethodChoice::residue;
  if (name == "closed") return MethodChoice::closed;
  throw std::invalid_argument("unknown method: " + std::string(name));
}

// ------------------------------------------------------------ SamplePoints

SamplePoints::SamplePoints(std::vector<BigRational> lambdas) : lambdas_(std::move(lambdas)) {
  std::set<BigRational> seen(lambdas_.begin(), lambdas_.end());
  if (seen.size() != lambdas_.size()) throw std::invalid_argument("sample points must be pairwise distinct");
}

SamplePoints SamplePoints::standard(int n) {
  std::vector<BigRational> v;
  for (int i = 1; i <= n; ++i) v.emplace_back(i);
  return SamplePoints(std::move(v));
}

SamplePoints SamplePoints::random(int n, std::uint64_t seed, int span) {
  if (2 * span + 1 < n) throw std::invalid_argument("sample span too small for n distinct points");
  std::vector<int> pool(2 * span + 1);
  std::iota(pool.begin(), pool.end(), -span);
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<BigRational> v;
  for (int i = 0; i < n; ++i) v.emplace_back(pool[i]);
  return SamplePoints(std::move(v));
}

MethodDisagreement::MethodDisagreement(const DegreeResult& first, const DegreeResult& second)
    : std::runtime_error("methods disagree on delta" + first.triple.to_string() + ": " +
                         std::string(method_name(first.method)) + " gives " + to_string(first.delta) + ", " +
                         std::string(method_name(second.method)) + " gives " + to_string(second.delta)),
      first_(first),
      second_(second) {}

PatakiTriple duality_partner(const PatakiTriple& t) {
  return PatakiTriple::make(binomial_small(t.n() + 1, 2) - t.m(), t.n(), t.n() - t.r());
}

namespace {

using Clock = std::chrono::steady_clock;

BigInt require_positive_integer(const BigRational& q, const PatakiTriple& t, std::string_view method) {
  if (!is_integer(q) || q <= 0) {
    throw ConsistencyError(std::string(method) + " produced a non-positive or non-integral delta" + t.to_string() +
                           " = " + to_string(q));
  }
  return numerator_of(q);
}

int sign_power(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

// ------------------------------------------------------------- theorem 1

BigInt theorem1_coefficient(const PatakiTriple& t) {
  const int n = t.n();
  const int r = t.r();
  const SpacePtr space = xy_space(r, n);
  const ExponentCap cap = ExponentCap::uniform(n, n - 1);
  const Monomial target = Monomial::uniform(n, n - 1);
  auto var = [&](int i) { return SparsePolynomial::variable(space, static_cast<std::size_t>(i)); };

  std::vector<std::size_t> xs(r), ys(n - r);
  std::iota(xs.begin(), xs.end(), std::size_t{0});
  std::iota(ys.begin(), ys.end(), static_cast<std::size_t>(r));

  // Linear factors first: they are the sparsest and the cap keeps the running
  // product inside the box of exponents <= n-1.
  SparsePolynomial linear = SparsePolynomial::constant(space, 1);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i != j) linear = mul(linear, var(i) - var(j), cap);
    }
  }
  for (int i = r; i < n; ++i) {
    for (int j = r; j < n; ++j) {
      if (i != j) linear = mul(linear, var(i) - var(j), cap);
    }
  }
  for (int i = r; i < n; ++i) {
    for (int j = 0; j < r; ++j) linear = mul(linear, var(i) - var(j), cap);
  }

  const auto x_forms = pairwise_sum_forms(space, xs);
  const auto y_forms = pairwise_sum_forms(space, ys);
  const SparsePolynomial blocks =
      mul(complete_homogeneous(x_forms, t.l_script(), cap), complete_homogeneous(y_forms, t.k_script(), cap), cap);

  const BigRational c = coefficient_of_product(linear, blocks, target);
  if (!is_integer(c)) throw ConsistencyError("theorem-1 coefficient is not an integer");
  return numerator_of(c);
}

DegreeResult delta_theorem1(const PatakiTriple& t) {
  const auto start = Clock::now();
  const BigInt c = theorem1_coefficient(t);
  const BigInt denom = factorial(t.r()) * factorial(t.n() - t.r());
  const BigRational q = BigRational(c * sign_power(t.k_script()), denom);
  DegreeResult out{t, require_positive_integer(q, t, "theorem1"), Method::theorem1};
  out.elapsed = Clock::now() - start;
  return out;
}

// ---------------------------------------------------------- residue sum

namespace {

// e_0..e_upto of a list of numbers; entries beyond the list length are 0.
std::vector<BigRational> elementary_values(const std::vector<BigRational>& values, int upto) {
  std::vector<BigRational> e(upto + 1, BigRational(0));
  e[0] = 1;
  for (const auto& v : values) {
    for (int j = std::min<int>(upto, static_cast<int>(values.size())); j >= 1; --j) e[j] += v * e[j - 1];
  }
  return e;
}

// Toeplitz-Hessenberg determinant det(e_{j-i+1}) of size `size`, which equals h_size.
BigRational e_determinant(const std::vector<BigRational>& e, int size) {
  SquareMatrix<BigRational> m(static_cast<std::size_t>(size), BigRational(0));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const int index = j - i + 1;
      if (index >= 0) m(i, j) = e[index];
    }
  }
  return bareiss_determinant(std::move(m), BigRational(1));
}

std::vector<BigRational> pairwise_sums(const SamplePoints& pts, const std::vector<int>& subset) {
  std::vector<BigRational> out;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a; b < subset.size(); ++b) out.push_back(pts[subset[a]] + pts[subset[b]]);
  }
  return out;
}

}  // namespace

BigRational residue_total(const PatakiTriple& t, const SamplePoints& pts, ResidueForm form) {
  const int n = t.n();
  const int r = t.r();
  if (static_cast<int>(pts.size()) != n) throw std::invalid_argument("need exactly n sample points");
  const int l = t.l_script();
  const int k = t.k_script();

  BigRational total = 0;
  std::vector<bool> in_subset(n, false);
  std::fill(in_subset.begin(), in_subset.begin() + r, true);
  do {
    std::vector<int> inside, outside;
    for (int i = 0; i < n; ++i) (in_subset[i] ? inside : outside).push_back(i);

    const BigRational a_l = e_determinant(elementary_values(pairwise_sums(pts, inside), l), l);
    const BigRational a_k = e_determinant(elementary_values(pairwise_sums(pts, outside), k), k);
    BigRational cross = 1;
    for (int i : inside) {
      for (int j : outside) cross *= pts[i] - pts[j];
    }
    if (form == ResidueForm::signed_torus) cross *= sign_power(r * (n - r));
    total += a_l * a_k / cross;
  } while (std::prev_permutation(in_subset.begin(), in_subset.end()));

  const int sign = form == ResidueForm::rewritten ? sign_power(k) : sign_power(l);
  return total * sign;
}

DegreeResult delta_residue(const PatakiTriple& t, const SamplePoints& pts) {
  const auto start = Clock::now();
  DegreeResult out{t, require_positive_integer(residue_total(t, pts), t, "residue"), Method::residue};
  out.elapsed = Clock::now() - start;
  return out;
}

DegreeResult delta_residue(const PatakiTriple& t) { return delta_residue(t, SamplePoints::standard(t.n())); }

// ----------------------------------------------------------- closed forms

namespace {

std::optional<BigInt> closed_value(const PatakiTriple& t) {
  const int m = t.m();
  const int n = t.n();
  if (t.r() == n - 1) return BigInt(BigInt(1) << (m - 1)) * binomial(n, m);
  if (t.r() == n - 2 && m == 3) return binomial(n + 1, 3);
  if (t.r() == n - 2 && m == 4) return BigInt(6 * binomial(n + 1, 4));
  return std::nullopt;
}

}  // namespace

std::optional<DegreeResult> delta_closed(const PatakiTriple& t) {
  const auto start = Clock::now();
  std::optional<DegreeResult> out;
  if (auto v = closed_value(t)) {
    out = DegreeResult{t, *v, Method::closed_form};
  } else if (auto dual = closed_value(duality_partner(t))) {
    out = DegreeResult{t, *dual, Method::duality_reduced};
  }
  if (out) out->elapsed = Clock::now() - start;
  return out;
}

// ------------------------------------------------------------- dispatcher

namespace {

constexpr int kTheorem1CrossCheckLimit = 6;

DegreeResult residue_with(const PatakiTriple& t, const DeltaOptions& options) {
  return options.points ? delta_residue(t, *options.points) : delta_residue(t);
}

DegreeResult primary(const PatakiTriple& t, const DeltaOptions& options) {
  switch (options.method) {
    case MethodChoice::theorem1:
      return delta_theorem1(t);
    case MethodChoice::residue:
      return residue_with(t, options);
    case MethodChoice::closed: {
      auto closed = delta_closed(t);
      if (!closed) throw std::invalid_argument("no closed form applies to " + t.to_string());
      return *closed;
    }
    case MethodChoice::automatic:
      break;
  }
  if (auto closed = delta_closed(t)) return *closed;
  // The subset sum is evaluated for whichever of t and its dual has the smaller rank.
  const PatakiTriple dual = duality_partner(t);
  if (dual.r() < t.r()) {
    DegreeResult out = residue_with(dual, options);
    out.triple = t;
    return out;
  }
  return residue_with(t, options);
}

DegreeResult secondary(const PatakiTriple& t, const DegreeResult& first, const DeltaOptions& options) {
  if (first.method != Method::residue) return residue_with(t, options);
  if (auto closed = delta_closed(t)) return *closed;
  if (t.n() <= kTheorem1CrossCheckLimit) return delta_theorem1(t);
  DegreeResult out = delta_residue(duality_partner(t), SamplePoints::random(t.n(), 0x5d9ull + t.m()));
  out.triple = t;
  return out;
}

}  // namespace

DegreeResult delta(const PatakiTriple& t, const DeltaOptions& options) {
  DegreeResult out = primary(t, options);
  if (options.cross_check) {
    const DegreeResult check = secondary(t, out, options);
    if (check.delta != out.delta) throw MethodDisagreement(out, check);
    out.verified_by = check.method;
  }
  return out;
}

}  // namespace sdpdeg
