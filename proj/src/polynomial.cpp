#include "sdpdeg/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sdpdeg {

VariableSpace::VariableSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("variable space needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
  }
}

SpacePtr make_space(std::vector<std::string> names) {
  return std::make_shared<const VariableSpace>(std::move(names));
}

SpacePtr indexed_space(const std::string& prefix, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return make_space(std::move(names));
}

SpacePtr xy_space(int r, int n) {
  if (r < 0 || n < r) throw std::invalid_argument("xy_space requires 0 <= r <= n");
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n - r; ++i) names.push_back("y" + std::to_string(i));
  return make_space(std::move(names));
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    degree_ += e;
  }
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] + other.exps_[i];
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out;
  out.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] - other.exps_[i];
  out.degree_ = degree_ - other.degree_;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.exps_ <=> b.exps_;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool ExponentCap::admits(std::span<const int> exps) const {
  if (!max_) return true;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > (*max_)[i]) return false;
  }
  return true;
}

bool ExponentCap::admits(const Monomial& m) const { return admits(m.exponents()); }

// --------------------------------------------------------- SparsePolynomial

namespace {

void sort_descending(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
}

void require_same_space(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (!same_space(a, b)) throw std::invalid_argument("polynomials live in different variable spaces");
}

// Merge of two descending term lists with b scaled by sign.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back(Term{b[j].monomial, negate_b ? BigRational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      BigRational c = negate_b ? BigRational(a[i].coeff - b[j].coeff) : BigRational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparsePolynomial::SparsePolynomial(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw std::invalid_argument("null variable space");
}

SparsePolynomial::SparsePolynomial(SpacePtr space, std::vector<Term> terms)
    : SparsePolynomial(std::move(space)) {
  std::unordered_map<Monomial, BigRational, MonomialHash> acc;
  for (auto& t : terms) {
    if (t.monomial.arity() != space_->arity()) {
      throw std::invalid_argument("monomial arity does not match the variable space");
    }
    acc[t.monomial] += t.coeff;
  }
  for (auto& [m, c] : acc) {
    if (c != 0) terms_.push_back(Term{m, std::move(c)});
  }
  sort_descending(terms_);
}

SparsePolynomial SparsePolynomial::constant(SpacePtr space, const BigRational& c) {
  return monomial(space, Monomial::one(space->arity()), c);
}

SparsePolynomial SparsePolynomial::variable(SpacePtr space, std::size_t index) {
  if (index >= space->arity()) throw std::out_of_range("variable index out of range");
  std::vector<int> e(space->arity(), 0);
  e[index] = 1;
  return monomial(space, Monomial(std::move(e)));
}

SparsePolynomial SparsePolynomial::monomial(SpacePtr space, const Monomial& m, const BigRational& c) {
  SparsePolynomial p(std::move(space));
  if (m.arity() != p.arity()) throw std::invalid_argument("monomial arity does not match the variable space");
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

SparsePolynomial SparsePolynomial::from_sorted(SpacePtr space, std::vector<Term> terms) {
  SparsePolynomial p(std::move(space));
  p.terms_ = std::move(terms);
  return p;
}

int SparsePolynomial::degree() const {
  int d = kZeroDegree;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool SparsePolynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.degree() == terms_.front().monomial.degree();
  });
}

const Term& SparsePolynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.front();
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  require_same_space(*this, other);
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  require_same_space(*this, other);
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (!same_space(a, b) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    BigRational c = t.coeff;
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      out << "-";
      c = -c;
    }
    first = false;
    const bool is_one = t.monomial.degree() == 0;
    if (c != 1 || is_one) out << c.str();
    bool need_sep = c != 1 && !is_one;
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (need_sep) out << "*";
      out << space_->name(i);
      if (t.monomial[i] > 1) out << "^" << t.monomial[i];
      need_sep = true;
    }
  }
  return out.str();
}

bool same_space(const SparsePolynomial& a, const SparsePolynomial& b) {
  return a.space() == b.space() || *a.space() == *b.space();
}

SparsePolynomial add(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial out(a);
  out += b;
  return out;
}

SparsePolynomial subtract(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial out(a);
  out -= b;
  return out;
}

SparsePolynomial scale(const SparsePolynomial& p, const BigRational& c) {
  SparsePolynomial out(p);
  out *= c;
  return out;
}

SparsePolynomial mul(const SparsePolynomial& a, const SparsePolynomial& b, const ExponentCap& cap) {
  require_same_space(a, b);
  std::unordered_map<Monomial, BigRational, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
  const std::size_t arity = a.arity();
  std::vector<int> exps(arity);
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      for (std::size_t i = 0; i < arity; ++i) exps[i] = ta.monomial[i] + tb.monomial[i];
      if (!cap.admits(exps)) continue;
      acc[Monomial(exps)] += ta.coeff * tb.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back(Term{m, std::move(c)});
  }
  sort_descending(terms);
  return SparsePolynomial::from_sorted(a.space(), std::move(terms));
}

SparsePolynomial truncate(const SparsePolynomial& p, const ExponentCap& cap) {
  std::vector<Term> kept;
  for (const auto& t : p.terms()) {
    if (cap.admits(t.monomial)) kept.push_back(t);
  }
  return SparsePolynomial(p.space(), std::move(kept));
}

BigRational coefficient_of(const SparsePolynomial& p, const Monomial& m) {
  if (m.arity() != p.arity()) throw std::invalid_argument("monomial arity does not match the variable space");
  auto terms = p.terms();
  auto it = std::lower_bound(terms.begin(), terms.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms.end() && it->monomial == m) return it->coeff;
  return 0;
}

BigRational coefficient_of_product(const SparsePolynomial& a, const SparsePolynomial& b, const Monomial& m) {
  require_same_space(a, b);
  BigRational sum = 0;
  for (const auto& ta : a.terms()) {
    if (!ta.monomial.divides(m)) continue;
    const BigRational cb = coefficient_of(b, m / ta.monomial);
    if (cb != 0) sum += ta.coeff * cb;
  }
  return sum;
}

BigRational evaluate(const SparsePolynomial& p, std::span<const BigRational> point) {
  if (point.size() != p.arity()) throw std::invalid_argument("evaluation point has the wrong length");
  BigRational sum = 0;
  for (const auto& t : p.terms()) {
    BigRational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int e = 0; e < t.monomial[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

SparsePolynomial divide_exact(const SparsePolynomial& dividend, const SparsePolynomial& divisor) {
  require_same_space(dividend, divisor);
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const Term& lead = divisor.leading_term();
  std::vector<Term> quotient;
  SparsePolynomial remainder = dividend;
  while (!remainder.is_zero()) {
    const Term& top = remainder.leading_term();
    if (!lead.monomial.divides(top.monomial)) {
      throw ConsistencyError("inexact polynomial division: remainder " + remainder.to_string());
    }
    Term q{top.monomial / lead.monomial, top.coeff / lead.coeff};
    remainder -= mul(SparsePolynomial::monomial(divisor.space(), q.monomial, q.coeff), divisor);
    quotient.push_back(std::move(q));
  }
  return SparsePolynomial::from_sorted(dividend.space(), std::move(quotient));
}

SparsePolynomial swap_variables(const SparsePolynomial& p, std::size_t i, std::size_t j) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<int> e = t.monomial.exponents();
    std::swap(e.at(i), e.at(j));
    terms.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return SparsePolynomial(p.space(), std::move(terms));
}

bool is_symmetric_in(const SparsePolynomial& p, std::size_t first, std::size_t last) {
  // Adjacent transpositions generate the symmetric group on the block.
  for (std::size_t i = first; i + 1 < last; ++i) {
    if (swap_variables(p, i, i + 1) != p) return false;
  }
  return true;
}

std::vector<SparsePolynomial> pairwise_sum_forms(const SpacePtr& space, std::span<const std::size_t> vars) {
  if (vars.empty()) throw std::invalid_argument("pairwise_sum_forms needs at least one variable");
  std::vector<SparsePolynomial> forms;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i; j < vars.size(); ++j) {
      forms.push_back(SparsePolynomial::variable(space, vars[i]) + SparsePolynomial::variable(space, vars[j]));
    }
  }
  return forms;
}

namespace {

// H_j <- H_j + f * H_{j-1} for each form. Ascending j lets a form be reused
// (complete homogeneous); descending j uses each form at most once (elementary).
SparsePolynomial symmetric_dp(std::span<const SparsePolynomial> forms, int degree, bool allow_reuse,
                              const ExponentCap& cap) {
  if (degree < 0) throw std::invalid_argument("symmetric function degree must be nonnegative");
  if (forms.empty()) throw std::invalid_argument("symmetric function over an empty list of forms");
  const SpacePtr& space = forms.front().space();
  std::vector<SparsePolynomial> h(degree + 1, SparsePolynomial(space));
  h[0] = SparsePolynomial::constant(space, 1);
  for (const auto& f : forms) {
    if (allow_reuse) {
      for (int j = 1; j <= degree; ++j) h[j] += mul(f, h[j - 1], cap);
    } else {
      for (int j = degree; j >= 1; --j) h[j] += mul(f, h[j - 1], cap);
    }
  }
  return truncate(h[degree], cap);
}

}  // namespace

SparsePolynomial complete_homogeneous(std::span<const SparsePolynomial> forms, int d, const ExponentCap& cap) {
  return symmetric_dp(forms, d, true, cap);
}

SparsePolynomial elementary_symmetric(std::span<const SparsePolynomial> forms, int k, const ExponentCap& cap) {
  if (!forms.empty() && k > static_cast<int>(forms.size())) return SparsePolynomial(forms.front().space());
  return symmetric_dp(forms, k, false, cap);
}

}  // namespace sdpdeg
