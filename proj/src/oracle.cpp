#include "sdpdeg/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace sdpdeg::oracle {

RootedPolynomial::RootedPolynomial(std::vector<BigRational> roots) : roots_(std::move(roots)) {
  if (roots_.empty()) throw std::invalid_argument("rooted polynomial needs at least one root");
  std::set<BigRational> seen(roots_.begin(), roots_.end());
  if (seen.size() != roots_.size()) throw std::invalid_argument("roots must be pairwise distinct");
}

BigRational RootedPolynomial::derivative_at_root(std::size_t j) const {
  BigRational d = 1;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (i != j) d *= roots_[j] - roots_[i];
  }
  return d;
}

BigRational residue_sum(std::span<const RootedPolynomial> qs, const SparsePolynomial& f) {
  if (qs.size() != f.arity()) throw std::invalid_argument("need one rooted polynomial per variable");
  int bound = 0;
  for (const auto& q : qs) bound += q.degree() - 1;
  if (f.degree() > bound) {
    throw std::invalid_argument("deg F = " + std::to_string(f.degree()) + " exceeds sum of d_i = " +
                                std::to_string(bound));
  }
  std::vector<std::vector<BigRational>> weights(qs.size());
  for (std::size_t v = 0; v < qs.size(); ++v) {
    for (std::size_t j = 0; j < qs[v].roots().size(); ++j) weights[v].push_back(1 / qs[v].derivative_at_root(j));
  }
  BigRational total = 0;
  std::vector<std::size_t> choice(qs.size(), 0);
  std::vector<BigRational> point(qs.size());
  while (true) {
    BigRational weight = 1;
    for (std::size_t v = 0; v < qs.size(); ++v) {
      point[v] = qs[v].roots()[choice[v]];
      weight *= weights[v][choice[v]];
    }
    total += evaluate(f, point) * weight;
    std::size_t v = 0;
    while (v < qs.size() && ++choice[v] == qs[v].roots().size()) choice[v++] = 0;
    if (v == qs.size()) break;
  }
  return total;
}

bool is_doubly_symmetric(const SparsePolynomial& p, int r) {
  if (r < 0 || static_cast<std::size_t>(r) > p.arity()) throw std::invalid_argument("block split out of range");
  return is_symmetric_in(p, 0, static_cast<std::size_t>(r)) && is_symmetric_in(p, static_cast<std::size_t>(r), p.arity());
}

BigRational doubly_symmetric_sum(const SparsePolynomial& p, const SamplePoints& lambdas, int r) {
  const int n = static_cast<int>(lambdas.size());
  if (static_cast<int>(p.arity()) != n) throw std::invalid_argument("P must have one variable per sample point");
  if (r < 1 || r >= n) throw std::invalid_argument("need 1 <= r <= n-1");
  if (!is_doubly_symmetric(p, r)) throw std::invalid_argument("P is not doubly symmetric");
  if (p.degree() > r * (n - r)) throw std::invalid_argument("deg P exceeds r(n-r)");

  BigRational total = 0;
  std::vector<bool> in_subset(n, false);
  std::fill(in_subset.begin(), in_subset.begin() + r, true);
  do {
    std::vector<BigRational> point;
    std::vector<int> inside, outside;
    for (int i = 0; i < n; ++i) (in_subset[i] ? inside : outside).push_back(i);
    for (int i : inside) point.push_back(lambdas[i]);
    for (int j : outside) point.push_back(lambdas[j]);
    BigRational denom = 1;
    for (int i : inside) {
      for (int j : outside) denom *= lambdas[i] - lambdas[j];
    }
    total += evaluate(p, point) / denom;
  } while (std::prev_permutation(in_subset.begin(), in_subset.end()));
  return total;
}

BigRational d_coefficient(const SparsePolynomial& p, int r, int n) {
  if (static_cast<int>(p.arity()) != n) throw std::invalid_argument("P must have n variables");
  const SpacePtr& space = p.space();
  auto var = [&](int i) { return SparsePolynomial::variable(space, static_cast<std::size_t>(i)); };
  SparsePolynomial f = p;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool i_is_x = i < r;
      const bool j_is_x = j < r;
      // Same block: both orders. Across blocks: only (y_i - x_j).
      if (i_is_x == j_is_x || !i_is_x) f = f * (var(i) - var(j));
    }
  }
  return coefficient_of(f, Monomial::uniform(static_cast<std::size_t>(n), n - 1));
}

SparsePolynomial random_doubly_symmetric(int r, int n, int max_deg, std::uint64_t seed) {
  if (r < 1 || r >= n) throw std::invalid_argument("need 1 <= r <= n-1");
  if (max_deg < 0 || max_deg > r * (n - r)) throw std::invalid_argument("max_deg must lie in [0, r(n-r)]");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff_dist(-5, 5);
  std::uniform_int_distribution<int> degree_dist(0, max_deg);
  std::uniform_int_distribution<int> var_dist(0, n - 1);
  std::uniform_int_distribution<int> count_dist(1, 4);

  const SpacePtr space = xy_space(r, n);
  std::vector<Term> seeds;
  const int count = count_dist(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<int> e(n, 0);
    const int d = degree_dist(rng);
    for (int u = 0; u < d; ++u) ++e[var_dist(rng)];
    int c = coeff_dist(rng);
    if (c == 0) c = 1;
    seeds.push_back(Term{Monomial(std::move(e)), BigRational(c)});
  }

  // Orbit sum over S_r x S_{n-r}.
  std::vector<Term> orbit;
  std::vector<int> px(r), py(n - r);
  std::iota(px.begin(), px.end(), 0);
  do {
    std::iota(py.begin(), py.end(), r);
    do {
      for (const auto& s : seeds) {
        std::vector<int> e(n);
        for (int i = 0; i < r; ++i) e[px[i]] = s.monomial[i];
        for (int i = 0; i < n - r; ++i) e[py[i]] = s.monomial[r + i];
        orbit.push_back(Term{Monomial(std::move(e)), s.coeff});
      }
    } while (std::next_permutation(py.begin(), py.end()));
  } while (std::next_permutation(px.begin(), px.end()));
  return SparsePolynomial(space, std::move(orbit));
}

}  // namespace sdpdeg::oracle
