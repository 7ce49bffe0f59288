#include "sdpdeg/verify.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "sdpdeg/degree.hpp"
#include "sdpdeg/oracle.hpp"
#include "sdpdeg/partitions.hpp"
#include "sdpdeg/polynomial.hpp"
#include "sdpdeg/schur.hpp"

namespace sdpdeg::verify {

void SuiteReport::record(bool pass, const std::string& description) {
  ++total;
  if (pass) {
    ++passed;
  } else if (!first_failure) {
    first_failure = description;
  }
}

std::string SuiteReport::summary() const {
  std::ostringstream out;
  out << name << ": " << passed << "/" << total << " passed";
  if (first_failure) out << "\n  first counterexample: " << *first_failure;
  return out.str();
}

namespace {

void absorb(SuiteReport& into, const SuiteReport& part) {
  into.passed += part.passed;
  into.total += part.total;
  if (!into.first_failure && part.first_failure) into.first_failure = part.name + ": " + *part.first_failure;
}

std::string join(const std::vector<BigRational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].str();
  return out;
}

std::vector<BigRational> distinct_integers(std::mt19937_64& rng, int count, int span) {
  std::vector<int> pool(2 * span + 1);
  std::iota(pool.begin(), pool.end(), -span);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<BigRational> out;
  for (int i = 0; i < count; ++i) out.emplace_back(pool[i]);
  return out;
}

}  // namespace

SuiteReport lemma21(std::uint64_t seed, int cases) {
  SuiteReport report{"lemma21"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    const int vars = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<oracle::RootedPolynomial> qs;
    std::vector<int> target(vars);
    int bound = 0;
    for (int v = 0; v < vars; ++v) {
      const int roots = std::uniform_int_distribution<int>(1, 4)(rng);
      qs.emplace_back(distinct_integers(rng, roots, 9));
      target[v] = roots - 1;
      bound += roots - 1;
    }
    const SpacePtr space = indexed_space("x", static_cast<std::size_t>(vars));
    // The target monomial with a random coefficient plus random terms of degree <= bound.
    std::vector<Term> terms;
    std::uniform_int_distribution<int> coeff(-7, 7);
    terms.push_back(Term{Monomial(target), BigRational(coeff(rng))});
    const int extra = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int t = 0; t < extra; ++t) {
      std::vector<int> e(vars, 0);
      const int d = std::uniform_int_distribution<int>(0, bound)(rng);
      for (int u = 0; u < d; ++u) ++e[std::uniform_int_distribution<int>(0, vars - 1)(rng)];
      terms.push_back(Term{Monomial(std::move(e)), BigRational(coeff(rng))});
    }
    const SparsePolynomial f(space, std::move(terms));
    const BigRational lhs = oracle::residue_sum(qs, f);
    const BigRational rhs = coefficient_of(f, Monomial(target));
    std::ostringstream desc;
    desc << "case " << c << ": F = " << f.to_string() << ", roots =";
    for (const auto& q : qs) desc << " {" << join(q.roots()) << "}";
    desc << ", residue sum = " << lhs.str() << ", coefficient = " << rhs.str();
    report.record(lhs == rhs, desc.str());
  }
  return report;
}

SuiteReport prop22(std::uint64_t seed, int polynomials, int point_sets) {
  SuiteReport report{"prop22"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < polynomials; ++c) {
    const int r = std::uniform_int_distribution<int>(1, 2)(rng);
    const int n = std::uniform_int_distribution<int>(r + 1, 4)(rng);
    const int max_deg = std::uniform_int_distribution<int>(0, r * (n - r))(rng);
    const SparsePolynomial p = oracle::random_doubly_symmetric(r, n, max_deg, rng());
    const BigRational rhs = oracle::d_coefficient(p, r, n) /
                            BigRational(factorial(r) * factorial(n - r));
    for (int s = 0; s < point_sets; ++s) {
      const SamplePoints pts(distinct_integers(rng, n, 9));
      const BigRational lhs = oracle::doubly_symmetric_sum(p, pts, r);
      std::ostringstream desc;
      desc << "r=" << r << " n=" << n << " P = " << p.to_string() << ", lambda = (" << join(pts.values())
           << "), subset sum = " << lhs.str() << ", d/(r!(n-r)!) = " << rhs.str();
      report.record(lhs == rhs, desc.str());
    }
  }
  return report;
}

SuiteReport h2_example() {
  SuiteReport report{"h2-example"};
  const SpacePtr space = indexed_space("x", 2);
  const std::vector<std::size_t> vars{0, 1};
  const auto forms = pairwise_sum_forms(space, vars);
  const SparsePolynomial h2 = complete_homogeneous(forms, 2);
  const SparsePolynomial expected(space, {Term{Monomial({2, 0}), 7}, Term{Monomial({1, 1}), 10},
                                          Term{Monomial({0, 2}), 7}});
  report.record(h2 == expected, "h_2 = " + h2.to_string() + ", expected " + expected.to_string());
  SchurExpansion want;
  want.add(Partition({2}), 7);
  want.add(Partition({1, 1}), 3);
  const SchurExpansion got = schur_decompose(h2);
  report.record(got == want, "decomposition " + got.to_string() + ", expected " + want.to_string());
  const SchurExpansion via_psi = h_schur_expansion(2, 2);
  report.record(via_psi == want, "psi expansion " + via_psi.to_string() + ", expected " + want.to_string());
  return report;
}

SuiteReport psi_single_gap(int max_r) {
  SuiteReport report{"psi-single-gap"};
  for (int r = 1; r <= max_r; ++r) {
    for (int k = 0; k <= r - 1; ++k) {
      const IndexSet rows = range_without(r, {k});
      const BigInt got = psi(rows);
      const BigInt want = binomial(r + 1, k + 1);
      report.record(got == want, "psi(" + rows.to_string() + ") = " + to_string(got) + ", C(r+1,k+1) = " +
                                     to_string(want));
    }
  }
  return report;
}

SuiteReport psi_two_column(int max_r) {
  SuiteReport report{"psi-two-column"};
  for (int r = 1; r <= max_r; ++r) {
    for (int k = 0; k <= r; ++k) {
      std::vector<int> parts(r - k, 2);
      parts.resize(r, 1);
      const Partition lam(parts);
      const IndexSet rows = index_set_of(lam, r);
      const BigInt got = psi(rows);
      const BigInt want = BigInt(k + 1) * binomial(r + 3, k + 3);
      report.record(got == want, "psi(" + rows.to_string() + ") for lambda " + lam.to_string() + " = " +
                                     to_string(got) + ", (k+1)C(r+3,k+3) = " + to_string(want));
    }
  }
  return report;
}

SuiteReport vandermonde_square(int max_r, int max_n) {
  SuiteReport report{"vandermonde-square"};
  for (int r = 1; r <= max_r; ++r) {
    const SpacePtr space = indexed_space("x", static_cast<std::size_t>(r));
    SparsePolynomial square = SparsePolynomial::constant(space, 1);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        if (i != j) square = square * (SparsePolynomial::variable(space, i) - SparsePolynomial::variable(space, j));
      }
    }
    for (int n = r + 1; n <= max_n; ++n) {
      const Monomial target = Monomial::uniform(static_cast<std::size_t>(r), n - 1);
      const Partition rect = rectangle(n - r, r);
      for (int w = 0; w <= r * (n - r); ++w) {
        for (const auto& lam : enumerate_partitions(w, r)) {
          const BigRational got = coefficient_of_product(schur_bialternant(lam, space), square, target);
          const BigRational want = lam == rect ? BigRational(factorial(r)) : BigRational(0);
          report.record(got == want, "r=" + std::to_string(r) + " n=" + std::to_string(n) + " lambda " +
                                         lam.to_string() + ": coefficient " + got.str() + ", expected " + want.str());
        }
      }
    }
  }
  return report;
}

SuiteReport h_expansion(int max_r, int max_d) {
  SuiteReport report{"h-expansion"};
  for (int r = 1; r <= max_r; ++r) {
    const SpacePtr space = indexed_space("x", static_cast<std::size_t>(r));
    std::vector<std::size_t> vars(r);
    std::iota(vars.begin(), vars.end(), std::size_t{0});
    const auto forms = pairwise_sum_forms(space, vars);
    for (int d = 0; d <= max_d; ++d) {
      const SchurExpansion symbolic = schur_decompose(complete_homogeneous(forms, d));
      const SchurExpansion weighted = h_schur_expansion(d, r);
      report.record(symbolic == weighted, "r=" + std::to_string(r) + " d=" + std::to_string(d) + ": symbolic " +
                                              symbolic.to_string() + ", psi-weighted " + weighted.to_string());
    }
  }
  return report;
}

SuiteReport identities() {
  SuiteReport report{"identities"};
  absorb(report, h2_example());
  absorb(report, psi_single_gap());
  absorb(report, psi_two_column());
  absorb(report, vandermonde_square());
  absorb(report, h_expansion());
  return report;
}

SuiteReport cross_methods(int max_n, std::uint64_t seed) {
  SuiteReport report{"cross-methods"};
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& t : pataki_triples(n)) {
      const DegreeResult residue = delta_residue(t);
      const DegreeResult theorem = delta_theorem1(t);
      const DegreeResult shifted = delta_residue(t, SamplePoints::random(n, seed + 977 * t.m() + 31 * n + t.r()));
      const DegreeResult dual = delta_residue(duality_partner(t));
      std::string desc = t.to_string() + ": residue " + to_string(residue.delta) + ", theorem1 " +
                         to_string(theorem.delta) + ", residue at random points " + to_string(shifted.delta) +
                         ", residue of dual " + to_string(dual.delta);
      bool ok = residue.delta == theorem.delta && residue.delta == shifted.delta && residue.delta == dual.delta;
      if (auto closed = delta_closed(t)) {
        desc += ", closed " + to_string(closed->delta);
        ok = ok && closed->delta == residue.delta;
      }
      report.record(ok, desc);
    }
  }
  return report;
}

}  // namespace sdpdeg::verify
