// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sdpdeg/degree.hpp"
#include "sdpdeg/numeric.hpp"
#include "sdpdeg/verify.hpp"

namespace {

using namespace sdpdeg;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Every delta produced by criteria 1-5 passes through here for criterion 9.
struct IntegralityLedger {
  long checked = 0;
  long violations = 0;
  std::string first_violation;

  void note(const DegreeResult& r) {
    ++checked;
    if (r.delta <= 0) {
      ++violations;
      if (first_violation.empty()) first_violation = r.triple.to_string() + " -> " + to_string(r.delta);
    }
  }
  void note_error(const std::string& what) {
    ++checked;
    ++violations;
    if (first_violation.empty()) first_violation = what;
  }
} ledger;

DegreeResult tracked(const std::function<DegreeResult()>& compute) {
  try {
    DegreeResult r = compute();
    ledger.note(r);
    return r;
  } catch (const ConsistencyError& e) {
    ledger.note_error(e.what());
    throw;
  }
}

DegreeResult residue(const PatakiTriple& t) {
  return tracked([&] { return delta_residue(t); });
}
DegreeResult residue(const PatakiTriple& t, const SamplePoints& pts) {
  return tracked([&] { return delta_residue(t, pts); });
}
DegreeResult theorem1(const PatakiTriple& t) {
  return tracked([&] { return delta_theorem1(t); });
}

std::string mismatch(const PatakiTriple& t, const std::string& what, const BigInt& got, const BigInt& want) {
  return t.to_string() + " " + what + ": got " + to_string(got) + ", expected " + to_string(want);
}

Outcome closed_form_corank_one() {
  Outcome out;
  int count = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int m = 1; m <= n; ++m) {
      const auto t = PatakiTriple::make(m, n, n - 1);
      const BigInt want = BigInt(BigInt(1) << (m - 1)) * binomial(n, m);
      const BigInt got = residue(t).delta;
      if (got != want) out.fail(mismatch(t, "residue vs 2^(m-1) C(n,m)", got, want));
      ++count;
    }
  }
  out.detail = out.pass ? std::to_string(count) + " triples" : out.detail;
  return out;
}

Outcome closed_form_corank_two() {
  Outcome out;
  int count = 0;
  for (int n = 4; n <= 8; ++n) {
    const auto t3 = PatakiTriple::make(3, n, n - 2);
    const auto t4 = PatakiTriple::make(4, n, n - 2);
    const BigInt want3 = binomial(n + 1, 3);
    const BigInt want4 = 6 * binomial(n + 1, 4);
    const BigInt got3 = residue(t3).delta;
    const BigInt got4 = residue(t4).delta;
    if (got3 != want3) out.fail(mismatch(t3, "residue vs C(n+1,3)", got3, want3));
    if (got4 != want4) out.fail(mismatch(t4, "residue vs 6 C(n+1,4)", got4, want4));
    count += 2;
    if (n <= 6) {
      const BigInt th3 = theorem1(t3).delta;
      const BigInt th4 = theorem1(t4).delta;
      if (th3 != want3) out.fail(mismatch(t3, "theorem1", th3, want3));
      if (th4 != want4) out.fail(mismatch(t4, "theorem1", th4, want4));
      count += 2;
    }
  }
  const struct {
    int m, n, r, value;
  } spots[] = {{3, 4, 2, 10}, {4, 4, 2, 30}, {3, 5, 3, 20}, {4, 5, 3, 90}};
  for (const auto& s : spots) {
    const auto t = PatakiTriple::make(s.m, s.n, s.r);
    const BigInt got = residue(t).delta;
    if (got != s.value) out.fail(mismatch(t, "spot value", got, s.value));
    ++count;
  }
  out.detail = out.pass ? std::to_string(count) + " checks" : out.detail;
  return out;
}

Outcome duality() {
  Outcome out;
  int count = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& t : pataki_triples(n)) {
      const auto dual = duality_partner(t);
      const BigInt a = residue(t).delta;
      const BigInt b = residue(dual).delta;
      if (a != b) out.fail(mismatch(t, "vs dual " + dual.to_string(), a, b));
      ++count;
    }
  }
  out.detail = out.pass ? std::to_string(count) + " triples" : out.detail;
  return out;
}

Outcome cross_method() {
  Outcome out;
  int count = 0, k_zero = 0, l_zero = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& t : pataki_triples(n)) {
      const BigInt a = theorem1(t).delta;
      const BigInt b = residue(t).delta;
      if (a != b) out.fail(mismatch(t, "theorem1 vs residue", a, b));
      ++count;
      k_zero += t.k_script() == 0;
      l_zero += t.l_script() == 0;
    }
  }
  if (k_zero == 0 || l_zero == 0) out.fail("boundary triples with k = 0 and l = 0 were not covered");
  out.detail = out.pass ? std::to_string(count) + " triples (" + std::to_string(k_zero) + " with k=0, " +
                              std::to_string(l_zero) + " with l=0)"
                        : out.detail;
  return out;
}

Outcome sample_point_invariance() {
  Outcome out;
  int count = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& t : pataki_triples(n)) {
      std::vector<BigInt> values;
      for (std::uint64_t s = 0; s < 3; ++s) {
        values.push_back(residue(t, SamplePoints::random(n, 1000 * s + 10 * n + t.m())).delta);
      }
      if (values[0] != values[1] || values[0] != values[2]) {
        out.fail(t.to_string() + ": " + to_string(values[0]) + ", " + to_string(values[1]) + ", " +
                 to_string(values[2]));
      }
      ++count;
    }
  }
  out.detail = out.pass ? std::to_string(count) + " triples x 3 point sets" : out.detail;
  return out;
}

Outcome from_report(const verify::SuiteReport& report, int expected_total) {
  Outcome out;
  if (report.total != expected_total) {
    out.fail(report.name + " ran " + std::to_string(report.total) + " cases, expected " +
             std::to_string(expected_total));
  }
  if (!report.ok()) out.fail(report.summary());
  if (out.pass) out.detail = std::to_string(report.passed) + "/" + std::to_string(report.total);
  return out;
}

Outcome lemma21_suite() { return from_report(verify::lemma21(2024), 100); }
Outcome prop22_suite() { return from_report(verify::prop22(2024, 50, 3), 150); }

Outcome schur_identities() {
  Outcome out;
  std::ostringstream detail;
  const std::vector<std::pair<std::string, verify::SuiteReport>> parts = {
      {"a", verify::h2_example()},
      {"b", verify::psi_single_gap(8)},
      {"c", verify::psi_two_column(6)},
      {"d", verify::vandermonde_square(3, 5)},
      {"e", verify::h_expansion(3, 4)},
  };
  for (const auto& [label, report] : parts) {
    if (!report.ok()) out.fail("(" + label + ") " + report.summary());
    detail << "(" << label << ") " << report.passed << "/" << report.total << " ";
  }
  if (out.pass) out.detail = detail.str();
  return out;
}

Outcome integrality() {
  Outcome out;
  if (ledger.checked == 0) out.fail("no delta values were recorded");
  if (ledger.violations > 0) {
    out.fail(std::to_string(ledger.violations) + " violations, first: " + ledger.first_violation);
  }
  if (out.pass) out.detail = std::to_string(ledger.checked) + " delta values, all positive integers";
  return out;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
  double time_limit_s;  // 0 = none stated
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closed form delta(m,n,n-1) = 2^(m-1) C(n,m), n in [2,8]", closed_form_corank_one, 30},
      {2, "closed forms delta(3,n,n-2), delta(4,n,n-2), n in [4,8]", closed_form_corank_two, 120},
      {3, "duality for every valid triple with n <= 6", duality, 120},
      {4, "theorem1 = residue for every valid triple with n <= 5", cross_method, 300},
      {5, "residue invariant across 3 random point sets, n <= 5", sample_point_invariance, 0},
      {6, "residue sum over roots equals target coefficient (100 cases)", lemma21_suite, 0},
      {7, "doubly symmetric subset sum equals d(r,n)/(r!(n-r)!) (150 cases)", prop22_suite, 0},
      {8, "Schur identities (a)-(e)", schur_identities, 0},
      {9, "every delta from criteria 1-5 is a positive integer", integrality, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds > c.time_limit_s) {
      outcome.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.time_limit_s) + " s");
    }
    failures += outcome.pass ? 0 : 1;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.title << " -- " << outcome.detail
              << " (" << std::fixed << std::setprecision(2) << seconds << " s)" << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " acceptance criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
