#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sdpdeg/degree.hpp"
#include "sdpdeg/records.hpp"
#include "sdpdeg/verify.hpp"

namespace {

using namespace sdpdeg;

constexpr int kExitFailure = 1;
constexpr int kExitInvalidTriple = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitNotApplicable = 4;

std::vector<BigRational> parse_lambda(const std::string& text) {
  std::vector<BigRational> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.emplace_back(item);
  return out;
}

unsigned worker_count() {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SDPDEG_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) workers = std::min(workers, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed SDPDEG_THREADS=" << env << "\n";
    }
  }
  return workers;
}

void emit(std::span<const OutputRecord> records, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(records);
  } else if (format == "csv") {
    std::cout << to_csv(records);
  } else {
    for (const auto& r : records) std::cout << to_line(r) << "\n";
  }
}

int run_value(int m, int n, int r, const std::string& method, bool check, const std::string& lambda,
              const std::string& format) {
  std::optional<PatakiTriple> t;
  try {
    t = PatakiTriple::make(m, n, r);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidTriple;
  }
  DeltaOptions options;
  options.method = parse_method_choice(method);
  options.cross_check = check;
  if (!lambda.empty()) {
    options.points = SamplePoints(parse_lambda(lambda));
    if (static_cast<int>(options.points->size()) != n) {
      std::cerr << "error: --lambda needs exactly n=" << n << " values\n";
      return kExitFailure;
    }
  }
  const OutputRecord rec = to_record(delta(*t, options));
  emit(std::span(&rec, 1), format);
  return 0;
}

int run_table(int n, const std::string& method, bool check_duality, const std::string& format) {
  if (n < 2) {
    std::cerr << "error: table needs n >= 2\n";
    return kExitFailure;
  }
  const std::vector<PatakiTriple> triples = pataki_triples(n);
  std::vector<std::optional<DegreeResult>> results(triples.size());
  std::vector<std::optional<BigInt>> independent(triples.size());
  std::vector<std::string> errors(triples.size());
  DeltaOptions options;
  options.method = parse_method_choice(method);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < triples.size(); i = next++) {
      try {
        results[i] = delta(triples[i], options);
        // Duality check compares values computed on each triple itself, never through the dual.
        if (check_duality) independent[i] = delta_residue(triples[i]).delta;
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(triples.size()));
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << "error: " << triples[i].to_string() << ": " << errors[i] << "\n";
      return errors[i].find("no closed form") != std::string::npos ? kExitNotApplicable : kExitFailure;
    }
  }

  if (check_duality) {
    int violations = 0;
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const PatakiTriple dual = duality_partner(triples[i]);
      const auto j = static_cast<std::size_t>(std::find(triples.begin(), triples.end(), dual) - triples.begin());
      if (*independent[i] != *independent[j]) {
        ++violations;
        std::cerr << "duality violation: delta" << triples[i].to_string() << " = " << to_string(*independent[i])
                  << " but delta" << dual.to_string() << " = " << to_string(*independent[j]) << "\n";
      }
    }
    if (violations > 0) return kExitDisagreement;
    std::cerr << "duality verified for " << triples.size() << " triples\n";
  }

  std::vector<OutputRecord> records;
  for (const auto& r : results) records.push_back(to_record(*r));
  emit(records, format.empty() ? "csv" : format);
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, int max_n) {
  std::vector<verify::SuiteReport> reports;
  if (suite == "lemma21" || suite == "all") reports.push_back(verify::lemma21(seed));
  if (suite == "prop22" || suite == "all") reports.push_back(verify::prop22(seed));
  if (suite == "identities" || suite == "all") reports.push_back(verify::identities());
  if (suite == "cross-methods" || suite == "all") reports.push_back(verify::cross_methods(max_n, seed));
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << r.summary() << "\n";
    ok = ok && r.ok();
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic degree of semidefinite programming, computed exactly"};
  app.require_subcommand(1);

  int m = 0, n = 0, r = 0;
  std::string method = "auto";
  bool check = false;
  std::string lambda;
  std::string format;
  bool check_duality = false;
  std::string suite = "all";
  std::uint64_t seed = 1;
  int max_n = 5;

  const std::vector<std::string> methods{"auto", "theorem1", "residue", "closed"};

  auto* value = app.add_subcommand("value", "delta(m, n, r) for one triple (requires 1 <= r <= n-1)");
  value->add_option("M", m, "dimension of the affine constraint space")->required();
  value->add_option("N", n, "matrix size")->required();
  value->add_option("R", r, "rank of the optimal solution, 1 <= R <= N-1")->required();
  value->add_option("--method", method, "auto|theorem1|residue|closed")->check(CLI::IsMember(methods));
  value->add_flag("--check", check, "verify with a second, independent method");
  value->add_option("--lambda", lambda, "comma-separated distinct sample points l1,...,ln");
  value->add_option("--format", format, "line|csv|json")->check(CLI::IsMember({"line", "csv", "json"}));

  auto* table = app.add_subcommand("table", "delta for every Pataki-valid (m, r) at fixed n");
  table->add_option("N", n, "matrix size, N >= 2")->required();
  table->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--check-duality", check_duality, "verify delta(m,n,r) = delta(C(n+1,2)-m, n, n-r)");
  table->add_option("--method", method, "auto|theorem1|residue|closed")->check(CLI::IsMember(methods));

  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("--suite", suite, "lemma21|prop22|identities|cross-methods|all")
      ->check(CLI::IsMember({"lemma21", "prop22", "identities", "cross-methods", "all"}));
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--max-n", max_n, "largest n for cross-methods");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*value) return run_value(m, n, r, method, check, lambda, format.empty() ? "line" : format);
    if (*table) return run_table(n, method, check_duality, format);
    if (*verify_cmd) return run_verify(suite, seed, max_n);
  } catch (const MethodDisagreement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool not_applicable = std::string(e.what()).find("no closed form") != std::string::npos;
    return not_applicable ? kExitNotApplicable : kExitFailure;
  }
  return kExitFailure;
}
