#include "sdpdeg/numeric.hpp"

namespace sdpdeg {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

std::int64_t binomial_small(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRational& q) { return q.str(); }

}  // namespace sdpdeg
