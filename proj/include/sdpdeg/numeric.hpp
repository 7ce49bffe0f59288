#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace sdpdeg {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

/// Raised when an exact computation produces a value that the mathematics
/// forbids (non-integral degree, inexact division). Always indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);

// Plain int64 binomial for bookkeeping on small arguments (Pataki bounds).
std::int64_t binomial_small(std::int64_t n, std::int64_t k);

inline bool is_integer(const BigRational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline BigInt numerator_of(const BigRational& q) {
  return boost::multiprecision::numerator(q);
}

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& q);

}  // namespace sdpdeg
