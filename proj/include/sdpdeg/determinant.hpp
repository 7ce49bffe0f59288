#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sdpdeg/numeric.hpp"
#include "sdpdeg/polynomial.hpp"

namespace sdpdeg {

/// Dense row-major square matrix over an exact ring.
template <typename Scalar>
class SquareMatrix {
 public:
  SquareMatrix(std::size_t size, const Scalar& fill) : size_(size), data_(size * size, fill) {}

  std::size_t size() const { return size_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < size_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t size_;
  std::vector<Scalar> data_;
};

inline bool is_zero(const BigInt& v) { return v == 0; }
inline bool is_zero(const BigRational& v) { return v == 0; }
inline bool is_zero(const SparsePolynomial& p) { return p.is_zero(); }

inline BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw ConsistencyError("inexact integer division in Bareiss elimination");
  return q;
}
inline BigRational exact_quotient(const BigRational& a, const BigRational& b) { return a / b; }
inline SparsePolynomial exact_quotient(const SparsePolynomial& a, const SparsePolynomial& b) {
  return divide_exact(a, b);
}

/// Fraction-free (Bareiss) determinant. Every intermediate division is
/// exact over an integral domain; the empty matrix has determinant `one`.
template <typename Scalar>
Scalar bareiss_determinant(SquareMatrix<Scalar> m, const Scalar& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  Scalar previous = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t pivot = k + 1;
      while (pivot < n && is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return one - one;
      m.swap_rows(k, pivot);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), previous);
      }
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

}  // namespace sdpdeg
