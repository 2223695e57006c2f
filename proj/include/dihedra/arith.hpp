#pragma once

// Exact integer foundations: checked 64-bit helpers, factorization,
// valuations, totient/Moebius, cyclotomic polynomials, integer matrices
// and the Smith normal form.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dihedra/errors.hpp"

namespace dihedra::arith {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Checked 64-bit arithmetic. Every helper throws OverflowError rather than
// wrapping.

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Non-negative gcd; gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t gcd(std::int64_t a, std::int64_t b, std::int64_t c);
/// Non-negative lcm, overflow-checked.
std::int64_t lcm(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b, std::int64_t c);

/// Representative of a modulo m in [0, m). Requires m > 0.
std::int64_t mod(std::int64_t a, std::int64_t m);

struct ExtendedGcd {
  std::int64_t g;  // gcd, >= 0
  std::int64_t x;  // a*x + b*y == g
  std::int64_t y;
};
/// a*b mod m in [0, m) without intermediate overflow. Requires m > 0.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo m in [0, m); throws InvalidArgument when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

// ---------------------------------------------------------------------------
// Factorization and multiplicative functions.

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t m);

class PrimeFactorization {
 public:
  PrimeFactorization() = default;
  explicit PrimeFactorization(std::map<std::uint64_t, unsigned> factors);

  const std::map<std::uint64_t, unsigned>& factors() const noexcept { return factors_; }
  std::vector<std::uint64_t> primes() const;
  /// Product of prime^exponent; throws OverflowError past 2^63.
  std::int64_t value() const;
  bool empty() const noexcept { return factors_.empty(); }

  bool operator==(const PrimeFactorization&) const = default;

 private:
  std::map<std::uint64_t, unsigned> factors_;
};

/// Trial division with a primality shortcut on the cofactor. m = 0 rejected.
PrimeFactorization factorize(std::uint64_t m);

/// Exponent of the largest power of the prime p dividing m.
unsigned valuation(std::uint64_t p, std::int64_t m);

std::int64_t totient(std::int64_t m);
int moebius(std::int64_t m);
/// Number of positive divisors.
std::int64_t divisor_count(std::int64_t m);
/// Positive divisors in increasing order.
std::vector<std::int64_t> divisors(std::int64_t m);
/// Primes dividing m, increasing; prime_support(1) is empty.
std::vector<std::int64_t> prime_support(std::int64_t m);

// ---------------------------------------------------------------------------
// Cyclotomic polynomials.

struct CyclotomicPoly {
  std::int64_t index = 1;
  std::vector<std::int64_t> coeffs;  // ascending degree, size = totient(index) + 1

  std::size_t degree() const noexcept { return coeffs.size() - 1; }
};

/// Phi_n via the Moebius product of the binomials x^d - 1, d | n.
CyclotomicPoly cyclotomic_poly(std::int64_t n);

// ---------------------------------------------------------------------------
// Integer matrices.

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<BigInt>& entries() const noexcept { return entries_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::vector<BigInt> row(std::size_t i) const;
  std::vector<BigInt> column(std::size_t j) const;

  IntMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& v);

IntMatrix matrix_power(const IntMatrix& a, std::uint64_t e);
BigInt trace(const IntMatrix& a);
/// Fraction-free Bareiss elimination.
BigInt determinant(const IntMatrix& a);
/// det(xI - A), ascending coefficients, via Faddeev-LeVerrier with exact
/// integer division.
std::vector<BigInt> characteristic_polynomial(const IntMatrix& a);
/// Companion matrix of a monic polynomial (ascending coefficients):
/// column j maps e_j to e_{j+1}; the last column holds -coeffs[0..deg).
IntMatrix companion_matrix(const std::vector<std::int64_t>& monic_coeffs);

/// Invariant factors d_1 | d_2 | ... of Z^cols / (row lattice of m).
/// Always returns cols() entries; trailing zeros encode free summands.
std::vector<BigInt> smith_normal_form(const IntMatrix& m);

/// Invariant factors of <a, b | p*a, q*b, r*(a+b)> for a triple satisfying
/// the pairwise-lcm condition; equals (gcd, lcm). Throws ConditionError
/// otherwise.
std::pair<BigInt, BigInt> h_double_prime_structure(std::int64_t p, std::int64_t q, std::int64_t r);

}  // namespace dihedra::arith
