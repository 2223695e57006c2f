#include "dihedra/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dihedra/triples.hpp"

namespace dihedra::arith {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("int64 overflow in addition");
  }
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("int64 overflow in subtraction");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("int64 overflow in multiplication");
  }
  return out;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a == INT64_MIN || b == INT64_MIN) {
    throw OverflowError("gcd of INT64_MIN");
  }
  return std::gcd(a, b);
}

std::int64_t gcd(std::int64_t a, std::int64_t b, std::int64_t c) { return gcd(gcd(a, b), c); }

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::int64_t g = gcd(a, b);
  return checked_mul(std::abs(a / g), std::abs(b));
}

std::int64_t lcm(std::int64_t a, std::int64_t b, std::int64_t c) { return lcm(lcm(a, b), c); }

std::int64_t mod(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw InvalidArgument("mod: modulus must be positive");
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = checked_sub(old_r, checked_mul(q, r));
    std::swap(old_r, r);
    old_s = checked_sub(old_s, checked_mul(q, s));
    std::swap(old_s, s);
    old_t = checked_sub(old_t, checked_mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw InvalidArgument("inverse_mod: modulus must be positive");
  const auto eg = extended_gcd(mod(a, m), m);
  if (eg.g != 1) {
    throw InvalidArgument("inverse_mod: " + std::to_string(a) + " is not invertible mod " +
                          std::to_string(m));
  }
  return mod(eg.x, m);
}

__extension__ typedef unsigned __int128 u128;

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  if (m <= 0) throw InvalidArgument("mul_mod: modulus must be positive");
  const auto um = static_cast<std::uint64_t>(m);
  return static_cast<std::int64_t>(static_cast<u128>(static_cast<std::uint64_t>(mod(a, m))) *
                                   static_cast<std::uint64_t>(mod(b, m)) % um);
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (m % p == 0) return m == p;
  }
  std::uint64_t d = m - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These bases are sufficient for every m < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, m);
      if (x == m - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeFactorization::PrimeFactorization(std::map<std::uint64_t, unsigned> factors)
    : factors_(std::move(factors)) {
  for (const auto& [p, e] : factors_) {
    if (!is_prime(p) || e == 0) {
      throw InvalidArgument("PrimeFactorization: " + std::to_string(p) + "^" + std::to_string(e) +
                            " is not a prime power");
    }
  }
}

std::vector<std::uint64_t> PrimeFactorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors_.size());
  for (const auto& entry : factors_) out.push_back(entry.first);
  return out;
}

std::int64_t PrimeFactorization::value() const {
  std::int64_t v = 1;
  for (const auto& [p, e] : factors_) {
    for (unsigned i = 0; i < e; ++i) v = checked_mul(v, static_cast<std::int64_t>(p));
  }
  return v;
}

PrimeFactorization factorize(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("factorize: 0 has no prime factorization");
  std::map<std::uint64_t, unsigned> factors;
  while ((m & 1U) == 0) {
    ++factors[2];
    m >>= 1U;
  }
  for (std::uint64_t d = 3; m > 1 && d <= m / d; d += 2) {
    if (is_prime(m)) break;
    while (m % d == 0) {
      ++factors[d];
      m /= d;
    }
  }
  if (m > 1) ++factors[m];
  return PrimeFactorization(std::move(factors));
}

unsigned valuation(std::uint64_t p, std::int64_t m) {
  if (m == 0) throw InvalidArgument("valuation: m must be nonzero");
  if (!is_prime(p)) throw InvalidArgument("valuation: " + std::to_string(p) + " is not prime");
  std::uint64_t a = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
  unsigned v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

namespace {

std::uint64_t require_positive(std::int64_t m, const char* who) {
  if (m < 1) throw InvalidArgument(std::string(who) + ": argument must be >= 1");
  return static_cast<std::uint64_t>(m);
}

}  // namespace

std::int64_t totient(std::int64_t m) {
  const auto f = factorize(require_positive(m, "totient"));
  std::int64_t result = m;
  for (const auto& [p, e] : f.factors()) {
    result = result / static_cast<std::int64_t>(p) * static_cast<std::int64_t>(p - 1);
  }
  return result;
}

int moebius(std::int64_t m) {
  const auto f = factorize(require_positive(m, "moebius"));
  int sign = 1;
  for (const auto& [p, e] : f.factors()) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t divisor_count(std::int64_t m) {
  const auto f = factorize(require_positive(m, "divisor_count"));
  std::int64_t count = 1;
  for (const auto& [p, e] : f.factors()) count *= static_cast<std::int64_t>(e) + 1;
  return count;
}

std::vector<std::int64_t> divisors(std::int64_t m) {
  const auto f = factorize(require_positive(m, "divisors"));
  std::vector<std::int64_t> out{1};
  for (const auto& [p, e] : f.factors()) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= static_cast<std::int64_t>(p);
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> prime_support(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (auto p : factorize(require_positive(m, "prime_support")).primes()) {
    out.push_back(static_cast<std::int64_t>(p));
  }
  return out;
}

CyclotomicPoly cyclotomic_poly(std::int64_t n) {
  require_positive(n, "cyclotomic_poly");
  std::vector<std::int64_t> poly{1};
  std::vector<std::int64_t> divide_by;
  // Multiply first so that every later division is exact.
  for (std::int64_t d : divisors(n)) {
    const int mu = moebius(n / d);
    if (mu == 1) {
      std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(d), 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] = checked_sub(next[i], poly[i]);
        next[i + static_cast<std::size_t>(d)] = checked_add(next[i + static_cast<std::size_t>(d)], poly[i]);
      }
      poly = std::move(next);
    } else if (mu == -1) {
      divide_by.push_back(d);
    }
  }
  for (std::int64_t d : divide_by) {
    const auto step = static_cast<std::size_t>(d);
    const std::size_t out_len = poly.size() - step;
    std::vector<std::int64_t> quotient(out_len, 0);
    for (std::size_t i = 0; i < out_len; ++i) {
      const std::int64_t carried = i >= step ? quotient[i - step] : 0;
      quotient[i] = checked_sub(carried, poly[i]);
    }
    for (std::size_t i = out_len; i < poly.size(); ++i) {
      const std::int64_t expected = i >= step ? quotient[i - step] : 0;
      if (poly[i] != expected) {
        throw std::logic_error("cyclotomic_poly: inexact division by x^d - 1");
      }
    }
    poly = std::move(quotient);
  }
  return CyclotomicPoly{n, std::move(poly)};
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InvalidArgument("IntMatrix: entries length " + std::to_string(entries_.size()) +
                          " != rows*cols " + std::to_string(rows_ * cols_));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("IntMatrix: ragged initializer");
    for (long long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<BigInt> IntMatrix::column(std::size_t j) const {
  std::vector<BigInt> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("IntMatrix product: shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("IntMatrix sum: shape mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("IntMatrix difference: shape mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix out = a;
  for (auto& x : out.entries_) x = -x;
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string IntMatrix::to_string() const {
  std::vector<std::string> cells(entries_.size());
  std::size_t width = 1;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    cells[i] = entries_[i].str();
    width = std::max(width, cells[i].size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& c = cells[i * cols_ + j];
      os << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
    }
    os << "]\n";
  }
  return os.str();
}

std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& v) {
  if (a.cols() != v.size()) throw InvalidArgument("matrix-vector product: shape mismatch");
  std::vector<BigInt> out(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, j) != 0) out[i] += a(i, j) * v[j];
    }
  }
  return out;
}

IntMatrix matrix_power(const IntMatrix& a, std::uint64_t e) {
  if (!a.is_square()) throw InvalidArgument("matrix_power: matrix must be square");
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

BigInt trace(const IntMatrix& a) {
  if (!a.is_square()) throw InvalidArgument("trace: matrix must be square");
  BigInt t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

BigInt determinant(const IntMatrix& a) {
  if (!a.is_square()) throw InvalidArgument("determinant: matrix must be square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<BigInt> characteristic_polynomial(const IntMatrix& a) {
  if (!a.is_square()) throw InvalidArgument("characteristic_polynomial: matrix must be square");
  const std::size_t n = a.rows();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    const BigInt t = trace(a * m);
    if (t % static_cast<long long>(k) != 0) {
      throw std::logic_error("characteristic_polynomial: inexact LeVerrier step");
    }
    c[n - k] = -t / static_cast<long long>(k);
  }
  return c;
}

IntMatrix companion_matrix(const std::vector<std::int64_t>& monic_coeffs) {
  if (monic_coeffs.size() < 2 || monic_coeffs.back() != 1) {
    throw InvalidArgument("companion_matrix: polynomial must be monic of degree >= 1");
  }
  const std::size_t d = monic_coeffs.size() - 1;
  IntMatrix m(d, d);
  for (std::size_t j = 0; j + 1 < d; ++j) m(j + 1, j) = 1;
  for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = -monic_coeffs[i];
  return m;
}

// ---------------------------------------------------------------------------
// Smith normal form by repeated minimal-pivot elimination.

namespace {

using Grid = std::vector<std::vector<BigInt>>;

bool find_min_pivot(const Grid& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  BigInt best;
  for (std::size_t i = t; i < a.size(); ++i) {
    for (std::size_t j = t; j < a[i].size(); ++j) {
      if (a[i][j] == 0) continue;
      BigInt mag = abs(a[i][j]);
      if (!found || mag < best) {
        best = std::move(mag);
        pi = i;
        pj = j;
        found = true;
        if (best == 1) return true;
      }
    }
  }
  return found;
}

void swap_rows(Grid& a, std::size_t i, std::size_t j) {
  if (i != j) std::swap(a[i], a[j]);
}

void swap_cols(Grid& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (auto& row : a) std::swap(row[i], row[j]);
}

}  // namespace

std::vector<BigInt> smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Grid a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);
  }

  std::vector<BigInt> factors;
  const std::size_t limit = std::min(rows, cols);
  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_min_pivot(a, t, pi, pj)) break;
    swap_rows(a, t, pi);
    swap_cols(a, t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        if (q != 0) {
          for (std::size_t j = t; j < cols; ++j) {
            if (a[t][j] != 0) a[i][j] -= q * a[t][j];
          }
        }
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        if (q != 0) {
          for (std::size_t i = t; i < rows; ++i) {
            if (a[i][t] != 0) a[i][j] -= q * a[i][t];
          }
        }
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A smaller remainder now sits in row t or column t; make it the pivot.
        std::size_t bi = t, bj = t;
        BigInt best = abs(a[t][t]);
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] != 0 && abs(a[i][t]) < best) {
            best = abs(a[i][t]);
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] != 0 && abs(a[t][j]) < best) {
            best = abs(a[t][j]);
            bi = t;
            bj = j;
          }
        }
        swap_rows(a, t, bi);
        swap_cols(a, t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remainder.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    factors.push_back(abs(a[t][t]));
  }
  factors.resize(cols, BigInt(0));
  return factors;
}

std::pair<BigInt, BigInt> h_double_prime_structure(std::int64_t p, std::int64_t q, std::int64_t r) {
  const auto verdict = triples::check_condition_C(triples::Triple::make(p, q, r));
  if (!verdict.c1) {
    throw ConditionError("h_double_prime_structure: (" + std::to_string(p) + "," + std::to_string(q) +
                         "," + std::to_string(r) + ") violates the pairwise-lcm condition C1");
  }
  const IntMatrix relations{{p, 0}, {0, q}, {r, r}};
  const auto inv = smith_normal_form(relations);
  return {inv[0], inv[1]};
}

}  // namespace dihedra::arith
