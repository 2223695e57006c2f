#include <doctest.h>

#include <algorithm>
#include <array>
#include <limits>
#include <random>

#include "dihedra/arith.hpp"
#include "dihedra/triples.hpp"
#include "oracles.hpp"

using namespace dihedra;
using namespace dihedra::arith;

namespace {

std::vector<std::int64_t> to_int64(const std::vector<BigInt>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

}  // namespace

TEST_CASE("factorize") {
  CHECK(factorize(12).factors() == std::map<std::uint64_t, unsigned>{{2, 2}, {3, 1}});
  CHECK(factorize(1).empty());
  CHECK(factorize(360).factors() == std::map<std::uint64_t, unsigned>{{2, 3}, {3, 2}, {5, 1}});
  CHECK_THROWS_AS(factorize(0), InvalidArgument);
  // A semiprime with two large factors and a large prime.
  CHECK(factorize(1000003ULL * 999983ULL).factors() == std::map<std::uint64_t, unsigned>{{999983, 1}, {1000003, 1}});
  CHECK(factorize(18446744073709551557ULL).factors().size() == 1);
}

TEST_CASE("factorization reproduces its input") {
  for (std::uint64_t m = 1; m <= 5000; ++m) {
    const auto f = factorize(m);
    for (const auto& [p, e] : f.factors()) {
      CHECK(is_prime(p));
      CHECK(e >= 1);
    }
    CHECK(static_cast<std::uint64_t>(f.value()) == m);
  }
}

TEST_CASE("valuation") {
  CHECK(valuation(2, 12) == 2);
  CHECK(valuation(2, 15) == 0);
  CHECK(valuation(3, 54) == 3);
  CHECK(valuation(3, -54) == 3);
  CHECK_THROWS_AS(valuation(2, 0), InvalidArgument);
  CHECK_THROWS_AS(valuation(4, 8), InvalidArgument);
}

TEST_CASE("totient and moebius") {
  CHECK(totient(6) == 2);
  CHECK(totient(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(30) == -1);
  CHECK(moebius(1) == 1);
  for (std::int64_t m = 1; m <= 400; ++m) {
    CHECK(totient(m) == oracle::phi(m));
    // sum_{d | m} mu(d) = [m == 1]
    std::int64_t s = 0;
    for (auto d : divisors(m)) s += moebius(d);
    CHECK(s == (m == 1 ? 1 : 0));
    std::int64_t tau = 0;
    for (std::int64_t d = 1; d <= m; ++d) tau += m % d == 0;
    CHECK(divisor_count(m) == tau);
  }
  CHECK_THROWS_AS(totient(0), InvalidArgument);
}

TEST_CASE("checked arithmetic refuses to wrap") {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), OverflowError);
  CHECK_THROWS_AS(checked_sub(-big, 2), OverflowError);
  CHECK(checked_mul(-3, 4) == -12);
  CHECK(mul_mod(big - 1, big - 2, 1000000007) == static_cast<std::int64_t>(
                                                     (static_cast<BigInt>(big - 1) * (big - 2)) % 1000000007));
  CHECK(inverse_mod(3, 7) == 5);
  CHECK_THROWS_AS(inverse_mod(2, 4), InvalidArgument);
  const auto eg = extended_gcd(240, 46);
  CHECK(eg.g == 2);
  CHECK(240 * eg.x + 46 * eg.y == 2);
  CHECK(gcd(0, 0) == 0);
  CHECK(lcm(4, 6, 10) == 60);
  CHECK(mod(-7, 5) == 3);
}

TEST_CASE("cyclotomic polynomial examples") {
  CHECK(cyclotomic_poly(1).coeffs == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_poly(6).coeffs == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_poly(12).coeffs == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
  const auto c105 = cyclotomic_poly(105).coeffs;
  CHECK(std::find(c105.begin(), c105.end(), -2) != c105.end());
}

TEST_CASE("cyclotomic polynomials agree with iterated division") {
  std::map<std::int64_t, oracle::Poly> memo;
  for (std::int64_t n = 1; n <= 200; ++n) {
    CAPTURE(n);
    const auto p = cyclotomic_poly(n);
    CHECK(p.coeffs == oracle::cyclotomic(n, memo));
    CHECK(static_cast<std::int64_t>(p.degree()) == totient(n));
  }
}

TEST_CASE("product of Phi_d over d | n is x^n - 1") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    CAPTURE(n);
    oracle::Poly prod{1};
    for (auto d : divisors(n)) prod = oracle::multiply(prod, cyclotomic_poly(d).coeffs);
    oracle::Poly want(static_cast<std::size_t>(n) + 1, 0);
    want[0] = -1;
    want.back() = 1;
    CHECK(prod == want);
    if (n > 1) {
      const auto c = cyclotomic_poly(n).coeffs;
      CHECK(std::equal(c.begin(), c.end(), c.rbegin()));
      CHECK(c.front() == 1);
    }
  }
}

TEST_CASE("integer matrices") {
  const IntMatrix a{{2, 1}, {1, 1}};
  CHECK(determinant(a) == 1);
  CHECK(trace(a) == 3);
  CHECK(matrix_power(a, 0).is_identity());
  CHECK(matrix_power(a, 3) == a * a * a);
  CHECK(characteristic_polynomial(a) == std::vector<BigInt>{1, -3, 1});
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  CHECK(companion_matrix({1, -1, 1}) == IntMatrix{{0, -1}, {1, 1}});
  CHECK((a - a).is_zero());
  CHECK(a.transpose() == a);
  CHECK_THROWS_AS(IntMatrix(2, 2) * IntMatrix(3, 3), InvalidArgument);
}

TEST_CASE("Smith normal form examples") {
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 2}}) == std::vector<BigInt>{2, 2});
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}, {6, 6}}) == std::vector<BigInt>{1, 6});
  CHECK(smith_normal_form(IntMatrix{{3, 0}, {0, 3}, {3, 3}}) == std::vector<BigInt>{3, 3});
  CHECK(smith_normal_form(IntMatrix{{2, 4, 6}}) == std::vector<BigInt>{2, 0, 0});
  CHECK(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}) == std::vector<BigInt>{0, 0});

  oracle::Matrix m1{{2, 0}, {0, 3}, {6, 6}};
  CHECK(oracle::invariant_factors(m1, 2) == std::vector<std::int64_t>{1, 6});
  oracle::Matrix m2{{3, 0}, {0, 3}, {3, 3}};
  CHECK(oracle::invariant_factors(m2, 2) == std::vector<std::int64_t>{3, 3});
}

TEST_CASE("Smith normal form on random matrices") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> entry(-20, 20), dim(1, 5), small_dim(1, 3);
  int oracle_checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const bool small = trial % 2 == 0;
    const std::size_t rows = static_cast<std::size_t>(small ? small_dim(rng) : dim(rng));
    const std::size_t cols = static_cast<std::size_t>(small ? small_dim(rng) : dim(rng));
    oracle::Matrix raw(rows, std::vector<std::int64_t>(cols));
    std::vector<BigInt> entries;
    for (auto& row : raw) {
      for (auto& x : row) {
        x = entry(rng);
        // Sparse rows keep some quotients torsion-rich.
        if (trial % 3 == 0 && x % 3 != 0) x = 0;
        entries.emplace_back(x);
      }
    }
    const auto snf = smith_normal_form(IntMatrix(rows, cols, entries));
    REQUIRE(snf.size() == cols);
    for (std::size_t i = 0; i + 1 < snf.size(); ++i) {
      CHECK(snf[i] >= 0);
      if (snf[i] != 0) CHECK(snf[i + 1] % snf[i] == 0);
      else CHECK(snf[i + 1] == 0);
    }
    // Product of the nonzero factors is the gcd of the maximal nonvanishing minors.
    const auto nonzero = static_cast<std::size_t>(std::count_if(snf.begin(), snf.end(), [](const BigInt& d) { return d != 0; }));
    if (nonzero > 0) {
      BigInt prod = 1;
      for (const auto& d : snf) {
        if (d != 0) prod *= d;
      }
      CHECK(prod == std::abs(oracle::minor_gcd(raw, cols, nonzero)));
    }
    if (cols <= 3 && rows <= 3) {
      if (const auto want = oracle::invariant_factors(raw, cols)) {
        CAPTURE(trial);
        CHECK(to_int64(snf) == *want);
        ++oracle_checked;
      }
    }
  }
  CHECK(oracle_checked >= 100);
}

TEST_CASE("H'' structure") {
  CHECK(h_double_prime_structure(2, 3, 6) == std::pair<BigInt, BigInt>{1, 6});
  CHECK(h_double_prime_structure(4, 4, 2) == std::pair<BigInt, BigInt>{2, 4});
  CHECK(h_double_prime_structure(3, 3, 3) == std::pair<BigInt, BigInt>{3, 3});
  CHECK_THROWS_AS(h_double_prime_structure(2, 3, 5), ConditionError);

  for (std::int64_t p = 2; p <= 24; ++p) {
    for (std::int64_t q = 2; q <= 24; ++q) {
      for (std::int64_t r = 2; r <= 24; ++r) {
        if (!triples::check_condition_C(triples::Triple::make(p, q, r)).c1) continue;
        oracle::Matrix rel{{p, 0}, {0, q}, {r, r}};
        const auto want = oracle::invariant_factors(rel, 2, 1 << 22);
        const auto got = h_double_prime_structure(p, q, r);
        CHECK(got.first == gcd(p, q, r));
        CHECK(got.second == lcm(p, q, r));
        if (want) CHECK(std::vector<std::int64_t>{static_cast<std::int64_t>(got.first), static_cast<std::int64_t>(got.second)} == *want);
      }
    }
  }
}
