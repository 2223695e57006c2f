#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dihedra/cyclo.hpp"
#include "dihedra/errors.hpp"
#include "oracles.hpp"

using namespace dihedra;
using namespace dihedra::cyclo;

namespace {

RationalAngle A(std::int64_t k, std::int64_t m) { return RationalAngle::make(k, m); }

std::vector<RationalAngle> fractions_up_to(std::int64_t max_den) {
  std::vector<RationalAngle> out;
  for (std::int64_t m = 1; m <= max_den; ++m) {
    for (std::int64_t k = 0; k < m; ++k) {
      if (std::gcd(k, m) == 1) out.push_back(A(k, m));
    }
  }
  return out;
}

CycloNumber random_element(std::mt19937_64& rng, std::int64_t level) {
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(level) + 2);
  for (auto& x : coeffs) x = c(rng);
  return CycloNumber::from_polynomial(level, coeffs);
}

}  // namespace

TEST_CASE("rational angles are reduced mod Z") {
  CHECK(A(5, 4) == A(1, 4));
  CHECK(A(-1, 3) == A(2, 3));
  CHECK(A(2, 4) == A(1, 2));
  CHECK(A(3, -4) == A(1, 4));
  CHECK(A(0, 7).den() == 1);
  CHECK(RationalAngle::parse("6/8") == A(3, 4));
  CHECK(RationalAngle::parse("-1/3") == A(2, 3));
  CHECK(RationalAngle::parse("2") == A(0, 1));
  CHECK(A(1, 3) + A(1, 6) == A(1, 2));
  CHECK(A(1, 3) - A(1, 2) == A(5, 6));
  CHECK_THROWS_AS(A(1, 0), InvalidArgument);
  CHECK_THROWS_AS(RationalAngle::parse("1/0"), InvalidArgument);
  CHECK_THROWS_AS(RationalAngle::parse("a/3"), InvalidArgument);
  CHECK_THROWS_AS(RationalAngle::parse("1/"), InvalidArgument);
  CHECK_THROWS_AS(RationalAngle::parse(""), InvalidArgument);
}

TEST_CASE("cos square examples") {
  CHECK(cos_square_value(A(1, 3)) == CycloNumber::integer(1));
  CHECK(cos_square_value(A(1, 2)) == CycloNumber::integer(0));
  CHECK(cos_square_value(A(1, 4)) == CycloNumber::integer(2));
  CHECK(cos_square_value(A(0, 1)) == CycloNumber::integer(4));
  CHECK(cos_square_value(A(1, 6)) == CycloNumber::integer(3));
}

TEST_CASE("cyclotomic ring arithmetic examples") {
  const auto z = CycloNumber::zeta_power(3, 1);
  CHECK((z + z * z + CycloNumber::integer(1)).is_zero());
  CHECK(z.lift(6) == z);
  CHECK(z.lift(6).level() == 6);
  CHECK(z.lift(6) == CycloNumber::zeta_power(6, 2));
  CHECK(CycloNumber::zeta_power(5, 5) == CycloNumber::integer(1));
  CHECK_THROWS_AS(z.lift(4), InvalidArgument);

  const auto x = CycloNumber::from_polynomial(5, {2, 1, 0, 0, 1});
  const auto y = CycloNumber::from_polynomial(5, {2, 0, 1, 1, 0});
  CHECK((x * y).coeffs() == oracle::mul_mod_phi5({2, 1, 0, 0, 1}, {2, 0, 1, 1, 0}));
}

TEST_CASE("schoolbook products modulo Phi_5") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-30, 30);
  for (int trial = 0; trial < 500; ++trial) {
    oracle::Poly a(4), b(4);
    for (auto& v : a) v = c(rng);
    for (auto& v : b) v = c(rng);
    const auto got = CycloNumber::from_polynomial(5, a) * CycloNumber::from_polynomial(5, b);
    CHECK(got.coeffs() == oracle::mul_mod_phi5(a, b));
  }
}

TEST_CASE("ring axioms across mixed levels") {
  std::mt19937_64 rng(11);
  const std::vector<std::int64_t> levels{1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15};
  std::uniform_int_distribution<std::size_t> pick(0, levels.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_element(rng, levels[pick(rng)]);
    const auto y = random_element(rng, levels[pick(rng)]);
    const auto z = random_element(rng, levels[pick(rng)]);
    CHECK((x + y) * z == x * z + y * z);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK((x - x).is_zero());
    CHECK(x + (-x) == CycloNumber());
    // Embedding coherence and agreement with the complex evaluation.
    const auto lifted = x.lift(x.level() * 4);
    CHECK(lifted == x);
    CHECK(std::abs(lifted.evaluate() - x.evaluate()) < 1e-7);
    CHECK(std::abs((x * y).evaluate() - x.evaluate() * y.evaluate()) < 1e-6);
  }
}

TEST_CASE("cos square values match floating point") {
  for (const auto& t : fractions_up_to(30)) {
    const auto v = cos_square_value(t).evaluate();
    const double c = std::cos(std::numbers::pi * static_cast<double>(t.num()) / static_cast<double>(t.den()));
    CHECK(std::abs(v.imag()) < 1e-9);
    CHECK(v.real() == doctest::Approx(4 * c * c).epsilon(1e-9));
    CHECK(v.real() > -1e-9);
    CHECK(v.real() < 4 + 1e-9);
  }
}

TEST_CASE("angle sum and product conditions") {
  CHECK(angle_sum_condition(A(1, 4), A(1, 4), A(1, 2)));
  CHECK_FALSE(angle_sum_condition(A(1, 2), A(1, 2), A(1, 2)));
  CHECK(angle_sum_condition(A(1, 3), A(1, 3), A(1, 3)));
  CHECK(product_condition(A(1, 4), A(1, 4), A(1, 2)));
  CHECK_FALSE(product_condition(A(1, 2), A(1, 2), A(1, 2)));
  CHECK(product_condition(A(1, 3), A(1, 3), A(1, 3)));
}

TEST_CASE("discriminant locus") {
  CHECK(discriminant_locus(A(1, 4), A(1, 4), A(1, 2)).discriminant.is_zero());
  CHECK(discriminant_locus(A(1, 2), A(1, 2), A(1, 2)).discriminant == CycloNumber::integer(16));
  const auto d = discriminant_locus(A(1, 3), A(1, 3), A(1, 2));
  CHECK(d.discriminant == CycloNumber::integer(4));
  CHECK_FALSE(d.vanishes);
  const auto e = discriminant_locus(A(1, 3), A(1, 3), A(1, 3));
  CHECK(e.vanishes);
  CHECK(e.common_value == CycloNumber::integer(1));
}

TEST_CASE("angle congruence matches the product identity for denominators up to 8") {
  const auto fr = fractions_up_to(8);
  for (const auto& a : fr) {
    for (const auto& b : fr) {
      for (const auto& c : fr) {
        const bool sum = angle_sum_condition(a, b, c);
        CAPTURE(a.to_string());
        CAPTURE(b.to_string());
        CAPTURE(c.to_string());
        CHECK(sum == product_condition(a, b, c));
        const auto d = discriminant_locus(a, b, c);
        CHECK(d.vanishes == sum);
        if (d.vanishes) {
          const auto al = cos_square_value(a), be = cos_square_value(b), ga = cos_square_value(c);
          CHECK(d.common_value == CycloNumber::integer(4) - al - be - ga);
        }
      }
    }
  }
}
