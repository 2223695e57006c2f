#pragma once

// Exact arithmetic in Z[zeta_N] = Z[x]/(Phi_N), used to decide
// trigonometric identities between values 4cos^2(t*pi) without floating
// point.

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dihedra::cyclo {

/// A rational number t taken modulo Z, stored as num/den with
/// 0 <= num < den and gcd(num, den) = 1.
class RationalAngle {
 public:
  RationalAngle() = default;
  /// Reduces and normalizes mod Z; den must be nonzero (sign is absorbed).
  static RationalAngle make(std::int64_t num, std::int64_t den);
  /// Parses "k/m" or "k".
  static RationalAngle parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  std::string to_string() const;

  RationalAngle operator+(const RationalAngle& o) const;
  RationalAngle operator-(const RationalAngle& o) const;
  RationalAngle operator-() const;
  bool operator==(const RationalAngle&) const = default;

 private:
  RationalAngle(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

namespace detail {
struct LevelData;
}

/// An element of Z[zeta_N], stored as coordinates in the power basis
/// 1, zeta, ..., zeta^(phi(N)-1).
class CycloNumber {
 public:
  CycloNumber();  // zero at level 1
  static CycloNumber integer(std::int64_t value, std::int64_t level = 1);
  /// zeta_level^k.
  static CycloNumber zeta_power(std::int64_t level, std::int64_t k);
  /// Builds from arbitrary coefficients (any length), reducing mod Phi_level.
  static CycloNumber from_polynomial(std::int64_t level, const std::vector<std::int64_t>& coeffs);

  std::int64_t level() const noexcept;
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

  /// Embeds into Z[zeta_L] via zeta_N -> zeta_L^(L/N); L must be a multiple of level().
  CycloNumber lift(std::int64_t target_level) const;

  bool is_zero() const noexcept;
  /// Numerical value at zeta = exp(2*pi*i/N). Diagnostic only.
  std::complex<double> evaluate() const;

  friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator-(const CycloNumber& a);
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  std::string to_string() const;

 private:
  CycloNumber(std::shared_ptr<const detail::LevelData> data, std::vector<std::int64_t> coeffs);
  std::shared_ptr<const detail::LevelData> data_;
  std::vector<std::int64_t> coeffs_;
};

/// 4cos^2(t*pi) = 2 + zeta + zeta^-1 with zeta = zeta_den^num.
CycloNumber cos_square_value(const RationalAngle& t);

/// True iff c = e*a + e'*b (mod Z) for some signs e, e'.
bool angle_sum_condition(const RationalAngle& a, const RationalAngle& b, const RationalAngle& c);

/// True iff alpha*beta*gamma == (4 - alpha - beta - gamma)^2 exactly.
bool product_condition(const RationalAngle& a, const RationalAngle& b, const RationalAngle& c);

struct DiscriminantLocus {
  CycloNumber discriminant;  // (4 - alpha - beta - gamma)^2 - alpha*beta*gamma
  CycloNumber common_value;  // 4 - alpha - beta - gamma, the double root when the discriminant vanishes
  bool vanishes = false;
};
DiscriminantLocus discriminant_locus(const RationalAngle& a, const RationalAngle& b, const RationalAngle& c);

}  // namespace dihedra::cyclo
