#include "dihedra/cyclo.hpp"

#include <charconv>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "dihedra/arith.hpp"
#include "dihedra/errors.hpp"

namespace dihedra::cyclo {

using arith::checked_add;
using arith::checked_mul;
using arith::checked_sub;

// ---------------------------------------------------------------------------
// RationalAngle

RationalAngle RationalAngle::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("RationalAngle: zero denominator");
  if (den < 0) {
    num = checked_sub(0, num);
    den = checked_sub(0, den);
  }
  const std::int64_t g = arith::gcd(num, den);
  num /= g;
  den /= g;
  return RationalAngle(arith::mod(num, den), den);
}

RationalAngle RationalAngle::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    if (!part.empty() && part.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (part.empty() || ec != std::errc() || ptr != last) {
      throw InvalidArgument("malformed fraction '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return make(parse_int(text), 1);
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw InvalidArgument("fraction '" + std::string(text) + "' needs a positive denominator");
  return make(parse_int(text.substr(0, slash)), den);
}

std::string RationalAngle::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RationalAngle RationalAngle::operator+(const RationalAngle& o) const {
  const std::int64_t l = arith::lcm(den_, o.den_);
  return make(checked_add(checked_mul(num_, l / den_), checked_mul(o.num_, l / o.den_)), l);
}

RationalAngle RationalAngle::operator-(const RationalAngle& o) const { return *this + (-o); }

RationalAngle RationalAngle::operator-() const { return make(-num_, den_); }

// ---------------------------------------------------------------------------
// Per-level data: Phi_N and, for moderate N, the table of x^j mod Phi_N.

namespace detail {

struct LevelData {
  std::int64_t level = 1;
  std::size_t phi = 1;
  std::vector<std::int64_t> modulus;  // Phi_N, ascending, monic
  std::vector<std::vector<std::int64_t>> powers;  // x^j mod Phi_N, j < N; empty if too large
};

namespace {

constexpr std::int64_t kPowerTableBudget = std::int64_t{1} << 20;

// In-place reduction of a dense polynomial (exponents already < N) mod Phi_N.
void reduce_dense(const LevelData& d, std::vector<std::int64_t>& buf) {
  const std::size_t phi = d.phi;
  for (std::size_t deg = buf.size(); deg-- > phi;) {
    const std::int64_t c = buf[deg];
    if (c == 0) continue;
    const std::size_t base = deg - phi;
    for (std::size_t i = 0; i < phi; ++i) {
      if (d.modulus[i] != 0) buf[base + i] = checked_sub(buf[base + i], checked_mul(c, d.modulus[i]));
    }
    buf[deg] = 0;
  }
  buf.resize(phi);
}

std::shared_ptr<const LevelData> build_level(std::int64_t level) {
  auto d = std::make_shared<LevelData>();
  d->level = level;
  d->modulus = arith::cyclotomic_poly(level).coeffs;
  d->phi = d->modulus.size() - 1;
  if (checked_mul(level, static_cast<std::int64_t>(d->phi)) <= kPowerTableBudget) {
    d->powers.reserve(static_cast<std::size_t>(level));
    std::vector<std::int64_t> row(d->phi + 1, 0);
    row[0] = 1;
    for (std::int64_t j = 0; j < level; ++j) {
      std::vector<std::int64_t> reduced = row;
      reduce_dense(*d, reduced);
      d->powers.push_back(reduced);
      // next row = x * reduced
      row.assign(d->phi + 1, 0);
      for (std::size_t i = 0; i < d->phi; ++i) row[i + 1] = reduced[i];
    }
  }
  return d;
}

}  // namespace

std::shared_ptr<const LevelData> level_data(std::int64_t level) {
  if (level < 1) throw InvalidArgument("cyclotomic level must be >= 1");
  static std::mutex mu;
  static std::unordered_map<std::int64_t, std::shared_ptr<const LevelData>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(level); it != cache.end()) return it->second;
  }
  auto built = build_level(level);
  std::lock_guard lock(mu);
  return cache.emplace(level, std::move(built)).first->second;
}

// Reduces a polynomial with arbitrary exponents into the power basis of level d.
std::vector<std::int64_t> reduce_any(const LevelData& d, const std::vector<std::int64_t>& coeffs) {
  const auto level = static_cast<std::size_t>(d.level);
  std::vector<std::int64_t> folded(std::min(coeffs.size(), level), 0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0) folded[j % level] = checked_add(folded[j % level], coeffs[j]);
  }
  if (folded.size() < d.phi) folded.resize(d.phi, 0);
  reduce_dense(d, folded);
  return folded;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// CycloNumber

CycloNumber::CycloNumber() : CycloNumber(detail::level_data(1), {0}) {}

CycloNumber::CycloNumber(std::shared_ptr<const detail::LevelData> data, std::vector<std::int64_t> coeffs)
    : data_(std::move(data)), coeffs_(std::move(coeffs)) {}

std::int64_t CycloNumber::level() const noexcept { return data_->level; }

CycloNumber CycloNumber::integer(std::int64_t value, std::int64_t level) {
  auto d = detail::level_data(level);
  std::vector<std::int64_t> c(d->phi, 0);
  c[0] = value;
  return CycloNumber(std::move(d), std::move(c));
}

CycloNumber CycloNumber::zeta_power(std::int64_t level, std::int64_t k) {
  auto d = detail::level_data(level);
  std::vector<std::int64_t> poly(static_cast<std::size_t>(arith::mod(k, level)) + 1, 0);
  poly.back() = 1;
  auto c = detail::reduce_any(*d, poly);
  return CycloNumber(std::move(d), std::move(c));
}

CycloNumber CycloNumber::from_polynomial(std::int64_t level, const std::vector<std::int64_t>& coeffs) {
  auto d = detail::level_data(level);
  auto c = detail::reduce_any(*d, coeffs);
  return CycloNumber(std::move(d), std::move(c));
}

CycloNumber CycloNumber::lift(std::int64_t target_level) const {
  const std::int64_t from = level();
  if (target_level < 1 || target_level % from != 0) {
    throw InvalidArgument("lift: level " + std::to_string(target_level) + " is not a multiple of " +
                          std::to_string(from));
  }
  if (target_level == from) return *this;
  const std::int64_t stride = target_level / from;
  auto d = detail::level_data(target_level);
  std::vector<std::int64_t> out(d->phi, 0);
  if (!d->powers.empty()) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      const auto& row = d->powers[static_cast<std::size_t>(static_cast<std::int64_t>(j) * stride % target_level)];
      for (std::size_t i = 0; i < d->phi; ++i) {
        if (row[i] != 0) out[i] = checked_add(out[i], checked_mul(coeffs_[j], row[i]));
      }
    }
  } else {
    std::vector<std::int64_t> poly(static_cast<std::size_t>(target_level), 0);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      poly[static_cast<std::size_t>(static_cast<std::int64_t>(j) * stride)] = coeffs_[j];
    }
    out = detail::reduce_any(*d, poly);
  }
  return CycloNumber(std::move(d), std::move(out));
}

bool CycloNumber::is_zero() const noexcept {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::complex<double> CycloNumber::evaluate() const {
  std::complex<double> acc = 0.0;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(level());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    acc += static_cast<double>(coeffs_[j]) * std::polar(1.0, step * static_cast<double>(j));
  }
  return acc;
}

namespace {

std::pair<CycloNumber, CycloNumber> common_level(const CycloNumber& a, const CycloNumber& b) {
  if (a.level() == b.level()) return {a, b};
  const std::int64_t l = arith::lcm(a.level(), b.level());
  return {a.lift(l), b.lift(l)};
}

}  // namespace

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
  if (a.level() != b.level()) {
    auto [x, y] = common_level(a, b);
    return x + y;
  }
  std::vector<std::int64_t> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a.coeffs_[i], b.coeffs_[i]);
  return CycloNumber(a.data_, std::move(c));
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) {
  if (a.level() != b.level()) {
    auto [x, y] = common_level(a, b);
    return x - y;
  }
  std::vector<std::int64_t> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(a.coeffs_[i], b.coeffs_[i]);
  return CycloNumber(a.data_, std::move(c));
}

CycloNumber operator-(const CycloNumber& a) {
  std::vector<std::int64_t> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(0, a.coeffs_[i]);
  return CycloNumber(a.data_, std::move(c));
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  if (a.level() != b.level()) {
    auto [x, y] = common_level(a, b);
    return x * y;
  }
  const auto& d = *a.data_;
  const std::size_t phi = d.phi;
  const auto level = static_cast<std::size_t>(d.level);
  std::vector<std::int64_t> prod(std::min(2 * phi - 1, level), 0);
  for (std::size_t i = 0; i < phi; ++i) {
    const std::int64_t ai = a.coeffs_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      const std::int64_t bj = b.coeffs_[j];
      if (bj == 0) continue;
      const std::size_t k = (i + j) % level;
      prod[k] = checked_add(prod[k], checked_mul(ai, bj));
    }
  }
  if (prod.size() < phi) prod.resize(phi, 0);
  detail::reduce_dense(d, prod);
  return CycloNumber(a.data_, std::move(prod));
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.level() == b.level()) return a.coeffs_ == b.coeffs_;
  auto [x, y] = common_level(a, b);
  return x.coeffs_ == y.coeffs_;
}

std::string CycloNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const std::int64_t c = coeffs_[j];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (j == 0) os << mag;
    else {
      if (mag != 1) os << mag << "*";
      os << "z" << (j == 1 ? "" : "^" + std::to_string(j));
    }
    first = false;
  }
  if (first) os << "0";
  os << " [z=zeta_" << level() << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// 4cos^2(t*pi) realized directly at a level that is a multiple of t.den().
CycloNumber cos_square_at(const RationalAngle& t, std::int64_t level) {
  const std::int64_t k = checked_mul(t.num(), level / t.den()) % level;
  std::vector<std::int64_t> poly(static_cast<std::size_t>(level), 0);
  poly[0] += 2;
  poly[static_cast<std::size_t>(k)] += 1;
  poly[static_cast<std::size_t>((level - k) % level)] += 1;
  return CycloNumber::from_polynomial(level, poly);
}

struct Triplet {
  CycloNumber alpha, beta, gamma;
};

Triplet cos_squares(const RationalAngle& a, const RationalAngle& b, const RationalAngle& c) {
  const std::int64_t level = arith::lcm(a.den(), b.den(), c.den());
  return {cos_square_at(a, level), cos_square_at(b, level), cos_square_at(c, level)};
}

}  // namespace

CycloNumber cos_square_value(const RationalAngle& t) { return cos_square_at(t, t.den()); }

bool angle_sum_condition(const RationalAngle& a, const RationalAngle& b, const RationalAngle& c) {
  for (const auto& x : {a, -a}) {
    for (const auto& y : {b, -b}) {
      if (c == x + y) return true;
    }
  }
  return false;
}

bool product_condition(const RationalAngle& a, const RationalAngle& b, const RationalAngle& c) {
  const auto [alpha, beta, gamma] = cos_squares(a, b, c);
  const auto four = CycloNumber::integer(4, alpha.level());
  const auto s = four - alpha - beta - gamma;
  return alpha * beta * gamma == s * s;
}

DiscriminantLocus discriminant_locus(const RationalAngle& a, const RationalAngle& b, const RationalAngle& c) {
  const auto [alpha, beta, gamma] = cos_squares(a, b, c);
  const auto four = CycloNumber::integer(4, alpha.level());
  auto s = four - alpha - beta - gamma;
  auto disc = s * s - alpha * beta * gamma;
  const bool vanishes = disc.is_zero();
  return {std::move(disc), std::move(s), vanishes};
}

}  // namespace dihedra::cyclo
