#include "dihedra/triples.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <stdexcept>

#include "dihedra/arith.hpp"
#include "dihedra/errors.hpp"

namespace dihedra::triples {

using arith::checked_add;
using arith::checked_mul;
using arith::checked_sub;

Triple Triple::make(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
  if (a1 < 2 || a2 < 2 || a3 < 2) {
    throw InvalidArgument("triple entries must be >= 2, got (" + std::to_string(a1) + "," +
                          std::to_string(a2) + "," + std::to_string(a3) + ")");
  }
  return Triple{a1, a2, a3};
}

std::string Triple::to_string() const {
  return "(" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) + ")";
}

ConditionC check_condition_C(const Triple& t) {
  const std::int64_t n = arith::lcm(t.a1, t.a2, t.a3);
  ConditionC c;
  c.c1 = arith::lcm(t.a1, t.a2) == n && arith::lcm(t.a1, t.a3) == n && arith::lcm(t.a2, t.a3) == n;
  const unsigned v = arith::valuation(2, n);
  const bool all_max = arith::valuation(2, t.a1) == v && arith::valuation(2, t.a2) == v &&
                       arith::valuation(2, t.a3) == v;
  c.c2 = !(v >= 1 && all_max);
  return c;
}

namespace {

std::set<std::int64_t> primes_of(std::int64_t m) {
  const auto v = arith::prime_support(m);
  return {v.begin(), v.end()};
}

std::set<std::int64_t> intersect(const std::set<std::int64_t>& a, const std::set<std::int64_t>& b) {
  std::set<std::int64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::set<std::int64_t> difference(const std::set<std::int64_t>& a, const std::set<std::int64_t>& b) {
  std::set<std::int64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

// m * prod_{p in ones} (p-1)/p * prod_{s in twos} (s-2)/s, exact when every prime divides m.
std::int64_t sieve_product(std::int64_t m, const std::set<std::int64_t>& ones,
                           const std::set<std::int64_t>& twos) {
  std::int64_t r = m;
  for (auto p : ones) {
    require(r % p == 0, "sieve prime divides modulus");
    r = checked_mul(r / p, p - 1);
  }
  for (auto s : twos) {
    require(r % s == 0, "sieve prime divides modulus");
    r = checked_mul(r / s, s - 2);
  }
  return r;
}

}  // namespace

TripleDecomposition decompose(const Triple& t) {
  if (!check_condition_C(t).c1) {
    throw ConditionError("decompose: " + t.to_string() + " has a pairwise lcm below the global lcm");
  }
  TripleDecomposition d;
  d.n = arith::lcm(t.a1, t.a2, t.a3);
  d.w = arith::gcd(t.a1, t.a2, t.a3);
  for (std::size_t i = 0; i < 3; ++i) d.b[i] = d.n / t[i];
  require(checked_mul(checked_mul(d.b[0], d.b[1]), checked_mul(d.b[2], d.w)) == d.n, "n = b1 b2 b3 w");
  require(checked_mul(checked_mul(d.b[1], d.b[2]), d.w) == t.a1, "a1 = b2 b3 w");
  require(arith::gcd(d.b[0], d.b[1]) == 1 && arith::gcd(d.b[0], d.b[2]) == 1 && arith::gcd(d.b[1], d.b[2]) == 1,
          "b_i pairwise coprime");

  const auto pw = primes_of(d.w);
  std::array<std::set<std::int64_t>, 3> pb;
  for (std::size_t i = 0; i < 3; ++i) {
    pb[i] = primes_of(d.b[i]);
    d.Qi[i] = difference(pb[i], pw);
    for (auto p : intersect(pb[i], pw)) d.Q.insert(p);
  }
  d.P1 = pb[0];
  for (auto p : intersect(pb[1], pw)) d.P1.insert(p);
  for (auto p : intersect(pb[2], pw)) d.P1.insert(p);
  for (auto p : pw) {
    if (!pb[0].contains(p) && !pb[1].contains(p) && !pb[2].contains(p)) d.P0.insert(p);
  }
  return d;
}

std::int64_t ap_solve(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (b <= 0) throw InvalidArgument("ap_solve: modulus must be positive");
  if (arith::gcd(a, b) != 1) {
    throw InvalidArgument("ap_solve: gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
  }
  const std::int64_t inv = arith::inverse_mod(arith::mod(a, b), b);
  return arith::mul_mod(-arith::mod(c, b), inv, b);
}

bool ResidueClass::contains(std::int64_t x) const { return arith::mod(x, modulus) == residue; }

ResidueClass ap_intersect(const ResidueClass& a, const ResidueClass& b) {
  if (a.modulus <= 0 || b.modulus <= 0) throw InvalidArgument("ap_intersect: moduli must be positive");
  if (arith::gcd(a.modulus, b.modulus) != 1) {
    throw InvalidArgument("ap_intersect: moduli " + std::to_string(a.modulus) + " and " +
                          std::to_string(b.modulus) + " are not coprime");
  }
  const std::int64_t m = checked_mul(a.modulus, b.modulus);
  const std::int64_t t = ap_solve(a.modulus, b.modulus, checked_sub(a.residue, b.residue));
  return {arith::mod(checked_add(a.residue, checked_mul(a.modulus, t)), m), m};
}

bool satisfies_D(const Triple& t, const DSolution& s) {
  const std::int64_t n = arith::lcm(t.a1, t.a2, t.a3);
  if (arith::gcd(s.c1, t.a1) != 1 || arith::gcd(s.c2, t.a2) != 1 || arith::gcd(s.c3, t.a3) != 1) return false;
  const std::int64_t sum = checked_add(checked_add(checked_mul(n / t.a1, s.c1), checked_mul(n / t.a2, s.c2)),
                                       checked_mul(n / t.a3, s.c3));
  return sum == n;
}

bool in_reduced_box(const Triple& t, const DSolution& s) {
  return 0 < s.c1 && s.c1 < t.a1 && 0 < s.c2 && s.c2 < t.a2 && -t.a3 < s.c3 && s.c3 < t.a3;
}

bool SieveState::is_bad(std::int64_t rho) const {
  for (const auto& c : bad) {
    if (arith::mod(rho, c.prime) == c.residue) return true;
  }
  return false;
}

SieveState build_sieve(const Triple& t, std::int64_t c1) {
  if (c1 <= 0 || c1 >= t.a1 || arith::gcd(c1, t.a1) != 1) {
    throw InvalidArgument("build_sieve: c1=" + std::to_string(c1) + " is not a unit in (0, a1)");
  }
  SieveState s;
  s.decomposition = decompose(t);
  const auto& d = s.decomposition;
  const std::int64_t b1 = d.b[0], b2 = d.b[1], b3 = d.b[2];
  s.c1 = c1;
  s.modulus = checked_mul(b1, d.w);
  const std::int64_t rhs = checked_mul(b1, checked_sub(checked_mul(checked_mul(b2, b3), d.w), c1));
  const std::int64_t x = arith::mul_mod(rhs, arith::inverse_mod(arith::mod(b2, b3), b3), b3);
  s.x0 = x == 0 ? b3 : x;
  const std::int64_t rest = checked_sub(rhs, checked_mul(b2, s.x0));
  require(rest % b3 == 0, "b3 divides rhs - b2*x0");
  s.y0 = rest / b3;

  for (auto p : arith::prime_support(s.modulus)) {
    if (b3 % p != 0) s.bad.push_back({'x', p, ap_solve(b3, p, s.x0)});
    if (b2 % p != 0) s.bad.push_back({'y', p, ap_solve(-b2, p, s.y0)});
  }
  return s;
}

DResult solve_condition_D(const Triple& t) {
  DResult r;
  const auto cond = check_condition_C(t);
  if (!cond.c1) {
    r.diagnostic = "pairwise lcm condition fails; no decomposition n = b1 b2 b3 w";
    return r;
  }
  for (std::int64_t c1 = 1; c1 < t.a1; ++c1) {
    if (arith::gcd(c1, t.a1) != 1) continue;
    auto state = build_sieve(t, c1);
    const auto& d = state.decomposition;
    for (std::int64_t rho = 0; rho < state.modulus; ++rho) {
      if (state.is_bad(rho)) continue;
      const DSolution sol{c1, checked_add(state.x0, checked_mul(rho, d.b[2])),
                          checked_sub(state.y0, checked_mul(rho, d.b[1]))};
      require(satisfies_D(t, sol), "solution satisfies D");
      require(in_reduced_box(t, sol), "solution lies in the reduced box");
      require(arith::gcd(sol.c2, d.b[0]) == 1 && arith::gcd(sol.c3, d.b[0]) == 1, "gcd(x,b1) = gcd(y,b1) = 1");
      r.solution = sol;
      r.rho = rho;
      r.sieve = std::move(state);
      return r;
    }
    // The excluded set has the same size for every admissible c1.
    r.diagnostic = "every rho in [0, b1*w) is excluded";
    if (d.P0.contains(2)) r.diagnostic += " (2 divides w but no b_i)";
    r.sieve = std::move(state);
    return r;
  }
  r.diagnostic = "no admissible c1";
  return r;
}

namespace {

template <typename Visit>
void scan_reduced(const Triple& t, Visit&& visit) {
  const std::int64_t n = arith::lcm(t.a1, t.a2, t.a3);
  const std::int64_t b1 = n / t.a1, b2 = n / t.a2, b3 = n / t.a3;
  std::vector<char> unit2(static_cast<std::size_t>(t.a2), 0);
  for (std::int64_t c2 = 1; c2 < t.a2; ++c2) unit2[static_cast<std::size_t>(c2)] = arith::gcd(c2, t.a2) == 1;
  for (std::int64_t c1 = 1; c1 < t.a1; ++c1) {
    if (arith::gcd(c1, t.a1) != 1) continue;
    const std::int64_t base = checked_sub(n, checked_mul(b1, c1));
    for (std::int64_t c2 = 1; c2 < t.a2; ++c2) {
      const std::int64_t rem = base - b2 * c2;
      if (rem % b3 != 0 || !unit2[static_cast<std::size_t>(c2)]) continue;
      const std::int64_t c3 = rem / b3;
      if (c3 <= -t.a3 || c3 >= t.a3 || arith::gcd(c3, t.a3) != 1) continue;
      visit(DSolution{c1, c2, c3});
    }
  }
}

}  // namespace

std::vector<DSolution> enumerate_reduced(const Triple& t) {
  std::vector<DSolution> out;
  scan_reduced(t, [&](const DSolution& s) { out.push_back(s); });
  return out;
}

std::int64_t count_reduced_bruteforce(const Triple& t) {
  std::int64_t count = 0;
  scan_reduced(t, [&](const DSolution&) { ++count; });
  return count;
}

CountReport count_reduced(const Triple& t) {
  if (!check_condition_C(t).holds()) {
    throw ConditionError("count_reduced: " + t.to_string() + " does not satisfy condition C");
  }
  const auto d = decompose(t);
  CountReport r;
  r.proof_body = checked_mul(arith::totient(t.a1), sieve_product(checked_mul(d.b[0], d.w), d.P1, d.P0));
  r.simplified = checked_mul(arith::totient(d.n), sieve_product(d.w, {}, d.P0));
  return r;
}

std::int64_t sieve_T_size(const SieveState& state) {
  const auto& d = state.decomposition;
  return state.modulus - sieve_product(state.modulus, d.P1, d.P0);
}

std::int64_t inclusion_exclusion(const std::vector<std::set<std::int64_t>>& sets) {
  if (sets.size() > 24) throw InvalidArgument("inclusion_exclusion: at most 24 sets");
  const std::size_t k = sets.size();
  std::int64_t total = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    std::set<std::int64_t> acc;
    bool first = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask & (std::uint32_t{1} << i))) continue;
      acc = first ? sets[i] : intersect(acc, sets[i]);
      first = false;
      if (acc.empty()) break;
    }
    const auto size = static_cast<std::int64_t>(acc.size());
    total += (std::popcount(mask) % 2 == 1) ? size : -size;
  }
  return total;
}

}  // namespace dihedra::triples
