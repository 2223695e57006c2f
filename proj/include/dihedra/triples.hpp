#pragma once

// Integer triples (a1, a2, a3): the lcm/valuation condition C, the
// constructive solution of condition D by an arithmetic-progression sieve,
// and enumeration/counting of reduced solutions.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dihedra::triples {

struct Triple {
  std::int64_t a1 = 2;
  std::int64_t a2 = 2;
  std::int64_t a3 = 2;

  /// Throws InvalidArgument unless every entry is >= 2.
  static Triple make(std::int64_t a1, std::int64_t a2, std::int64_t a3);

  std::int64_t operator[](std::size_t i) const { return i == 0 ? a1 : (i == 1 ? a2 : a3); }
  std::array<std::int64_t, 3> as_array() const { return {a1, a2, a3}; }
  std::string to_string() const;
  bool operator==(const Triple&) const = default;
};

struct ConditionC {
  bool c1 = false;  // pairwise lcms equal the global lcm
  bool c2 = false;  // not all three 2-adic valuations equal v2(n) >= 1
  bool holds() const noexcept { return c1 && c2; }
};

ConditionC check_condition_C(const Triple& t);

struct TripleDecomposition {
  std::int64_t n = 0;  // lcm
  std::int64_t w = 0;  // gcd
  std::array<std::int64_t, 3> b{};  // n = a_i * b_i
  std::set<std::int64_t> P0;  // primes of w dividing no b_i
  std::set<std::int64_t> P1;  // P(b1) + (P(b2) & P(w)) + (P(b3) & P(w))
  std::set<std::int64_t> Q;   // union of P(b_i) & P(w)
  std::array<std::set<std::int64_t>, 3> Qi;  // P(b_i) - P(w)
};

/// Requires C1; throws ConditionError otherwise.
TripleDecomposition decompose(const Triple& t);

/// rho0 in [0, b) with b | c + a*rho0. Requires b > 0 and gcd(a, b) = 1.
std::int64_t ap_solve(std::int64_t a, std::int64_t b, std::int64_t c);

struct ResidueClass {
  std::int64_t residue = 0;  // in [0, modulus)
  std::int64_t modulus = 1;
  bool contains(std::int64_t x) const;
  bool operator==(const ResidueClass&) const = default;
};

/// CRT intersection of classes with coprime moduli.
ResidueClass ap_intersect(const ResidueClass& a, const ResidueClass& b);

struct DSolution {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t c3 = 0;
  bool operator==(const DSolution&) const = default;
  auto operator<=>(const DSolution&) const = default;
};

/// gcd(c_i, a_i) = 1 and sum b_i c_i = n with b_i = n / a_i.
bool satisfies_D(const Triple& t, const DSolution& s);
/// 0 < c1 < a1, 0 < c2 < a2, |c3| < a3.
bool in_reduced_box(const Triple& t, const DSolution& s);

struct SieveClass {
  char variable = 'x';  // 'x': p | x0 + rho*b3, 'y': p | y0 - rho*b2
  std::int64_t prime = 0;
  std::int64_t residue = 0;  // the excluded rho mod prime
};

struct SieveState {
  TripleDecomposition decomposition;
  std::int64_t c1 = 0;
  std::int64_t x0 = 0;  // particular solution of b2*x + b3*y = b1*(b2*b3*w - c1), x0 in [1, b3]
  std::int64_t y0 = 0;
  std::int64_t modulus = 0;  // b1 * w
  std::vector<SieveClass> bad;

  bool is_bad(std::int64_t rho) const;
};

/// Sieve data for a given c1 (0 < c1 < a1, gcd(c1, a1) = 1). Requires C1.
SieveState build_sieve(const Triple& t, std::int64_t c1);

struct DResult {
  std::optional<DSolution> solution;
  std::optional<SieveState> sieve;  // state for the c1 that produced the solution
  std::int64_t rho = -1;
  std::string diagnostic;
};

/// Deterministic: smallest admissible c1, then smallest rho in [0, b1*w)
/// avoiding every excluded class.
DResult solve_condition_D(const Triple& t);

/// Brute-force scan of the reduced box, lexicographic order.
std::vector<DSolution> enumerate_reduced(const Triple& t);
/// Same scan, count only.
std::int64_t count_reduced_bruteforce(const Triple& t);

struct CountReport {
  std::int64_t proof_body = 0;  // phi(a1) * b1 * w * prod_P1 (p-1)/p * prod_P0 (s-2)/s
  std::int64_t simplified = 0;  // phi(n) * w * prod_P0 (s-2)/s
  bool agree() const noexcept { return proof_body == simplified; }
};

/// Requires condition C; throws ConditionError otherwise.
CountReport count_reduced(const Triple& t);

/// b1*w * (1 - prod_P1 (p-1)/p * prod_P0 (s-2)/s), the number of excluded rho.
std::int64_t sieve_T_size(const SieveState& state);

/// |union of sets| by alternating sums over intersections. At most 24 sets.
std::int64_t inclusion_exclusion(const std::vector<std::set<std::int64_t>>& sets);

}  // namespace dihedra::triples
