#pragma once

// The finite dihedral group D_n = <g, s | g^n = s^2 = 1, s g s^-1 = g^-1>,
// handled concretely as pairs (k, e) meaning g^k s^e.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dihedra/triples.hpp"

namespace dihedra::dihedral {

class DihedralElement {
 public:
  DihedralElement() = default;  // identity of D_3
  /// g^k s^refl; k is reduced mod n. n >= 2 (D_2 is the Klein four-group).
  DihedralElement(std::int64_t n, std::int64_t k, bool refl);

  static DihedralElement identity(std::int64_t n) { return {n, 0, false}; }
  static DihedralElement rotation(std::int64_t n, std::int64_t k) { return {n, k, false}; }
  /// s * g^j, the reflection written with s first.
  static DihedralElement s_times_rotation(std::int64_t n, std::int64_t j) { return {n, -j, true}; }

  std::int64_t n() const noexcept { return n_; }
  std::int64_t k() const noexcept { return k_; }
  bool refl() const noexcept { return refl_; }

  bool is_identity() const noexcept { return k_ == 0 && !refl_; }
  bool is_central() const noexcept;
  std::int64_t order() const;
  DihedralElement inverse() const;
  DihedralElement pow(std::int64_t e) const;
  /// Dense index k + n*refl in [0, 2n).
  std::int64_t index() const noexcept { return k_ + (refl_ ? n_ : 0); }

  /// "1", "g^k", "s", "s g^j" (reflections are written s first).
  std::string to_string() const;

  friend DihedralElement operator*(const DihedralElement& a, const DihedralElement& b);
  bool operator==(const DihedralElement&) const = default;

 private:
  std::int64_t n_ = 3;
  std::int64_t k_ = 0;
  bool refl_ = false;
};

struct InvolutionClasses {
  std::int64_t n = 0;
  std::vector<std::vector<DihedralElement>> classes;  // reflections, split into conjugacy classes
  std::optional<DihedralElement> central;             // g^(n/2) for even n
};

/// Conjugacy classes of non-central involutions, computed as conjugation orbits.
InvolutionClasses involution_classes(std::int64_t n);

/// Number of conjugacy classes of cyclic subgroups: tau(n)+1 (n odd), tau(n)+2 (n even).
std::int64_t cyclic_subgroup_class_count(std::int64_t n);

struct InvolutionTriple {
  triples::Triple triple;
  std::int64_t n = 0;
  triples::DSolution solution;  // from solve_condition_D
  triples::DSolution adjusted;  // c2 -> (-c2) mod a2
  std::array<DihedralElement, 3> s;
  std::array<std::int64_t, 3> product_orders{};  // order(s1 s2), order(s1 s3), order(s2 s3)
  bool rotations_generate = false;                // each pair of s_i s_j generates <g>
};

/// s1 = s, s2 = s g^(b2 c2'), s3 = s g^(b3 c3) with order(s1 s2) = a2,
/// order(s1 s3) = a3, order(s2 s3) = a1. Requires condition C.
InvolutionTriple involution_triple(const triples::Triple& t);

class Subgroup {
 public:
  Subgroup(std::int64_t n, std::vector<char> members);
  std::int64_t n() const noexcept { return n_; }
  std::int64_t order() const noexcept { return order_; }
  bool contains(const DihedralElement& x) const;
  std::vector<DihedralElement> elements() const;

 private:
  std::int64_t n_;
  std::vector<char> members_;
  std::int64_t order_ = 0;
};

/// Closure of the given elements under multiplication. Requires a common n <= 10^6.
Subgroup generated_subgroup(const std::vector<DihedralElement>& gens);

/// True iff s1, s2, s3 are non-central involutions whose pairwise products
/// have orders {a1, a2, a3} as a multiset and every two of the products
/// generate the rotation subgroup.
bool realizes_triple(const triples::Triple& t, const DihedralElement& s1, const DihedralElement& s2,
                     const DihedralElement& s3);

/// Exhaustive search in D_lcm for a realizing triple. Up to an automorphism
/// of D_n, s1 = s; the search runs over s2, s3 among the reflections.
std::optional<std::array<DihedralElement, 3>> search_involution_triple(const triples::Triple& t);

}  // namespace dihedra::dihedral
