#pragma once

// Rational representations of D_n by integer matrices: the faithful
// representation on Z[x]/Phi_n, its quotients through D_e, the degree-one
// characters, and the complete inventory.

#include <cstdint>
#include <string>
#include <vector>

#include "dihedra/arith.hpp"
#include "dihedra/dihedral.hpp"

namespace dihedra::repr {

using arith::IntMatrix;

/// Images of g and s for a representation of D_n.
struct RepMatrixPair {
  std::int64_t n = 0;       // the group is D_n
  std::int64_t level = 0;   // g acts with order `level` (e for quotient reps, 1 or 2 for characters)
  std::size_t degree = 0;
  IntMatrix G;
  IntMatrix S;
};

/// G = companion matrix of Phi_n; column j of S is -(x^-j mod Phi_n). n >= 3.
RepMatrixPair build_faithful_rep(std::int64_t n);

/// G^k S^refl.
IntMatrix rep_of_element(const RepMatrixPair& rep, const dihedral::DihedralElement& x);

/// Representation of D_n through D_e: degree phi(e), kernel <g^e>. e | n, e >= 3.
RepMatrixPair quotient_rep(std::int64_t n, std::int64_t e);

struct LabeledRep {
  std::string label;   // R0, R1, R2, R1xR2, or R_e
  std::string kernel;  // description of the kernel
  RepMatrixPair rep;
};

/// R0, R1 and, for even n, R2 and R1xR2.
std::vector<LabeledRep> degree_one_reps(std::int64_t n);

/// Elements of D_n acting trivially, by enumeration.
std::vector<dihedral::DihedralElement> kernel_elements(const RepMatrixPair& rep);

struct RepInventory {
  std::int64_t n = 0;
  std::vector<LabeledRep> entries;
};

/// Degree-one reps followed by quotient_rep(n, e) for e | n, e >= 3, ascending.
RepInventory rational_inventory(std::int64_t n);

}  // namespace dihedra::repr
