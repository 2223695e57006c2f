#include "dihedra/repr.hpp"

#include "dihedra/cyclo.hpp"
#include "dihedra/errors.hpp"

namespace dihedra::repr {

namespace {

// Level-e matrices, viewed as a representation of D_n.
RepMatrixPair level_pair(std::int64_t n, std::int64_t e) {
  RepMatrixPair r;
  r.n = n;
  r.level = e;
  r.G = arith::companion_matrix(arith::cyclotomic_poly(e).coeffs);
  r.degree = r.G.rows();
  r.S = IntMatrix(r.degree, r.degree);
  for (std::size_t j = 0; j < r.degree; ++j) {
    const auto col = cyclo::CycloNumber::zeta_power(e, -static_cast<std::int64_t>(j)).coeffs();
    for (std::size_t i = 0; i < r.degree; ++i) r.S(i, j) = -col[i];
  }
  return r;
}

RepMatrixPair character(std::int64_t n, int g, int s) {
  RepMatrixPair r;
  r.n = n;
  r.level = g == 1 ? 1 : 2;
  r.degree = 1;
  r.G = IntMatrix{{g}};
  r.S = IntMatrix{{s}};
  return r;
}

}  // namespace

RepMatrixPair build_faithful_rep(std::int64_t n) {
  if (n < 3) throw InvalidArgument("build_faithful_rep needs n >= 3, got " + std::to_string(n));
  return level_pair(n, n);
}

IntMatrix rep_of_element(const RepMatrixPair& rep, const dihedral::DihedralElement& x) {
  if (x.n() != rep.n) {
    throw InvalidArgument("element of D_" + std::to_string(x.n()) + " applied to a representation of D_" +
                          std::to_string(rep.n));
  }
  auto m = arith::matrix_power(rep.G, static_cast<std::uint64_t>(x.k() % rep.level));
  return x.refl() ? m * rep.S : m;
}

RepMatrixPair quotient_rep(std::int64_t n, std::int64_t e) {
  if (n < 3 || e < 3 || n % e != 0) {
    throw InvalidArgument("quotient_rep: need e | n with e >= 3, got n=" + std::to_string(n) +
                          ", e=" + std::to_string(e));
  }
  return level_pair(n, e);
}

std::vector<LabeledRep> degree_one_reps(std::int64_t n) {
  if (n < 3) throw InvalidArgument("degree_one_reps needs n >= 3");
  std::vector<LabeledRep> out{{"R0", "D_" + std::to_string(n), character(n, 1, 1)},
                              {"R1", "<g>", character(n, 1, -1)}};
  if (n % 2 == 0) {
    out.push_back({"R2", "<g^2, s>", character(n, -1, -1)});
    out.push_back({"R1xR2", "<g^2, g s>", character(n, -1, 1)});
  }
  return out;
}

std::vector<dihedral::DihedralElement> kernel_elements(const RepMatrixPair& rep) {
  std::vector<dihedral::DihedralElement> out;
  const auto id = IntMatrix::identity(rep.degree);
  auto power = id;  // G^k
  for (std::int64_t k = 0; k < rep.n; ++k) {
    if (power == id) out.emplace_back(rep.n, k, false);
    if (power * rep.S == id) out.emplace_back(rep.n, k, true);
    power = power * rep.G;
  }
  return out;
}

RepInventory rational_inventory(std::int64_t n) {
  RepInventory inv;
  inv.n = n;
  inv.entries = degree_one_reps(n);
  for (auto e : arith::divisors(n)) {
    if (e < 3) continue;
    const std::string kernel = e == n ? "1" : "<g^" + std::to_string(e) + ">";
    inv.entries.push_back({"R_" + std::to_string(e), kernel, quotient_rep(n, e)});
  }
  return inv;
}

}  // namespace dihedra::repr
