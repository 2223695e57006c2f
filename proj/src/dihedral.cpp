#include "dihedra/dihedral.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "dihedra/arith.hpp"
#include "dihedra/errors.hpp"

namespace dihedra::dihedral {

DihedralElement::DihedralElement(std::int64_t n, std::int64_t k, bool refl) : n_(n), refl_(refl) {
  if (n < 2) throw InvalidArgument("dihedral group needs n >= 2, got " + std::to_string(n));
  k_ = arith::mod(k, n);
}

bool DihedralElement::is_central() const noexcept {
  if (n_ == 2) return true;
  if (refl_) return false;
  return k_ == 0 || (n_ % 2 == 0 && k_ == n_ / 2);
}

std::int64_t DihedralElement::order() const {
  if (refl_) return 2;
  return n_ / arith::gcd(n_, k_);
}

DihedralElement DihedralElement::inverse() const {
  if (refl_) return *this;
  return {n_, -k_, false};
}

DihedralElement DihedralElement::pow(std::int64_t e) const {
  if (refl_) return (e % 2 == 0) ? identity(n_) : *this;
  return {n_, arith::mul_mod(k_, e, n_), false};
}

std::string DihedralElement::to_string() const {
  if (!refl_) {
    if (k_ == 0) return "1";
    return k_ == 1 ? "g" : "g^" + std::to_string(k_);
  }
  const std::int64_t j = arith::mod(-k_, n_);
  if (j == 0) return "s";
  return j == 1 ? "s g" : "s g^" + std::to_string(j);
}

DihedralElement operator*(const DihedralElement& a, const DihedralElement& b) {
  if (a.n_ != b.n_) {
    throw InvalidArgument("dihedral product of elements from D_" + std::to_string(a.n_) + " and D_" +
                          std::to_string(b.n_));
  }
  const std::int64_t k = a.refl_ ? a.k_ - b.k_ : a.k_ + b.k_;
  return {a.n_, k, a.refl_ != b.refl_};
}

InvolutionClasses involution_classes(std::int64_t n) {
  if (n < 3) throw InvalidArgument("involution_classes needs n >= 3");
  InvolutionClasses out;
  out.n = n;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  const std::vector<DihedralElement> gens{DihedralElement::rotation(n, 1), DihedralElement(n, 0, true)};
  for (std::int64_t k = 0; k < n; ++k) {
    if (seen[static_cast<std::size_t>(k)]) continue;
    std::vector<DihedralElement> orbit;
    std::deque<DihedralElement> queue{DihedralElement(n, k, true)};
    seen[static_cast<std::size_t>(k)] = 1;
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      orbit.push_back(x);
      for (const auto& h : gens) {
        const auto y = h * x * h.inverse();
        if (!seen[static_cast<std::size_t>(y.k())]) {
          seen[static_cast<std::size_t>(y.k())] = 1;
          queue.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end(), [](const auto& a, const auto& b) { return a.k() < b.k(); });
    out.classes.push_back(std::move(orbit));
  }
  if (n % 2 == 0) out.central = DihedralElement::rotation(n, n / 2);
  return out;
}

std::int64_t cyclic_subgroup_class_count(std::int64_t n) {
  if (n < 3) throw InvalidArgument("cyclic_subgroup_class_count needs n >= 3");
  return arith::divisor_count(n) + (n % 2 == 0 ? 2 : 1);
}

namespace {

std::int64_t rotation_exponent(const DihedralElement& x) {
  if (x.refl()) throw std::logic_error("expected a rotation");
  return x.k();
}

}  // namespace

InvolutionTriple involution_triple(const triples::Triple& t) {
  if (!triples::check_condition_C(t).holds()) {
    throw ConditionError("involution_triple: " + t.to_string() + " does not satisfy condition C");
  }
  const auto d = triples::decompose(t);
  const auto res = triples::solve_condition_D(t);
  if (!res.solution) throw std::logic_error("condition C holds but no D solution was found");

  InvolutionTriple out;
  out.triple = t;
  out.n = d.n;
  out.solution = *res.solution;
  out.adjusted = {out.solution.c1, arith::mod(-out.solution.c2, t.a2), out.solution.c3};
  const std::int64_t n = d.n;
  const auto s = DihedralElement(n, 0, true);
  out.s = {s, s * DihedralElement::rotation(n, arith::mul_mod(d.b[1], out.adjusted.c2, n)),
           s * DihedralElement::rotation(n, arith::mul_mod(d.b[2], out.adjusted.c3, n))};
  const auto p12 = out.s[0] * out.s[1];
  const auto p13 = out.s[0] * out.s[2];
  const auto p23 = out.s[1] * out.s[2];
  out.product_orders = {p12.order(), p13.order(), p23.order()};
  const std::int64_t e12 = rotation_exponent(p12), e13 = rotation_exponent(p13), e23 = rotation_exponent(p23);
  out.rotations_generate = arith::gcd(e12, e13, n) == 1 && arith::gcd(e12, e23, n) == 1 &&
                           arith::gcd(e13, e23, n) == 1;

  for (const auto& x : out.s) {
    if (x.order() != 2 || x.is_central()) throw std::logic_error("constructed element is not a non-central involution");
  }
  if (out.product_orders != std::array<std::int64_t, 3>{t.a2, t.a3, t.a1}) {
    throw std::logic_error("constructed involutions have the wrong product orders for " + t.to_string());
  }
  if (!out.rotations_generate) throw std::logic_error("rotation pair fails to generate <g>");
  return out;
}

Subgroup::Subgroup(std::int64_t n, std::vector<char> members) : n_(n), members_(std::move(members)) {
  order_ = std::count(members_.begin(), members_.end(), 1);
}

bool Subgroup::contains(const DihedralElement& x) const {
  return x.n() == n_ && members_[static_cast<std::size_t>(x.index())] != 0;
}

std::vector<DihedralElement> Subgroup::elements() const {
  std::vector<DihedralElement> out;
  for (std::int64_t i = 0; i < 2 * n_; ++i) {
    if (members_[static_cast<std::size_t>(i)]) out.emplace_back(n_, i % n_, i >= n_);
  }
  return out;
}

Subgroup generated_subgroup(const std::vector<DihedralElement>& gens) {
  const std::int64_t n = gens.empty() ? 3 : gens.front().n();
  if (n > 1'000'000) throw InvalidArgument("generated_subgroup: n too large to enumerate");
  for (const auto& x : gens) {
    if (x.n() != n) throw InvalidArgument("generated_subgroup: generators from different groups");
  }
  std::vector<char> members(static_cast<std::size_t>(2 * n), 0);
  std::deque<DihedralElement> queue{DihedralElement::identity(n)};
  members[0] = 1;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& h : gens) {
      const auto y = x * h;
      auto& slot = members[static_cast<std::size_t>(y.index())];
      if (!slot) {
        slot = 1;
        queue.push_back(y);
      }
    }
  }
  return Subgroup(n, std::move(members));
}

bool realizes_triple(const triples::Triple& t, const DihedralElement& s1, const DihedralElement& s2,
                     const DihedralElement& s3) {
  for (const auto* x : {&s1, &s2, &s3}) {
    if (x->order() != 2 || x->is_central()) return false;
  }
  const auto p12 = s1 * s2, p13 = s1 * s3, p23 = s2 * s3;
  std::array<std::int64_t, 3> got{p12.order(), p13.order(), p23.order()};
  auto want = t.as_array();
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) return false;
  // Non-central involutions are reflections, so all three products are rotations.
  const std::int64_t n = s1.n();
  return arith::gcd(p12.k(), p13.k(), n) == 1 && arith::gcd(p12.k(), p23.k(), n) == 1 &&
         arith::gcd(p13.k(), p23.k(), n) == 1;
}

std::optional<std::array<DihedralElement, 3>> search_involution_triple(const triples::Triple& t) {
  const std::int64_t n = arith::lcm(t.a1, t.a2, t.a3);
  if (n < 3) return std::nullopt;  // every involution of D_2 is central
  std::vector<std::int64_t> ord(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) ord[static_cast<std::size_t>(k)] = n / arith::gcd(n, k);
  auto want = t.as_array();
  std::sort(want.begin(), want.end());
  const auto s = DihedralElement(n, 0, true);
  for (std::int64_t k2 = 0; k2 < n; ++k2) {
    const std::int64_t o12 = ord[static_cast<std::size_t>(k2)];
    if (o12 != want[0] && o12 != want[1] && o12 != want[2]) continue;
    for (std::int64_t k3 = 0; k3 < n; ++k3) {
      std::array<std::int64_t, 3> got{o12, ord[static_cast<std::size_t>(k3)],
                                      ord[static_cast<std::size_t>(arith::mod(k2 - k3, n))]};
      std::sort(got.begin(), got.end());
      if (got != want || arith::gcd(k2, k3, n) != 1) continue;
      const std::array<DihedralElement, 3> found{s, DihedralElement(n, k2, true), DihedralElement(n, k3, true)};
      if (!realizes_triple(t, found[0], found[1], found[2])) throw std::logic_error("search shortcut disagrees");
      return found;
    }
  }
  return std::nullopt;
}

}  // namespace dihedra::dihedral
