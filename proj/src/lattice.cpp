#include "dihedra/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "dihedra/cyclo.hpp"
#include "dihedra/errors.hpp"

namespace dihedra::lattice {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("internal invariant violated: " + what);
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const BigInt& c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

std::string vec_string(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

std::string to_string(const AffineElement& a) { return "(" + vec_string(a.v) + ", " + a.h.to_string() + ")"; }

// ---------------------------------------------------------------------------

AffineGroup::AffineGroup(std::int64_t n) : n_(n), rep_(repr::build_faithful_rep(n)) {}

const IntMatrix& AffineGroup::action(const DihedralElement& h) const {
  if (h.n() != n_) throw InvalidArgument("action: element of D_" + std::to_string(h.n()) + " on level " + std::to_string(n_));
  std::lock_guard lock(mu_);
  auto& slot = action_cache_[h.index()];
  if (!slot) slot = std::make_unique<IntMatrix>(repr::rep_of_element(rep_, h));
  return *slot;
}

const IntMatrix& AffineGroup::norm(const DihedralElement& h) const {
  const IntMatrix& m = action(h);
  std::lock_guard lock(mu_);
  auto& slot = norm_cache_[h.index()];
  if (!slot) {
    IntMatrix sum(dim(), dim());
    IntMatrix power = IntMatrix::identity(dim());
    for (std::int64_t j = 0; j < h.order(); ++j) {
      sum = sum + power;
      power = power * m;
    }
    slot = std::make_unique<IntMatrix>(std::move(sum));
  }
  return *slot;
}

void AffineGroup::check(const AffineElement& a) const {
  if (a.n != n_ || a.h.n() != n_) {
    throw InvalidArgument("affine element of level " + std::to_string(a.n) + " used in level " + std::to_string(n_));
  }
  if (a.v.size() != dim()) throw InvalidArgument("affine element translation has the wrong length");
}

AffineElement AffineGroup::identity() const { return {n_, Vec(dim(), 0), DihedralElement::identity(n_)}; }

AffineElement AffineGroup::make(Vec v, const DihedralElement& h) const {
  AffineElement a{n_, std::move(v), h};
  check(a);
  return a;
}

AffineElement AffineGroup::translation(Vec v) const { return make(std::move(v), DihedralElement::identity(n_)); }

AffineElement AffineGroup::point(const DihedralElement& h) const { return make(Vec(dim(), 0), h); }

AffineElement AffineGroup::mul(const AffineElement& a, const AffineElement& b) const {
  check(a);
  check(b);
  return {n_, add(a.v, action(a.h) * b.v), a.h * b.h};
}

AffineElement AffineGroup::inv(const AffineElement& a) const {
  check(a);
  const auto hi = a.h.inverse();
  Vec v = action(hi) * a.v;
  for (auto& x : v) x = -x;
  return {n_, std::move(v), hi};
}

AffineElement AffineGroup::pow(const AffineElement& a, std::int64_t e) const {
  AffineElement base = e < 0 ? inv(a) : a;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  AffineElement acc = identity();
  while (k > 0) {
    if (k & 1U) acc = mul(acc, base);
    k >>= 1U;
    if (k > 0) base = mul(base, base);
  }
  return acc;
}

std::optional<std::int64_t> AffineGroup::order(const AffineElement& a) const {
  check(a);
  if (is_zero(norm(a.h) * a.v)) return a.h.order();
  return std::nullopt;
}

Vec AffineGroup::monomial(std::int64_t i) const {
  const auto c = cyclo::CycloNumber::zeta_power(n_, i).coeffs();
  return Vec(c.begin(), c.end());
}

std::shared_ptr<const AffineGroup> affine_group(std::int64_t n) {
  static std::mutex mu;
  static std::unordered_map<std::int64_t, std::shared_ptr<const AffineGroup>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const AffineGroup>(n);
  return slot;
}

// ---------------------------------------------------------------------------
// Words.

std::string word_to_string(const Word& w) {
  static const char* names[] = {"s1", "s2", "s3", "s1^-1", "s2^-1", "s3^-1"};
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += names[static_cast<int>(w[i])];
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    if (tok == "s1") out.push_back(Token::S1);
    else if (tok == "s2") out.push_back(Token::S2);
    else if (tok == "s3") out.push_back(Token::S3);
    else if (tok == "s1^-1") out.push_back(Token::S1Inv);
    else if (tok == "s2^-1") out.push_back(Token::S2Inv);
    else if (tok == "s3^-1") out.push_back(Token::S3Inv);
    else throw InvalidArgument("unknown word token '" + tok + "'");
  }
  return out;
}

bool GeneratorData::sigma_is_involution(std::size_t i) const {
  return group->mul(sigma[i], sigma[i]) == group->identity();
}

AffineElement evaluate_word(const GeneratorData& gd, const Word& word) {
  const auto& G = *gd.group;
  std::array<std::optional<AffineElement>, 3> inverses;
  AffineElement acc = G.identity();
  for (auto t : word) {
    const auto i = static_cast<std::size_t>(t) % 3;
    if (static_cast<int>(t) < 3) {
      acc = G.mul(acc, gd.sigma[i]);
    } else {
      if (!inverses[i]) inverses[i] = G.inv(gd.sigma[i]);
      acc = G.mul(acc, *inverses[i]);
    }
  }
  return acc;
}

Word inverse_word(const GeneratorData& gd, const Word& word) {
  std::array<bool, 3> invol{gd.sigma_is_involution(0), gd.sigma_is_involution(1), gd.sigma_is_involution(2)};
  Word out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto i = static_cast<std::size_t>(*it) % 3;
    const bool inverted = static_cast<int>(*it) >= 3;
    if (invol[i] || inverted) out.push_back(static_cast<Token>(i));
    else out.push_back(static_cast<Token>(i + 3));
  }
  return out;
}

bool certificate_holds(const GeneratorData& gd, const WordCertificate& c) {
  return evaluate_word(gd, c.word) == c.target;
}

namespace {

Word concat(std::initializer_list<const Word*> parts) {
  Word out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

Word word_power(const GeneratorData& gd, const Word& w, std::int64_t e) {
  const Word base = e < 0 ? inverse_word(gd, w) : w;
  Word out;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

std::int64_t signed_residue(std::int64_t a, std::int64_t m) {
  std::int64_t r = arith::mod(a, m);
  return 2 * r > m ? r - m : r;
}

// (a, c) minimizing |a| + |c| with a*x + c*y = target (mod n), a mod ox, c mod oy.
std::pair<std::int64_t, std::int64_t> short_combination(std::int64_t x, std::int64_t ox, std::int64_t y,
                                                        std::int64_t oy, std::int64_t target, std::int64_t n) {
  std::optional<std::pair<std::int64_t, std::int64_t>> best;
  for (std::int64_t a0 = 0; a0 < ox; ++a0) {
    for (std::int64_t c0 = 0; c0 < oy; ++c0) {
      if (arith::mod(a0 * x + c0 * y - target, n) != 0) continue;
      const std::int64_t a = signed_residue(a0, ox), c = signed_residue(c0, oy);
      if (!best || std::abs(a) + std::abs(c) < std::abs(best->first) + std::abs(best->second)) best = {a, c};
    }
  }
  if (!best) throw std::logic_error("rotation not reachable from g^u and g^v");
  return *best;
}

}  // namespace

GeneratorData standard_generators(std::int64_t p, std::int64_t q, std::int64_t r) {
  const auto input = triples::Triple::make(p, q, r);
  if (!triples::check_condition_C(input).holds()) {
    throw ConditionError("standard_generators: " + input.to_string() + " does not satisfy condition C");
  }
  GeneratorData gd;
  gd.input = input;
  const std::int64_t n = arith::lcm(p, q, r);
  gd.origin = {0, 1, 2};
  if (n % 2 == 0) {
    const unsigned vn = arith::valuation(2, n);
    for (std::size_t j = 0; j < 3; ++j) {
      if (arith::valuation(2, input[j]) < vn) std::swap(gd.origin[1], gd.origin[j]);
    }
  }
  gd.labeled = triples::Triple::make(input[gd.origin[0]], input[gd.origin[1]], input[gd.origin[2]]);
  gd.decomposition = triples::decompose(gd.labeled);
  const auto res = triples::solve_condition_D(gd.labeled);
  require(res.solution.has_value(), "condition C holds but no D solution");
  gd.solution = *res.solution;
  const auto& b = gd.decomposition.b;
  gd.k1 = -gd.solution.c1;
  gd.k2 = gd.solution.c2;
  gd.k3 = -gd.solution.c3;
  gd.u = arith::mul_mod(b[0], gd.k1, n);
  gd.v = arith::mul_mod(b[1], gd.k2, n);
  require(arith::mod(gd.v - gd.u - b[2] * gd.k3, n) == 0, "v - u = r1 k3 mod n");
  require(arith::gcd(gd.u, gd.v, n) == 1, "gcd(u, v, n) = 1");

  gd.group = affine_group(n);
  const auto& G = *gd.group;
  for (std::int64_t i = 0; i < n; ++i) {
    if (arith::mod(2 * i + gd.v, n) == 0) {
      gd.seed_exponent = i;
      break;
    }
  }
  if (gd.seed_exponent >= 0) {
    gd.seed_rule = "involution";
    gd.e = G.monomial(gd.seed_exponent);
  } else {
    gd.seed_rule = "literal";
    gd.e = G.monomial(1);
  }
  const DihedralElement s(n, 0, true);
  gd.sigma = {G.point(s), G.point(DihedralElement::s_times_rotation(n, gd.u)),
              G.make(gd.e, DihedralElement::s_times_rotation(n, gd.v))};
  gd.product_orders = {G.order(G.mul(gd.sigma[0], gd.sigma[1])), G.order(G.mul(gd.sigma[0], gd.sigma[2])),
                       G.order(G.mul(gd.sigma[1], gd.sigma[2]))};
  require(gd.product_orders[0] == gd.labeled.a1 && gd.product_orders[1] == gd.labeled.a2 &&
              gd.product_orders[2] == gd.labeled.a3,
          "generator product orders match " + gd.labeled.to_string());
  return gd;
}

std::vector<WordCertificate> generation_witnesses(const GeneratorData& gd) {
  const auto& d = gd.decomposition;
  const std::int64_t p1 = d.b[0], q1 = d.b[1], r1 = d.b[2], w = d.w;
  if (q1 < 2 || r1 < 2) throw DegenerateLabeling(q1, r1);
  const auto& G = *gd.group;
  const std::int64_t n = G.n();
  const std::int64_t p = gd.labeled.a1, q = gd.labeled.a2;
  std::vector<WordCertificate> out;

  const Word s1s2{Token::S1, Token::S2};
  const Word s1s3{Token::S1, Token::S3};
  const std::int64_t m = signed_residue(arith::inverse_mod(arith::mod(gd.k1, p), p), p);
  const Word a_word = word_power(gd, s1s2, m);
  out.push_back({"rotation g^p1", G.point(DihedralElement::rotation(n, p1)), a_word});

  const AffineElement B = G.mul(gd.sigma[0], gd.sigma[2]);
  const Vec& b = B.v;
  const Word b_inv = inverse_word(gd, s1s3);

  auto commutator = [&](std::int64_t k) {
    const std::int64_t ak = signed_residue(m * k, p);
    const Word pos = word_power(gd, s1s2, ak);
    const Word neg = word_power(gd, s1s2, -ak);
    const Vec target = sub(G.action(DihedralElement::rotation(n, p1 * k)) * b, b);
    out.push_back({"translation g^(p1*" + std::to_string(k) + ")b - b", G.translation(target),
                   concat({&pos, &s1s3, &neg, &b_inv})});
    return out.back().word;
  };

  auto multiple = [&](std::int64_t count, std::int64_t step, const std::string& name) {
    Word word;
    for (std::int64_t j = 1; j < count; ++j) {
      const Word t = inverse_word(gd, commutator(j * step * w));
      word.insert(word.end(), t.begin(), t.end());
    }
    out.push_back({name, G.translation(scale(count, b)), word});
    return word;
  };
  const Word q1b = multiple(q1, r1, "translation q1*b");
  const Word r1b = multiple(r1, q1, "translation r1*b");

  const auto eg = arith::extended_gcd(q1, r1);
  require(eg.g == 1, "gcd(q1, r1) = 1");
  const Word part_q = word_power(gd, q1b, eg.x);
  const Word part_r = word_power(gd, r1b, eg.y);
  const Word b_word = concat({&part_q, &part_r});
  out.push_back({"translation b", G.translation(b), b_word});

  const Word s1w{Token::S1};
  out.push_back({"translation e", G.translation(gd.e), concat({&s1w, &b_word, &s1w})});

  out.push_back({"rotation g^u", G.point(DihedralElement::rotation(n, gd.u)), s1s2});
  const Word b_word_inv = inverse_word(gd, b_word);
  const Word gv_word = concat({&b_word_inv, &s1s3});
  out.push_back({"rotation g^v", G.point(DihedralElement::rotation(n, gd.v)), gv_word});
  const auto [alpha, beta] = short_combination(gd.u, p, gd.v, q, 1, n);
  const Word gu_pow = word_power(gd, s1s2, alpha);
  const Word gv_pow = word_power(gd, gv_word, beta);
  out.push_back({"rotation g", G.point(DihedralElement::rotation(n, 1)), concat({&gu_pow, &gv_pow})});

  // Basis vectors as rotation conjugates of b. Conjugating a translation by
  // s1 s3 acts through its point part only.
  const std::size_t dim = G.dim();
  for (std::size_t j = 0; j < dim; ++j) {
    Vec unit(dim, 0);
    unit[j] = 1;
    const Vec neg_unit = scale(-1, unit);
    bool found = false;
    for (std::int64_t k = 0; k < n && !found; ++k) {
      const Vec img = G.action(DihedralElement::rotation(n, k)) * b;
      if (img != unit && img != neg_unit) continue;
      const auto [a, c] = short_combination(gd.u, p, gd.v, q, k, n);
      const Word ra = word_power(gd, s1s2, a);
      const Word rc = word_power(gd, s1s3, c);
      const Word conj = concat({&ra, &rc});
      const Word conj_inv = inverse_word(gd, conj);
      Word word = concat({&conj, &b_word, &conj_inv});
      if (img == neg_unit) word = inverse_word(gd, word);
      out.push_back({"basis e_" + std::to_string(j), G.translation(unit), std::move(word)});
      found = true;
    }
    if (!found) throw std::logic_error("no rotation of b is a signed basis vector");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linear algebra mod a prime.

namespace {

std::int64_t mod_big(const BigInt& x, std::int64_t p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

using ModVec = std::vector<std::int64_t>;
using ModMat = std::vector<ModVec>;

ModMat mod_matrix(const IntMatrix& m, std::int64_t p) {
  ModMat out(m.rows(), ModVec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = mod_big(m(i, j), p);
  }
  return out;
}

ModVec apply(const ModMat& m, const ModVec& v, std::int64_t p) {
  ModVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (m[i][j] != 0 && v[j] != 0) acc = (acc + arith::mul_mod(m[i][j], v[j], p)) % p;
    }
    out[i] = acc;
  }
  return out;
}

// Reduced row echelon subspace of (Z/p)^dim.
class ModSpace {
 public:
  ModSpace(std::int64_t p, std::size_t dim) : p_(p), dim_(dim) {}

  ModVec reduce(ModVec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::int64_t c = v[pivots_[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (rows_[r][j] != 0) v[j] = arith::mod(v[j] - arith::mul_mod(c, rows_[r][j], p_), p_);
      }
    }
    return v;
  }

  bool add(const ModVec& v) {
    ModVec red = reduce(v);
    std::size_t piv = dim_;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (red[j] != 0) {
        piv = j;
        break;
      }
    }
    if (piv == dim_) return false;
    const std::int64_t inv = arith::inverse_mod(red[piv], p_);
    for (auto& x : red) x = arith::mul_mod(x, inv, p_);
    for (auto& row : rows_) {
      const std::int64_t c = row[piv];
      if (c == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) row[j] = arith::mod(row[j] - arith::mul_mod(c, red[j], p_), p_);
    }
    const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin());
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(red));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    return true;
  }

  bool contains(const ModVec& v) const {
    const auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
  }

  std::size_t dimension() const noexcept { return rows_.size(); }
  const ModMat& rows() const noexcept { return rows_; }

 private:
  std::int64_t p_;
  std::size_t dim_;
  ModMat rows_;
  std::vector<std::size_t> pivots_;
};

ModVec to_mod(const Vec& v, std::int64_t p) {
  ModVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod_big(v[i], p);
  return out;
}

ModVec mod_sub(const ModVec& a, const ModVec& b, std::int64_t p) {
  ModVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = arith::mod(a[i] - b[i], p);
  return out;
}

struct Transversal {
  std::vector<Word> words;               // by dense index
  std::vector<AffineElement> elements;   // evaluated words
  std::vector<char> reached;
  std::int64_t count = 0;
};

Transversal build_transversal(const GeneratorData& gd) {
  const auto& G = *gd.group;
  const std::int64_t n = G.n();
  Transversal t;
  t.words.resize(static_cast<std::size_t>(2 * n));
  t.elements.resize(static_cast<std::size_t>(2 * n));
  t.reached.assign(static_cast<std::size_t>(2 * n), 0);
  t.elements[0] = G.identity();
  t.reached[0] = 1;
  t.count = 1;
  std::deque<std::int64_t> queue{0};
  while (!queue.empty()) {
    const auto idx = static_cast<std::size_t>(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < 3; ++i) {
      auto y = G.mul(t.elements[idx], gd.sigma[i]);
      const auto j = static_cast<std::size_t>(y.h.index());
      if (t.reached[j]) continue;
      t.reached[j] = 1;
      ++t.count;
      t.words[j] = t.words[idx];
      t.words[j].push_back(static_cast<Token>(i));
      t.elements[j] = std::move(y);
      queue.push_back(static_cast<std::int64_t>(j));
    }
  }
  return t;
}

std::vector<BigInt> span_invariants(const std::vector<Vec>& rows, std::size_t dim) {
  if (rows.empty()) return std::vector<BigInt>(dim, 0);
  std::vector<BigInt> entries;
  entries.reserve(rows.size() * dim);
  for (const auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
  return arith::smith_normal_form(IntMatrix(rows.size(), dim, std::move(entries)));
}

constexpr std::int64_t kMaxVerifyLevel = 2000;

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Generated: return "generated";
    case Verdict::Obstructed: return "obstructed";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

VerificationReport verify_generation(std::int64_t p, std::int64_t q, std::int64_t r) {
  VerificationReport rep;
  rep.generators = standard_generators(p, q, r);
  const auto& gd = rep.generators;
  const auto& G = *gd.group;
  const std::int64_t n = G.n();
  const std::size_t dim = G.dim();
  rep.diagnostics.push_back("labeled triple " + gd.labeled.to_string() + ", seed rule " + gd.seed_rule);

  try {
    rep.certificates = generation_witnesses(gd);
  } catch (const DegenerateLabeling& ex) {
    rep.diagnostics.push_back(ex.what());
  }
  for (const auto& c : rep.certificates) {
    if (!certificate_holds(gd, c)) rep.diagnostics.push_back("certificate '" + c.name + "' does not evaluate to its target");
  }

  const auto point = dihedral::generated_subgroup({gd.sigma[0].h, gd.sigma[1].h, gd.sigma[2].h});
  rep.point_group_order = point.order();
  rep.point_group_surjects = point.order() == 2 * n;
  if (!rep.point_group_surjects) {
    rep.verdict = Verdict::Obstructed;
    rep.diagnostics.push_back("point parts generate a subgroup of order " + std::to_string(point.order()) +
                              " in D_" + std::to_string(n));
    return rep;
  }
  if (n > kMaxVerifyLevel) {
    rep.diagnostics.push_back("level too large for the Schreier computation");
    return rep;
  }

  // Schreier generators of the kernel of the point map: exactly the
  // translations in the generated group.
  const auto tr = build_transversal(gd);
  require(tr.count == 2 * n, "transversal covers D_n");
  std::map<Vec, Word> collected;
  for (std::int64_t idx = 0; idx < 2 * n; ++idx) {
    const auto& th = tr.elements[static_cast<std::size_t>(idx)];
    for (std::size_t i = 0; i < 3; ++i) {
      const auto y = G.mul(th, gd.sigma[i]);
      const auto j = static_cast<std::size_t>(y.h.index());
      const auto k = G.mul(y, G.inv(tr.elements[j]));
      require(k.h.is_identity(), "Schreier element is a translation");
      if (is_zero(k.v) || collected.contains(k.v)) continue;
      Word word = tr.words[static_cast<std::size_t>(idx)];
      word.push_back(static_cast<Token>(i));
      const Word back = inverse_word(gd, tr.words[j]);
      word.insert(word.end(), back.begin(), back.end());
      collected.emplace(k.v, std::move(word));
    }
  }
  const auto square = G.mul(gd.sigma[2], gd.sigma[2]);
  if (!is_zero(square.v) && !collected.contains(square.v)) collected.emplace(square.v, Word{Token::S3, Token::S3});
  for (const auto& c : rep.certificates) {
    if (c.target.h.is_identity() && !is_zero(c.target.v) && !collected.contains(c.target.v)) {
      collected.emplace(c.target.v, c.word);
    }
  }
  rep.translation_generators = collected.size();

  std::vector<Vec> rows;
  for (const auto& [v, w] : collected) rows.push_back(v);
  rep.invariant_factors = span_invariants(rows, dim);
  bool rank_full = true;
  BigInt index = 1;
  for (const auto& f : rep.invariant_factors) {
    if (f == 0) rank_full = false;
    index *= f;
  }
  if (rank_full) rep.index = index;

  if (rank_full && index == 1) {
    rep.verdict = Verdict::Generated;
    GenerationWitness gw;
    for (const auto& [v, w] : collected) gw.translations.push_back({"translation", G.translation(v), w});
    gw.invariant_factors = rep.invariant_factors;
    rep.generation = std::move(gw);
    return rep;
  }

  // Primes at which the translations fall short.
  std::set<std::int64_t> primes;
  if (!rank_full) primes.insert(2);
  for (const auto& f : rep.invariant_factors) {
    if (f <= 1) continue;
    if (f > BigInt(std::numeric_limits<std::int64_t>::max())) {
      rep.diagnostics.push_back("invariant factor too large to factor");
      continue;
    }
    for (auto pr : arith::prime_support(static_cast<std::int64_t>(f))) primes.insert(pr);
  }
  for (auto pr : primes) {
    ModSpace W(pr, dim);
    for (const auto& v : rows) W.add(to_mod(v, pr));
    const std::array<ModMat, 2> gens{mod_matrix(G.action(DihedralElement::rotation(n, 1)), pr),
                                     mod_matrix(G.action(DihedralElement(n, 0, true)), pr)};
    std::deque<ModVec> queue(W.rows().begin(), W.rows().end());
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (const auto& m : gens) {
        auto y = apply(m, x, pr);
        if (W.add(y)) queue.push_back(std::move(y));
      }
    }
    rep.prime_checks.push_back({pr, W.dimension(), W.dimension() == dim});
    if (W.dimension() == dim || rep.obstruction) continue;
    QuotientWitness qw;
    qw.prime = pr;
    qw.subspace = W.rows();
    for (std::int64_t idx = 0; idx < 2 * n; ++idx) {
      qw.cocycle.push_back(W.reduce(to_mod(tr.elements[static_cast<std::size_t>(idx)].v, pr)));
    }
    rep.obstruction = std::move(qw);
  }
  if (rep.obstruction) {
    rep.verdict = Verdict::Obstructed;
    std::string why;
    if (!recheck_quotient_witness(p, q, r, *rep.obstruction, &why)) {
      rep.diagnostics.push_back("quotient witness failed its recheck: " + why);
      rep.verdict = Verdict::Inconclusive;
    }
  } else {
    rep.diagnostics.push_back("index > 1 but every prime check passed");
  }
  return rep;
}

bool recheck_quotient_witness(std::int64_t p, std::int64_t q, std::int64_t r, const QuotientWitness& w,
                              std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const auto gd = standard_generators(p, q, r);
  const auto& G = *gd.group;
  const std::int64_t n = G.n();
  const std::size_t dim = G.dim();
  const std::int64_t pr = w.prime;
  if (pr < 2 || !arith::is_prime(static_cast<std::uint64_t>(pr))) return fail("modulus is not prime");

  ModSpace W(pr, dim);
  for (const auto& row : w.subspace) {
    if (row.size() != dim) return fail("subspace row has the wrong length");
    for (auto x : row) {
      if (x < 0 || x >= pr) return fail("subspace entry out of range");
    }
    if (!W.add(row)) return fail("subspace rows are dependent");
  }
  if (W.dimension() >= dim) return fail("subspace is not proper");

  std::vector<ModMat> act;
  act.reserve(static_cast<std::size_t>(2 * n));
  for (std::int64_t idx = 0; idx < 2 * n; ++idx) act.push_back(mod_matrix(G.action(DihedralElement(n, idx % n, idx >= n)), pr));
  for (const auto& row : w.subspace) {
    if (!W.contains(apply(act[1], row, pr)) || !W.contains(apply(act[static_cast<std::size_t>(n)], row, pr))) {
      return fail("subspace is not invariant");
    }
  }

  if (w.cocycle.size() != static_cast<std::size_t>(2 * n)) return fail("cocycle has the wrong number of values");
  for (const auto& c : w.cocycle) {
    if (c.size() != dim) return fail("cocycle value has the wrong length");
  }
  for (std::int64_t a = 0; a < 2 * n; ++a) {
    const DihedralElement ha(n, a % n, a >= n);
    for (std::int64_t b = 0; b < 2 * n; ++b) {
      const DihedralElement hb(n, b % n, b >= n);
      const auto prod = static_cast<std::size_t>((ha * hb).index());
      const ModVec moved = apply(act[static_cast<std::size_t>(a)], w.cocycle[static_cast<std::size_t>(b)], pr);
      ModVec diff = mod_sub(mod_sub(w.cocycle[prod], w.cocycle[static_cast<std::size_t>(a)], pr), moved, pr);
      if (!W.contains(diff)) return fail("cocycle condition fails");
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& s = gd.sigma[i];
    if (!W.contains(mod_sub(to_mod(s.v, pr), w.cocycle[static_cast<std::size_t>(s.h.index())], pr))) {
      return fail("generator " + std::to_string(i + 1) + " is off the cocycle");
    }
  }
  return true;
}

bool recheck_generation_witness(std::int64_t p, std::int64_t q, std::int64_t r, const GenerationWitness& w,
                                std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const auto gd = standard_generators(p, q, r);
  const auto& G = *gd.group;
  const auto point = dihedral::generated_subgroup({gd.sigma[0].h, gd.sigma[1].h, gd.sigma[2].h});
  if (point.order() != 2 * G.n()) return fail("point parts do not generate D_n");
  std::vector<Vec> rows;
  for (const auto& c : w.translations) {
    if (!c.target.h.is_identity()) return fail("certificate '" + c.name + "' is not a translation");
    if (!certificate_holds(gd, c)) return fail("certificate '" + c.name + "' does not evaluate to its target");
    rows.push_back(c.target.v);
  }
  const auto inv = span_invariants(rows, G.dim());
  if (inv != w.invariant_factors) return fail("recorded invariant factors differ from the recomputed ones");
  for (const auto& f : inv) {
    if (f != 1) return fail("translations span a proper sublattice");
  }
  return true;
}

}  // namespace dihedra::lattice
