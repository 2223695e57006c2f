#include "dihedra/serialize.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <thread>

#include "dihedra/errors.hpp"

namespace dihedra::serialize {

json big(const arith::BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

json big_vector(const std::vector<arith::BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(big(x));
  return out;
}

json matrix(const arith::IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(big_vector(m.row(i)));
  return out;
}

json triple(const triples::Triple& t) { return json::array({t.a1, t.a2, t.a3}); }

json solution(const triples::DSolution& s) { return json::array({s.c1, s.c2, s.c3}); }

namespace {

json prime_set(const std::set<std::int64_t>& s) { return json(std::vector<std::int64_t>(s.begin(), s.end())); }

}  // namespace

json decomposition(const triples::TripleDecomposition& d) {
  json out;
  out["n"] = d.n;
  out["w"] = d.w;
  out["b"] = json::array({d.b[0], d.b[1], d.b[2]});
  out["P0"] = prime_set(d.P0);
  out["P1"] = prime_set(d.P1);
  out["Q"] = prime_set(d.Q);
  out["Q_i"] = json::array({prime_set(d.Qi[0]), prime_set(d.Qi[1]), prime_set(d.Qi[2])});
  return out;
}

json sieve(const triples::SieveState& s) {
  json out;
  out["c1"] = s.c1;
  out["x0"] = s.x0;
  out["y0"] = s.y0;
  out["modulus"] = s.modulus;
  json bad = json::array();
  for (const auto& c : s.bad) {
    bad.push_back({{"variable", std::string(1, c.variable)}, {"prime", c.prime}, {"residue", c.residue}});
  }
  out["excluded"] = std::move(bad);
  out["excluded_count"] = triples::sieve_T_size(s);
  return out;
}

json element(const dihedral::DihedralElement& x) {
  return {{"k", x.k()}, {"refl", x.refl()}, {"text", x.to_string()}};
}

json affine(const lattice::AffineElement& a) { return {{"v", big_vector(a.v)}, {"h", element(a.h)}}; }

json cyclo_number(const cyclo::CycloNumber& c) {
  return {{"level", c.level()}, {"coeffs", c.coeffs()}, {"text", c.to_string()}};
}

json certificate(const lattice::GeneratorData& gd, const lattice::WordCertificate& c) {
  return {{"name", c.name},
          {"target", affine(c.target)},
          {"word", lattice::word_to_string(c.word)},
          {"length", c.word.size()},
          {"holds", lattice::certificate_holds(gd, c)}};
}

json generators(const lattice::GeneratorData& gd) {
  json out;
  out["input"] = triple(gd.input);
  out["labeled"] = triple(gd.labeled);
  out["labeling"] = json::array({gd.origin[0], gd.origin[1], gd.origin[2]});
  out["n"] = gd.decomposition.n;
  out["p1_q1_r1_d"] = json::array({gd.decomposition.b[0], gd.decomposition.b[1], gd.decomposition.b[2], gd.decomposition.w});
  out["solution"] = solution(gd.solution);
  out["k"] = json::array({gd.k1, gd.k2, gd.k3});
  out["u"] = gd.u;
  out["v"] = gd.v;
  out["seed_rule"] = gd.seed_rule;
  out["seed_exponent"] = gd.seed_exponent >= 0 ? json(gd.seed_exponent) : json(nullptr);
  out["e"] = big_vector(gd.e);
  json sig = json::array();
  for (const auto& s : gd.sigma) sig.push_back(affine(s));
  out["sigma"] = std::move(sig);
  json orders = json::array();
  for (const auto& o : gd.product_orders) orders.push_back(o ? json(*o) : json("infinite"));
  out["product_orders"] = std::move(orders);
  return out;
}

json classify_record(const triples::Triple& t) {
  const auto c = triples::check_condition_C(t);
  const auto r = triples::solve_condition_D(t);
  json out;
  out["triple"] = triple(t);
  out["C1"] = c.c1;
  out["C2"] = c.c2;
  out["C"] = c.holds();
  out["D"] = r.solution.has_value();
  out["solution"] = r.solution ? solution(*r.solution) : json(nullptr);
  if (r.solution) out["rho"] = r.rho;
  if (r.sieve) out["sieve"] = sieve(*r.sieve);
  if (c.c1) out["decomposition"] = decomposition(triples::decompose(t));
  if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
  return out;
}

json count_record(const triples::Triple& t, bool with_oracle) {
  const auto c = triples::count_reduced(t);
  json out;
  out["triple"] = triple(t);
  out["count_formula"] = c.proof_body;
  out["count_simplified"] = c.simplified;
  out["simplified_agrees"] = c.agree();
  if (with_oracle) {
    const auto sols = triples::enumerate_reduced(t);
    out["count_oracle"] = sols.size();
    out["oracle_agrees"] = static_cast<std::int64_t>(sols.size()) == c.proof_body;
    json list = json::array();
    for (const auto& s : sols) list.push_back(solution(s));
    out["solutions"] = std::move(list);
  }
  return out;
}

json snf_record(const triples::Triple& t) {
  const auto [d, n] = arith::h_double_prime_structure(t.a1, t.a2, t.a3);
  json out;
  out["triple"] = triple(t);
  out["relations"] = json::array({json::array({t.a1, 0}), json::array({0, t.a2}), json::array({t.a3, t.a3})});
  out["invariant_factors"] = json::array({big(d), big(n)});
  out["gcd"] = arith::gcd(t.a1, t.a2, t.a3);
  out["lcm"] = arith::lcm(t.a1, t.a2, t.a3);
  return out;
}

json involutions_record(const triples::Triple& t) {
  const auto it = dihedral::involution_triple(t);
  json out;
  out["triple"] = triple(t);
  out["n"] = it.n;
  out["solution"] = solution(it.solution);
  out["adjusted"] = solution(it.adjusted);
  json elems = json::array();
  bool non_central = true;
  for (const auto& s : it.s) {
    elems.push_back(element(s));
    non_central = non_central && s.order() == 2 && !s.is_central();
  }
  out["involutions"] = std::move(elems);
  out["non_central_involutions"] = non_central;
  out["product_orders"] = {{"s1s2", it.product_orders[0]}, {"s1s3", it.product_orders[1]}, {"s2s3", it.product_orders[2]}};
  out["expected_orders"] = {{"s1s2", t.a2}, {"s1s3", t.a3}, {"s2s3", t.a1}};
  out["rotations_generate"] = it.rotations_generate;
  return out;
}

json repr_record(std::int64_t n, bool inventory) {
  const auto rep = repr::build_faithful_rep(n);
  const auto id = arith::IntMatrix::identity(rep.degree);
  json out;
  out["n"] = n;
  out["degree"] = rep.degree;
  out["G"] = matrix(rep.G);
  out["S"] = matrix(rep.S);
  std::int64_t minimal = 0;
  auto power = rep.G;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (power == id) {
      minimal = k;
      break;
    }
    power = power * rep.G;
  }
  const auto g_inv = arith::matrix_power(rep.G, static_cast<std::uint64_t>(n - 1));
  const auto phi = arith::cyclotomic_poly(n).coeffs;
  out["checks"] = {{"order_of_G", minimal},
                   {"S_squared_is_identity", (rep.S * rep.S) == id},
                   {"SGS_is_G_inverse", (rep.S * rep.G * rep.S) == g_inv},
                   {"charpoly_is_Phi_n", arith::characteristic_polynomial(rep.G) == std::vector<arith::BigInt>(phi.begin(), phi.end())},
                   {"det_G", big(arith::determinant(rep.G))},
                   {"det_S", big(arith::determinant(rep.S))},
                   {"trace_G", big(arith::trace(rep.G))},
                   {"moebius_n", arith::moebius(n)}};
  if (inventory) {
    const auto inv = repr::rational_inventory(n);
    json entries = json::array();
    for (const auto& e : inv.entries) {
      entries.push_back({{"label", e.label},
                         {"degree", e.rep.degree},
                         {"kernel", e.kernel},
                         {"kernel_order", repr::kernel_elements(e.rep).size()},
                         {"G", matrix(e.rep.G)},
                         {"S", matrix(e.rep.S)}});
    }
    out["inventory"] = std::move(entries);
    out["inventory_count"] = inv.entries.size();
    out["cyclic_subgroup_classes"] = dihedral::cyclic_subgroup_class_count(n);
  }
  return out;
}

json identity_record(const cyclo::RationalAngle& a, const cyclo::RationalAngle& b, const cyclo::RationalAngle& c) {
  const bool sum = cyclo::angle_sum_condition(a, b, c);
  const bool prod = cyclo::product_condition(a, b, c);
  const auto locus = cyclo::discriminant_locus(a, b, c);
  json out;
  out["angles"] = json::array({a.to_string(), b.to_string(), c.to_string()});
  out["values"] = json::array({cyclo_number(cyclo::cos_square_value(a)), cyclo_number(cyclo::cos_square_value(b)),
                               cyclo_number(cyclo::cos_square_value(c))});
  out["angle_sum_condition"] = sum;
  out["product_condition"] = prod;
  out["agree"] = sum == prod;
  out["discriminant"] = cyclo_number(locus.discriminant);
  out["discriminant_vanishes"] = locus.vanishes;
  out["common_value"] = cyclo_number(locus.common_value);
  return out;
}

json witnesses_record(std::int64_t p, std::int64_t q, std::int64_t r) {
  const auto gd = lattice::standard_generators(p, q, r);
  const auto certs = lattice::generation_witnesses(gd);
  json out;
  out["generators"] = generators(gd);
  json list = json::array();
  bool all = true;
  for (const auto& c : certs) {
    list.push_back(certificate(gd, c));
    all = all && list.back()["holds"].get<bool>();
  }
  out["certificates"] = std::move(list);
  out["all_hold"] = all;
  return out;
}

json verify_record(std::int64_t p, std::int64_t q, std::int64_t r) {
  const auto rep = lattice::verify_generation(p, q, r);
  const auto& gd = rep.generators;
  json out;
  out["input"] = json::array({p, q, r});
  out["verdict"] = lattice::verdict_name(rep.verdict);
  out["generators"] = generators(gd);
  out["point_group_order"] = rep.point_group_order;
  out["point_group_surjects"] = rep.point_group_surjects;
  out["translation_generators"] = rep.translation_generators;
  out["invariant_factors"] = big_vector(rep.invariant_factors);
  out["index"] = rep.index ? big(*rep.index) : json("infinite");
  json checks = json::array();
  for (const auto& c : rep.prime_checks) {
    checks.push_back({{"prime", c.prime}, {"submodule_dim", c.submodule_dim}, {"full", c.full}});
  }
  out["prime_checks"] = std::move(checks);
  if (rep.obstruction) {
    const auto& w = *rep.obstruction;
    out["obstruction"] = {{"prime", w.prime},
                          {"subspace", w.subspace},
                          {"cocycle", w.cocycle},
                          {"rechecked", lattice::recheck_quotient_witness(p, q, r, w)}};
  } else {
    out["obstruction"] = nullptr;
  }
  if (rep.generation) {
    const auto& w = *rep.generation;
    json list = json::array();
    for (const auto& c : w.translations) {
      list.push_back({{"target", big_vector(c.target.v)}, {"word", lattice::word_to_string(c.word)}});
    }
    out["generation"] = {{"translations", std::move(list)},
                         {"invariant_factors", big_vector(w.invariant_factors)},
                         {"rechecked", lattice::recheck_generation_witness(p, q, r, w)}};
  } else {
    out["generation"] = nullptr;
  }
  json certs = json::array();
  for (const auto& c : rep.certificates) certs.push_back(certificate(gd, c));
  out["certificates"] = std::move(certs);
  out["diagnostics"] = rep.diagnostics;
  return out;
}

json order_record(std::int64_t n, std::int64_t k, bool refl, const std::vector<arith::BigInt>& v) {
  const auto G = lattice::affine_group(n);
  lattice::Vec vec = v;
  if (vec.empty()) {
    vec.assign(G->dim(), 0);
    vec[0] = 1;
  }
  const auto x = G->make(vec, dihedral::DihedralElement(n, k, refl));
  const auto ord = G->order(x);
  json out;
  out["n"] = n;
  out["element"] = affine(x);
  out["point_order"] = x.h.order();
  out["norm_image"] = big_vector(G->norm(x.h) * x.v);
  out["order"] = ord ? json(*ord) : json("infinite");
  return out;
}

// ---------------------------------------------------------------------------

AuditRecord audit_triple(const triples::Triple& t) {
  AuditRecord a;
  const auto c = triples::check_condition_C(t);
  const auto r = triples::solve_condition_D(t);
  const std::int64_t oracle = triples::count_reduced_bruteforce(t);
  auto flag = [&](const char* kind, const std::string& details) {
    a.flags.push_back({{"input", triple(t)}, {"kind", kind}, {"details", details}});
  };
  json rec;
  rec["triple"] = triple(t);
  rec["C1"] = c.c1;
  rec["C2"] = c.c2;
  rec["C"] = c.holds();
  rec["D"] = r.solution.has_value();
  rec["solution"] = r.solution ? solution(*r.solution) : json(nullptr);
  rec["count_oracle"] = oracle;
  if (c.holds() != r.solution.has_value() || c.holds() != (oracle > 0)) {
    flag("equivalence_mismatch", "C=" + std::to_string(c.holds()) + " D=" + std::to_string(r.solution.has_value()) +
                                     " oracle=" + std::to_string(oracle));
  }
  if (c.holds()) {
    const auto cr = triples::count_reduced(t);
    rec["count_formula"] = cr.proof_body;
    rec["count_simplified"] = cr.simplified;
    if (cr.proof_body != oracle) {
      flag("count_mismatch", "formula=" + std::to_string(cr.proof_body) + " oracle=" + std::to_string(oracle));
    }
    if (cr.simplified != oracle) {
      flag("simplified_formula_mismatch",
           "simplified=" + std::to_string(cr.simplified) + " oracle=" + std::to_string(oracle));
    }
  } else {
    rec["count_formula"] = nullptr;
    rec["count_simplified"] = nullptr;
  }
  rec["discrepancy_flags"] = a.flags;
  a.record = std::move(rec);
  return a;
}

SweepSummary sweep(const std::vector<triples::Triple>& input, unsigned jobs) {
  SweepSummary s;
  s.records.resize(input.size());
  std::atomic<std::size_t> next{0};
  constexpr std::size_t kChunk = 256;
  auto worker = [&] {
    for (;;) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= input.size()) return;
      const std::size_t end = std::min(input.size(), begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) s.records[i] = audit_triple(input[i]);
    }
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(input.size() / kChunk + 1)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& r : s.records) {
    ++s.triples;
    if (r.record["C"].get<bool>()) ++s.condition_c;
    for (const auto& f : r.flags) {
      const auto kind = f["kind"].get<std::string>();
      if (kind == "equivalence_mismatch") ++s.equivalence_mismatches;
      else if (kind == "count_mismatch") ++s.count_mismatches;
      else ++s.simplified_mismatches;
    }
  }
  return s;
}

std::vector<triples::Triple> box_triples(std::int64_t max_entry) {
  std::vector<triples::Triple> out;
  for (std::int64_t a = 2; a <= max_entry; ++a) {
    for (std::int64_t b = 2; b <= max_entry; ++b) {
      for (std::int64_t c = 2; c <= max_entry; ++c) out.push_back(triples::Triple::make(a, b, c));
    }
  }
  return out;
}

unsigned resolve_jobs(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  if (const char* env = std::getenv("DIHEDRA_JOBS")) {
    int v = 0;
    const std::string_view sv(env);
    const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec == std::errc() && ptr == sv.data() + sv.size() && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace dihedra::serialize
