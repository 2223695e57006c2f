#pragma once

// JSON records for every operation exposed by the CLI and the Python module.
// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
// strings.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dihedra/arith.hpp"
#include "dihedra/cyclo.hpp"
#include "dihedra/dihedral.hpp"
#include "dihedra/lattice.hpp"
#include "dihedra/repr.hpp"
#include "dihedra/triples.hpp"

namespace dihedra::serialize {

using json = nlohmann::ordered_json;

json big(const arith::BigInt& x);
json big_vector(const std::vector<arith::BigInt>& v);
json matrix(const arith::IntMatrix& m);
json triple(const triples::Triple& t);
json solution(const triples::DSolution& s);
json decomposition(const triples::TripleDecomposition& d);
json sieve(const triples::SieveState& s);
json element(const dihedral::DihedralElement& x);
json affine(const lattice::AffineElement& a);
json cyclo_number(const cyclo::CycloNumber& c);
json certificate(const lattice::GeneratorData& gd, const lattice::WordCertificate& c);
json generators(const lattice::GeneratorData& gd);

// Per-command records.
json classify_record(const triples::Triple& t);
json count_record(const triples::Triple& t, bool with_oracle);
json snf_record(const triples::Triple& t);
json involutions_record(const triples::Triple& t);
json repr_record(std::int64_t n, bool inventory);
json identity_record(const cyclo::RationalAngle& a, const cyclo::RationalAngle& b, const cyclo::RationalAngle& c);
json witnesses_record(std::int64_t p, std::int64_t q, std::int64_t r);
json verify_record(std::int64_t p, std::int64_t q, std::int64_t r);
json order_record(std::int64_t n, std::int64_t k, bool refl, const std::vector<arith::BigInt>& v);

struct AuditRecord {
  json record;
  json flags = json::array();  // {input, kind, details}
};

/// Equivalence and count audit of one triple: condition C, the sieve
/// solver, the brute-force enumeration, the closed-form count and the
/// simplified count.
AuditRecord audit_triple(const triples::Triple& t);

struct SweepSummary {
  std::vector<AuditRecord> records;  // input order
  std::int64_t triples = 0;
  std::int64_t condition_c = 0;
  std::int64_t equivalence_mismatches = 0;
  std::int64_t count_mismatches = 0;
  std::int64_t simplified_mismatches = 0;
  bool has_discrepancy() const noexcept {
    return equivalence_mismatches + count_mismatches + simplified_mismatches > 0;
  }
};

/// Audits every triple on `jobs` worker threads; results keep input order.
SweepSummary sweep(const std::vector<triples::Triple>& input, unsigned jobs);

/// All ordered triples with 2 <= a_i <= max_entry.
std::vector<triples::Triple> box_triples(std::int64_t max_entry);

/// Worker count: explicit value if positive, else DIHEDRA_JOBS, else hardware concurrency.
unsigned resolve_jobs(int requested);

}  // namespace dihedra::serialize
