#pragma once

// The affine group Lambda x| D_n, Lambda = Z^phi(n) with D_n acting through
// the faithful rational representation: element algebra, the order law,
// the three standard generators attached to a triple, word certificates,
// and a generation verifier with checkable witnesses.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dihedra/arith.hpp"
#include "dihedra/dihedral.hpp"
#include "dihedra/repr.hpp"
#include "dihedra/triples.hpp"

namespace dihedra::lattice {

using arith::BigInt;
using arith::IntMatrix;
using dihedral::DihedralElement;
using Vec = std::vector<BigInt>;

struct AffineElement {
  std::int64_t n = 3;
  Vec v;  // translation, length phi(n)
  DihedralElement h;
  bool operator==(const AffineElement&) const = default;
};

class AffineGroup {
 public:
  explicit AffineGroup(std::int64_t n);  // n >= 3

  std::int64_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rep_.degree; }
  const repr::RepMatrixPair& rep() const noexcept { return rep_; }

  /// M(h); cached.
  const IntMatrix& action(const DihedralElement& h) const;
  /// sum_{j < order(h)} M(h)^j; cached.
  const IntMatrix& norm(const DihedralElement& h) const;

  AffineElement identity() const;
  /// Validates n and the vector length.
  AffineElement make(Vec v, const DihedralElement& h) const;
  AffineElement translation(Vec v) const;
  AffineElement point(const DihedralElement& h) const;

  AffineElement mul(const AffineElement& a, const AffineElement& b) const;
  AffineElement inv(const AffineElement& a) const;
  AffineElement pow(const AffineElement& a, std::int64_t e) const;
  /// order(h) if norm(h) v = 0, otherwise infinite (nullopt).
  std::optional<std::int64_t> order(const AffineElement& a) const;

  /// Coordinates of x^i mod Phi_n.
  Vec monomial(std::int64_t i) const;

 private:
  void check(const AffineElement& a) const;

  std::int64_t n_;
  repr::RepMatrixPair rep_;
  mutable std::mutex mu_;
  mutable std::map<std::int64_t, std::unique_ptr<IntMatrix>> action_cache_;
  mutable std::map<std::int64_t, std::unique_ptr<IntMatrix>> norm_cache_;
};

/// Shared instance per n.
std::shared_ptr<const AffineGroup> affine_group(std::int64_t n);

std::string to_string(const AffineElement& a);
bool is_zero(const Vec& v);

// ---------------------------------------------------------------------------
// Generators and words.

enum class Token { S1, S2, S3, S1Inv, S2Inv, S3Inv };
using Word = std::vector<Token>;

std::string word_to_string(const Word& w);
/// Parses "s1 s2 s3^-1"; throws InvalidArgument on unknown tokens.
Word parse_word(std::string_view text);

struct GeneratorData {
  triples::Triple input;
  triples::Triple labeled;             // (p, q, r)
  std::array<std::size_t, 3> origin{}; // labeled[i] = input[origin[i]]
  triples::TripleDecomposition decomposition;  // b = (p1, q1, r1), w = d
  triples::DSolution solution;         // for the labeled triple
  std::int64_t k1 = 0, k2 = 0, k3 = 0; // -c1, c2, -c3
  std::int64_t u = 0;                  // -p1 c1 mod n
  std::int64_t v = 0;                  // q1 c2 mod n
  std::string seed_rule;               // "involution" or "literal"
  std::int64_t seed_exponent = -1;     // i with 2i = -v mod n, or -1
  Vec e;
  std::array<AffineElement, 3> sigma;
  std::array<std::optional<std::int64_t>, 3> product_orders;  // s1 s2, s1 s3, s2 s3
  std::shared_ptr<const AffineGroup> group;

  bool sigma_is_involution(std::size_t i) const;
};

/// Requires condition C. The input is relabeled so that, for even n, the
/// middle entry is the one with 2-adic valuation below v2(n).
GeneratorData standard_generators(std::int64_t p, std::int64_t q, std::int64_t r);

AffineElement evaluate_word(const GeneratorData& gd, const Word& word);
Word inverse_word(const GeneratorData& gd, const Word& word);

struct WordCertificate {
  std::string name;
  AffineElement target;
  Word word;
};

bool certificate_holds(const GeneratorData& gd, const WordCertificate& c);

/// The membership chain for the standard generators. Throws
/// DegenerateLabeling when q1 < 2 or r1 < 2.
std::vector<WordCertificate> generation_witnesses(const GeneratorData& gd);

// ---------------------------------------------------------------------------
// Verification.

enum class Verdict { Generated, Obstructed, Inconclusive };
std::string verdict_name(Verdict v);

/// Proof that a generated group misses translations: a proper D_n-invariant
/// subspace W of (Z/prime)^phi and a cocycle c on D_n with values in V/W
/// such that every generator (t, h) has t = c(h) mod W. The image of the
/// generated group in (V/W) x| D_n then has no nonzero translations.
struct QuotientWitness {
  std::int64_t prime = 0;
  std::vector<std::vector<std::int64_t>> subspace;  // reduced row echelon basis of W mod prime
  std::vector<std::vector<std::int64_t>> cocycle;   // c(h) for h of dense index 0..2n-1, entries mod prime
};

/// Proof that the generated group contains every translation: words with
/// translation targets whose span is Lambda.
struct GenerationWitness {
  std::vector<WordCertificate> translations;
  std::vector<BigInt> invariant_factors;  // of the span; all ones
};

struct PrimeCheck {
  std::int64_t prime = 0;
  std::size_t submodule_dim = 0;
  bool full = false;
};

struct VerificationReport {
  Verdict verdict = Verdict::Inconclusive;
  GeneratorData generators;
  bool point_group_surjects = false;
  std::int64_t point_group_order = 0;
  std::size_t translation_generators = 0;  // size of the collected generating set of T0
  std::vector<BigInt> invariant_factors;   // of T0 inside Lambda
  std::optional<BigInt> index;             // [Lambda : T0], nullopt if infinite
  std::vector<PrimeCheck> prime_checks;
  std::optional<QuotientWitness> obstruction;
  std::optional<GenerationWitness> generation;
  std::vector<WordCertificate> certificates;  // chain certificates when the labeling allows
  std::vector<std::string> diagnostics;
};

/// Requires condition C.
VerificationReport verify_generation(std::int64_t p, std::int64_t q, std::int64_t r);

/// Independent re-checks, regenerating the generators from (p, q, r).
bool recheck_quotient_witness(std::int64_t p, std::int64_t q, std::int64_t r, const QuotientWitness& w,
                              std::string* why = nullptr);
bool recheck_generation_witness(std::int64_t p, std::int64_t q, std::int64_t r, const GenerationWitness& w,
                                std::string* why = nullptr);

}  // namespace dihedra::lattice
