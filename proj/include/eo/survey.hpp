#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eo/curve.hpp"
#include "eo/eotype.hpp"

namespace eo {

namespace skip {
inline constexpr const char* kSingular = "disc=0";
inline constexpr const char* kRepeatedBranch = "repeated branch point";
inline constexpr const char* kPrimeFieldXi = "xi in prime field";
inline constexpr const char* kNotPrimitive8 = "xi not a primitive 8th root of unity";
}  // namespace skip

/// A generated curve, or the reason the tuple was skipped.
struct Candidate {
  std::optional<CurveModel> model;
  std::string skip;
};

struct Family {
  std::string id;
  std::string description;
  unsigned arity = 0;
  std::function<Candidate(const FieldPtr&, std::span<const Elem>)> generate;
};

/// H4GEN, H4A2, H4E8, H4E10, C512, C512S, KUDO.
const std::vector<Family>& builtin_families();
/// Throws std::invalid_argument for an unknown id.
const Family& find_family(const std::string& id);

/// Hyperelliptic f with coefficients of x and x^9 set to 1 and the rest taken
/// from `coeffs` (index = degree).
Poly genus4_normal_form(const Field& F, const std::vector<Elem>& coeffs);

/// What the survey records per curve.
struct Observation {
  int genus = 0;
  int a_number = 0;
  int p_rank = 0;
  EOType eo_type;
  /// The de Rham filtration was needed because (a, p-rank) did not pin mu.
  bool full = false;
};

/// Cartier-Manin rank and p-rank first; the full classification only when
/// they leave mu open.
Observation observe(const CurveModel& model);

struct ScanMode {
  bool exact = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  static ScanMode exhaustive() { return {}; }
  static ScanMode sampled(std::uint64_t n, std::uint64_t seed) { return {false, n, seed}; }
};

/// Exact scans refuse parameter spaces larger than this.
constexpr std::uint64_t kMaxExactSpace = std::uint64_t{1} << 33;

class SpaceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// q^arity, saturating at UINT64_MAX.
std::uint64_t parameter_space_size(const Field& F, unsigned arity);
/// Tuple number `index` in the base-q digit order (coordinate 0 fastest).
std::vector<Elem> exact_tuple(const Field& F, unsigned arity, std::uint64_t index);
/// Sample `index` of the stream with `seed`; independent of every other index.
std::vector<Elem> sample_tuple(const Field& F, unsigned arity, std::uint64_t seed, std::uint64_t index);

/// EO_THREADS if set and positive, else the hardware concurrency.
unsigned worker_count();

struct Tally {
  std::string family;
  std::uint32_t p = 0;
  unsigned k = 0;
  std::vector<std::uint32_t> modulus;
  bool exact = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  /// Genus of the family's curves (0 until one curve was classified).
  int genus = 0;
  /// Size of the parameter space the tally stands for (q^arity).
  double space_size = 0;
  std::uint64_t total = 0;
  std::uint64_t full_classifications = 0;
  std::map<EOType, std::uint64_t> strata;
  std::map<std::pair<int, int>, std::uint64_t> marginals;
  std::map<std::string, std::uint64_t> skips;

  void merge(const Tally& other);
  std::uint64_t count(const EOType& t) const;
  std::uint64_t skipped() const;
  std::uint64_t classified() const;
};

enum class ClaimKind {
  PropertyImpliesEquation,
  EquationImpliesProperty,
  Equivalent,
};

/// A statement relating a polynomial condition on the parameters to a
/// property of the classified curve, evaluated on every unskipped tuple in
/// its domain.
struct LocusClaim {
  std::string name;
  ClaimKind kind = ClaimKind::PropertyImpliesEquation;
  std::function<bool(const Field&, std::span<const Elem>)> domain;
  std::function<bool(const Field&, std::span<const Elem>)> equation;
  std::function<bool(const Observation&)> property;
};

struct ClaimResult {
  std::string name;
  ClaimKind kind = ClaimKind::PropertyImpliesEquation;
  /// table[equation holds][property holds].
  std::uint64_t table[2][2] = {{0, 0}, {0, 0}};
  bool passed() const;
  std::uint64_t exceptions() const;
};

struct ScanReport {
  Tally tally;
  std::vector<ClaimResult> claims;
};

ScanReport scan(const Family& family, const FieldPtr& field, const ScanMode& mode,
                const std::vector<LocusClaim>& claims = {});

/// The locus equations attached to a family (empty when it has none).
std::vector<LocusClaim> locus_claims(const std::string& family_id);

struct DimensionRow {
  EOType type;
  int expected = 0;
  std::uint64_t count = 0;
  /// log_q of the (scaled, for samples) count; NaN when count is 0.
  double estimate = 0;
  bool checked = false;
  bool within = false;
};

/// Per-stratum log_q estimates against 7 - sum(mu); strata of expected
/// dimension >= min_dim are checked at the given tolerance.
std::vector<DimensionRow> dimension_estimate(const Tally& tally, double tolerance = 0.75, int min_dim = 3);

struct SuiteRow {
  std::string family;
  std::uint32_t p = 0;
  std::string claim;
  std::uint64_t checked = 0;
  std::uint64_t matched = 0;
  bool passed = false;
  std::string detail;
};

/// Typed conclusions for the m = 5 families and the m = 3 superspecial
/// curve, classified over F_{p^2}.
std::vector<SuiteRow> cyclic_suite();

/// x (x - xi)(x - xi^3)(x - xi^5)(x - xi^7) for a primitive 8th root xi.
Poly kudo_product(const Field& F, Elem xi);

}  // namespace eo
