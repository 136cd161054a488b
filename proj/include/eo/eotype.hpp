#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eo/curve.hpp"
#include "eo/matrix.hpp"

namespace eo {

/// Subspace of F^ambient kept as its RREF basis, so equal subspaces have
/// equal representations.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& F, const Matrix& spanning_rows);
  static Subspace zero(std::size_t ambient);
  static Subspace full(const Field& F, std::size_t ambient);
  /// span(e_0, ..., e_{count-1}).
  static Subspace leading(const Field& F, std::size_t count, std::size_t ambient);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  bool contains(const Field& F, const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(Matrix rref_basis) : basis_(std::move(rref_basis)) {}
  Matrix basis_;
};

/// perp() was asked for a subspace neither inside nor containing H^0, which
/// would need the unused H^1(O) x H^1(O) pairing block.
class UnsupportedSubspace : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// span{ V w^{(1/p)} : w in W }, the image under the p^{-1}-linear map with
/// matrix V.
Subspace v_image(const Field& F, const Matrix& v, const Subspace& w);
/// Orthogonal complement for a subspace comparable with H^0 = span of the
/// first g coordinates.
Subspace perp(const Field& F, const Matrix& pairing, const Subspace& w, std::size_t g);

/// Closure of {0, H^1_dR} under V and perp, sorted by dimension. Throws
/// InvariantViolation when the closure is not a chain or needs more than 8g
/// passes.
std::vector<Subspace> canonical_filtration(const Field& F, const Matrix& v, const Matrix& pairing, std::size_t g);

/// v : {0, ..., 2g} -> {0, ..., g}.
struct FinalType {
  int g = 0;
  std::vector<int> v;
  /// Checks v(0) = 0, v(2g) = g, unit steps and v(2g - i) = v(i) + g - i.
  bool valid() const;
  friend bool operator==(const FinalType&, const FinalType&) = default;
};

/// Strictly decreasing mu = [mu_1 > ... > mu_n > 0].
struct EOType {
  std::vector<int> mu;
  int a_number() const { return static_cast<int>(mu.size()); }
  int p_rank(int g) const { return mu.empty() ? g : g - mu.front(); }
  int codimension() const;
  bool valid(int g) const;
  std::string to_string() const;
  friend auto operator<=>(const EOType&, const EOType&) = default;
};

FinalType final_type(const Field& F, const std::vector<Subspace>& filtration, const Matrix& v);
/// #{j : mu_j > g - i} = i - v(i) for 0 <= i <= g.
EOType eo_from_final(const FinalType& ft);
FinalType final_from_eo(const EOType& eo, int g);
/// mu <= nu iff len(mu) <= len(nu) and mu_i <= nu_i componentwise.
bool eo_leq(const EOType& mu, const EOType& nu);
/// All 2^g types for genus g.
std::vector<EOType> all_eo_types(int g);

/// The type when a-number and p-rank already force it: a = 0, a = 1, or
/// mu_1 = g - f equal to a (forcing [a, a-1, ..., 1]).
std::optional<EOType> pinned_type(int g, int a, int p_rank);

struct Classification {
  int genus = 0;
  Matrix cm_matrix;
  int a_number = 0;
  int p_rank = 0;
  FinalType final_type;
  EOType eo_type;
  bool superspecial = false;
  /// g = 4 and v(2) = 0, a sufficient condition for supersingularity.
  bool meets_ss_criterion = false;
};

constexpr int kMaxClassifyGenus = 8;

/// Full classification through the de Rham machinery. Needs a branch point
/// at x = 0 and genus <= 8.
Classification classify(const CurveModel& model);

}  // namespace eo
