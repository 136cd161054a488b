#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "eo/gf.hpp"
#include "eo/poly.hpp"

namespace eo {

/// A model failed one of its validity predicates; what() names the predicate.
class InvalidModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The hyperelliptic polynomial does not split over the model's field.
class NotSplit : public std::invalid_argument {
 public:
  NotSplit(const std::string& what, unsigned needed_degree)
      : std::invalid_argument(what), needed_degree_(needed_degree) {}
  /// Extension degree over the model's field needed to split f.
  unsigned needed_degree() const { return needed_degree_; }

 private:
  unsigned needed_degree_;
};

/// y^2 = f(x), f monic of odd degree 2g + 1 and squarefree, p odd.
struct HyperellipticModel {
  FieldPtr field;
  Poly f;

  static HyperellipticModel make(FieldPtr field, Poly f);
  int genus() const { return (f.degree() - 1) / 2; }
  /// deg f = 9, f(0) = 0 and the coefficients of x and x^9 equal 1.
  bool normal_form() const;
};

/// y^m = prod_{i < N} (x - xi_i)^{a_i}, with a_N the monodromy over infinity.
struct CyclicCoverModel {
  FieldPtr field;
  int m = 0;
  std::vector<int> a;
  std::vector<Elem> xi;
  Poly f;

  static CyclicCoverModel make(FieldPtr field, int m, std::vector<int> a, std::vector<Elem> xi);
  int branch_count() const { return static_cast<int>(a.size()); }
  int genus() const;
  /// d_n for n = 1..m-1 (index 0 holds d_1).
  std::vector<int> eigenspace_dims() const;
  /// floor(n a_i / m).
  int b(std::size_t i, int n) const { return n * a[i] / m; }
};

using CurveModel = std::variant<HyperellipticModel, CyclicCoverModel>;

const FieldPtr& field_of(const CurveModel& model);
int genus(const CurveModel& model);

/// u(x) y^{-n} dx.
struct DifferentialForm {
  int n = 0;
  LaurentPoly u;
  friend bool operator==(const DifferentialForm&, const DifferentialForm&) = default;
};

/// One holomorphic basis form x^l s(x) y^{-n} dx, with the cofactor t(x) used
/// by the matching H^1(O) class.
struct BasisSlot {
  int n = 0;
  int l = 0;
  Poly s;
  Poly t;
};

/// The superelliptic data y^m = f shared by both model kinds, with the
/// holomorphic basis in contract order: hyperelliptic x^i dx / y by i, cyclic
/// by (n, l) ascending.
struct CurveData {
  FieldPtr field;
  int m = 0;
  Poly f;
  int genus = 0;
  bool branch_at_zero = false;
  std::vector<BasisSlot> slots;
  /// Indexed by n in [0, m): s_n, d_n and the index of (n, 0) in slots.
  std::vector<Poly> s_by_n;
  std::vector<int> d_by_n;
  std::vector<std::size_t> first_slot_by_n;
};

CurveData curve_data(const CurveModel& model);
std::vector<DifferentialForm> holomorphic_basis(const CurveModel& model);

/// Valuation of x^l s_n(x) y^{-n} dx at the branch point P_i; i = N - 1 is the
/// point over infinity. Holomorphic forms have all orders >= 0.
int form_order(const CyclicCoverModel& model, std::size_t i, int n, int l);

/// Re-expresses a split hyperelliptic curve as a cyclic cover with m = 2 and
/// branch points its roots (0 first). Throws NotSplit or InvalidModel.
CyclicCoverModel hyper_to_cyclic(const HyperellipticModel& model);

}  // namespace eo
