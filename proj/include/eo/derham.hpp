#pragma once

#include <string>
#include <vector>

#include "eo/cartier.hpp"
#include "eo/curve.hpp"
#include "eo/matrix.hpp"

namespace eo {

/// One class of H^1_dR for the cover {U1 = X - pi^{-1}(0), U2 = X - pi^{-1}(inf)},
/// represented by a Cech triple (function, U1 form, U2 form).
///
/// Holomorphic classes are (0, omega, omega). The H^1(O) class paired with
/// omega_{n,l} uses the function y^n / (x^{l+1} s_n(x)); its differential
/// t(x) h(x) / (m x^{l+2}) y^{-(m-n)} dx is split into the U1 part (monomials of
/// h of degree <= l + 1) and the U2 part (the rest, negated).
struct DeRhamClass {
  std::string label;
  bool holomorphic = true;
  int n = 0;
  int l = 0;
  DifferentialForm u1;
  DifferentialForm u2;
};

struct DeRhamBasis {
  CurveData curve;
  /// 2g classes: holomorphic part in holomorphic-basis order, then the paired
  /// H^1(O) classes in the same order.
  std::vector<DeRhamClass> classes;
  int genus() const { return curve.genus; }
};

/// Throws InvalidModel when x does not divide f.
DeRhamBasis build_basis(const CurveModel& model);

/// The numerator n x s f' - m ((l+1) s + x s') f of d(y^n / (x^{l+1} s)),
/// written over m x^{l+2} s^2 y^{m-n}.
Poly differential_numerator(const CurveData& curve, int n, int l, const Poly& s);

/// 2g x 2g matrix of V: column c holds the coordinates of V(class c), so that
/// V(sum c_i e_i) = sum c_i^{1/p} column_i. Only the holomorphic rows are
/// ever nonzero. Throws InvariantViolation when the U1 and U2 images differ or
/// leave the holomorphic span.
Matrix verschiebung(const DeRhamBasis& basis);

/// Alternating pairing normalized to <beta_k, alpha_k> = 1 = -<alpha_k, beta_k>.
/// The holomorphic block is zero; the H^1(O) x H^1(O) block is never read by
/// the filtration code and is left zero.
Matrix pairing_matrix(const DeRhamBasis& basis);

}  // namespace eo
