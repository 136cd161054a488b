#include "eo/derham.hpp"

#include "eo/errors.hpp"

namespace eo {

namespace {

std::string holomorphic_label(const CurveData& c, const BasisSlot& s) {
  if (c.m == 2 && c.s_by_n[1].degree() == 0) return "lambda_" + std::to_string(s.l);
  return "alpha_{" + std::to_string(s.n) + "," + std::to_string(s.l) + "}";
}

std::string dual_label(const CurveData& c, const BasisSlot& s) {
  if (c.m == 2 && c.s_by_n[1].degree() == 0) return "gamma_" + std::to_string(s.l + 1);
  return "beta_{" + std::to_string(s.n) + "," + std::to_string(s.l) + "}";
}

}  // namespace

Poly differential_numerator(const CurveData& curve, int n, int l, const Poly& s) {
  const Field& F = *curve.field;
  const Poly x{F.zero(), F.one()};
  const Poly fp = derivative(F, curve.f);
  const Poly sp = derivative(F, s);
  const Poly first = scale(F, mul(F, mul(F, x, s), fp), F.from_int(n));
  const Poly inner = add(F, scale(F, s, F.from_int(l + 1)), mul(F, x, sp));
  const Poly second = scale(F, mul(F, inner, curve.f), F.from_int(curve.m));
  return sub(F, first, second);
}

DeRhamBasis build_basis(const CurveModel& model) {
  DeRhamBasis basis{curve_data(model), {}};
  const CurveData& c = basis.curve;
  const Field& F = *c.field;
  if (!c.branch_at_zero) throw InvalidModel("de Rham basis needs a branch point at x = 0 (x | f)");

  for (const auto& slot : c.slots) {
    const DifferentialForm w{slot.n, LaurentPoly(shift(slot.s, static_cast<std::size_t>(slot.l)), 0)};
    basis.classes.push_back({holomorphic_label(c, slot), true, slot.n, slot.l, w, w});
  }

  const Elem inv_m = F.inv(F.from_int(c.m));
  for (const auto& slot : c.slots) {
    const Poly numer = differential_numerator(c, slot.n, slot.l, slot.s);
    const auto h = exact_div(F, numer, mul(F, mul(F, slot.s, slot.s), slot.t));
    if (!h) throw InvariantViolation("d(f_{n,l}) numerator not divisible by s^2 t");
    // psi: monomials of degree <= l + 1, phi: the rest.
    std::vector<Elem> low = h->coeffs(), high = h->coeffs();
    const auto split = static_cast<std::size_t>(slot.l + 2);
    for (std::size_t e = 0; e < low.size(); ++e) (e < split ? high : low)[e] = Elem{};
    const Poly psi(std::move(low)), phi(std::move(high));
    const Poly t_over_m = scale(F, slot.t, inv_m);
    const int n_form = c.m - slot.n;
    const int pole = -(slot.l + 2);
    DifferentialForm u1{n_form, LaurentPoly(mul(F, psi, t_over_m), pole)};
    DifferentialForm u2{n_form, LaurentPoly(neg(F, mul(F, phi, t_over_m)), pole)};
    basis.classes.push_back({dual_label(c, slot), false, slot.n, slot.l, std::move(u1), std::move(u2)});
  }
  return basis;
}

Matrix verschiebung(const DeRhamBasis& basis) {
  const CurveData& c = basis.curve;
  const std::size_t g = static_cast<std::size_t>(c.genus);
  Matrix v(2 * g, 2 * g);
  for (std::size_t col = 0; col < 2 * g; ++col) {
    const auto& cls = basis.classes[col];
    const DifferentialForm image = cartier_form(c, cls.u1);
    if (!cls.holomorphic) {
      const DifferentialForm other = cartier_form(c, cls.u2);
      if (!(image == other))
        throw InvariantViolation("Cartier images of the U1 and U2 representatives of " + cls.label + " differ");
    }
    const auto coords = holomorphic_coordinates(c, image);
    for (std::size_t r = 0; r < g; ++r) v.at(r, col) = coords[r];
  }
  return v;
}

Matrix pairing_matrix(const DeRhamBasis& basis) {
  const Field& F = *basis.curve.field;
  const std::size_t g = static_cast<std::size_t>(basis.genus());
  Matrix pm(2 * g, 2 * g);
  for (std::size_t k = 0; k < g; ++k) {
    pm.at(g + k, k) = F.one();
    pm.at(k, g + k) = F.neg(F.one());
  }
  return pm;
}

}  // namespace eo
