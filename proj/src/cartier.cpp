#include "eo/cartier.hpp"

#include <sstream>

#include "eo/errors.hpp"

namespace eo {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int positive_mod(int a, int b) {
  const int r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace

LaurentPoly cartier_poly(const Field& F, const LaurentPoly& u) {
  if (u.is_zero()) return {};
  const int p = static_cast<int>(F.p());
  // Exponents j with j + 1 = p (e + 1); first such j at or above u.low().
  int j = u.low() + positive_mod(-(u.low() + 1), p);
  if (j > u.high()) return {};
  const int e_low = floor_div(j + 1, p) - 1;
  std::vector<Elem> body;
  for (; j <= u.high(); j += p) body.push_back(F.pth_root(u.coeff(j)));
  return LaurentPoly(Poly(std::move(body)), e_low);
}

DifferentialForm cartier_form(const CurveData& curve, const DifferentialForm& form) {
  const Field& F = *curve.field;
  const int p = static_cast<int>(F.p());
  const int m = curve.m;
  if (form.n < 0 || form.n >= m) throw std::invalid_argument("y-exponent outside [0, m)");
  int t = 0;
  while ((form.n + m * t) % p != 0) ++t;
  const int n_out = (form.n + m * t) / p;
  const LaurentPoly integrand = t == 0 ? form.u : mul(F, form.u, LaurentPoly(pow(F, curve.f, static_cast<unsigned>(t))));
  return {n_out, cartier_poly(F, integrand)};
}

std::vector<Elem> holomorphic_coordinates(const CurveData& curve, const DifferentialForm& form) {
  const Field& F = *curve.field;
  std::vector<Elem> coords(static_cast<std::size_t>(curve.genus));
  if (form.u.is_zero()) return coords;
  auto fail = [&](const char* why) {
    std::ostringstream os;
    os << "form with y-exponent " << form.n << " is not in the holomorphic span: " << why;
    throw InvariantViolation(os.str());
  };
  if (form.n <= 0 || form.n >= curve.m) fail("eigenspace carries no holomorphic forms");
  const auto n = static_cast<std::size_t>(form.n);
  const auto poly = form.u.as_poly();
  if (!poly) fail("pole at x = 0");
  const auto quotient = exact_div(F, *poly, curve.s_by_n[n]);
  if (!quotient) fail("not divisible by the eigenspace factor");
  if (quotient->degree() >= curve.d_by_n[n]) fail("degree beyond the eigenspace dimension");
  for (int l = 0; l <= quotient->degree(); ++l)
    coords[curve.first_slot_by_n[n] + static_cast<std::size_t>(l)] = quotient->coeff(static_cast<std::size_t>(l));
  return coords;
}

Matrix cartier_manin(const CurveData& curve) {
  const std::size_t g = static_cast<std::size_t>(curve.genus);
  Matrix h(g, g);
  for (std::size_t j = 0; j < g; ++j) {
    const auto& slot = curve.slots[j];
    const DifferentialForm w{slot.n, LaurentPoly(shift(slot.s, static_cast<std::size_t>(slot.l)), 0)};
    const auto col = holomorphic_coordinates(curve, cartier_form(curve, w));
    for (std::size_t i = 0; i < g; ++i) h.at(i, j) = col[i];
  }
  return h;
}

Matrix cartier_manin(const CurveModel& model) { return cartier_manin(curve_data(model)); }

Matrix hyperelliptic_cartier_manin(const HyperellipticModel& model) {
  const Field& F = *model.field;
  const int p = static_cast<int>(F.p());
  const int g = model.genus();
  const Poly power = pow(F, model.f, static_cast<unsigned>((p - 1) / 2));
  Matrix h(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
  for (int j = 0; j < g; ++j)
    for (int i = 0; i < g; ++i) {
      const int e = p * (j + 1) - 1 - i;
      h.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = F.pth_root(power.coeff(static_cast<std::size_t>(e)));
    }
  return h;
}

std::size_t p_rank_of(const Field& F, const Matrix& cartier) {
  const std::size_t g = cartier.rows();
  // Rows span W_i; C(w) = H w^{(1/p)}, i.e. rows map to w^{(1/p)} H^T.
  // The W_i are nested, so equal dimensions mean a fixed point.
  const Matrix ht = transpose(cartier);
  Matrix w = Matrix::identity(F, g);
  for (std::size_t i = 0; i < g && w.rows() > 0; ++i) {
    Matrix next = rref(F, multiply(F, pth_root(F, w), ht));
    const bool stable = next.rows() == w.rows();
    w = std::move(next);
    if (stable) break;
  }
  return w.rows();
}

int a_number(const CurveModel& model) {
  const auto data = curve_data(model);
  return data.genus - static_cast<int>(rank(*data.field, cartier_manin(data)));
}

int p_rank(const CurveModel& model) {
  const auto data = curve_data(model);
  return static_cast<int>(p_rank_of(*data.field, cartier_manin(data)));
}

}  // namespace eo
