#include "eo/curve.hpp"

#include <numeric>
#include <sstream>

namespace eo {

HyperellipticModel HyperellipticModel::make(FieldPtr field, Poly f) {
  const Field& F = *field;
  if (F.p() == 2) throw InvalidModel("hyperelliptic models need odd characteristic");
  if (f.degree() < 3 || f.degree() % 2 == 0) throw InvalidModel("f must have odd degree >= 3");
  if (f.leading() != F.one()) throw InvalidModel("f must be monic");
  if (!squarefree(F, f)) throw InvalidModel("disc(f) = 0: f is not squarefree");
  return HyperellipticModel{std::move(field), std::move(f)};
}

bool HyperellipticModel::normal_form() const {
  const Field& F = *field;
  return f.degree() == 9 && f.coeff(0) == F.zero() && f.coeff(1) == F.one() && f.coeff(9) == F.one();
}

CyclicCoverModel CyclicCoverModel::make(FieldPtr field, int m, std::vector<int> a, std::vector<Elem> xi) {
  const Field& F = *field;
  if (m < 2) throw InvalidModel("m must be >= 2");
  if (m % static_cast<int>(F.p()) == 0) throw InvalidModel("p divides m");
  if (a.size() < 3) throw InvalidModel("monodromy vector needs N >= 3 entries");
  if (xi.size() + 1 != a.size()) throw InvalidModel("need N - 1 finite branch points");
  int total = 0;
  for (int ai : a) {
    if (ai < 1) throw InvalidModel("monodromy entries must be positive");
    if (std::gcd(ai, m) != 1) throw InvalidModel("gcd(a_i, m) != 1");
    total += ai;
  }
  if (total % m != 0) throw InvalidModel("sum of a_i is not divisible by m");
  if (xi.front() != F.zero()) throw InvalidModel("first branch point must be 0");
  for (std::size_t i = 0; i < xi.size(); ++i)
    for (std::size_t j = i + 1; j < xi.size(); ++j)
      if (xi[i] == xi[j]) throw InvalidModel("branch points are not distinct");
  std::vector<int> mult(a.begin(), a.end() - 1);
  Poly f = from_roots(F, xi, mult);
  return CyclicCoverModel{std::move(field), m, std::move(a), std::move(xi), std::move(f)};
}

int CyclicCoverModel::genus() const {
  const int N = branch_count();
  return 1 + ((N - 2) * m - N) / 2;
}

std::vector<int> CyclicCoverModel::eigenspace_dims() const {
  std::vector<int> out;
  for (int n = 1; n < m; ++n) {
    int frac_sum = 0;  // sum of m<n a_i / m>
    for (int ai : a) frac_sum += (n * ai) % m;
    out.push_back(-1 + frac_sum / m);
  }
  return out;
}

const FieldPtr& field_of(const CurveModel& model) {
  return std::visit([](const auto& c) -> const FieldPtr& { return c.field; }, model);
}

int genus(const CurveModel& model) {
  return std::visit([](const auto& c) { return c.genus(); }, model);
}

int form_order(const CyclicCoverModel& model, std::size_t i, int n, int l) {
  const int m = model.m;
  const std::size_t N = model.a.size();
  if (i + 1 == N) {
    int degree = 0, bsum = 0;
    for (std::size_t j = 0; j + 1 < N; ++j) {
      degree += model.a[j];
      bsum += model.b(j, n);
    }
    // ord x = -m, ord y = -deg f, ord dx = -m - 1
    return -m * (l + bsum) + n * degree - m - 1;
  }
  const int from_x = i == 0 ? m * l : 0;
  return from_x + m * model.b(i, n) - n * model.a[i] + m - 1;
}

CurveData curve_data(const CurveModel& model) {
  CurveData d;
  d.field = field_of(model);
  const Field& F = *d.field;
  const Poly one = Poly::constant(F.one());
  if (const auto* h = std::get_if<HyperellipticModel>(&model)) {
    d.m = 2;
    d.f = h->f;
    d.genus = h->genus();
    d.branch_at_zero = h->f.coeff(0) == F.zero();
    d.s_by_n = {one, one};
    d.d_by_n = {0, d.genus};
    d.first_slot_by_n = {0, 0};
    for (int l = 0; l < d.genus; ++l) d.slots.push_back({1, l, one, one});
    return d;
  }
  const auto& c = std::get<CyclicCoverModel>(model);
  d.m = c.m;
  d.f = c.f;
  d.genus = c.genus();
  d.branch_at_zero = true;
  d.s_by_n.assign(static_cast<std::size_t>(c.m), one);
  d.d_by_n.assign(static_cast<std::size_t>(c.m), 0);
  d.first_slot_by_n.assign(static_cast<std::size_t>(c.m), 0);
  const auto dims = c.eigenspace_dims();
  for (int n = 1; n < c.m; ++n) {
    std::vector<int> b_exp, t_exp;
    for (std::size_t i = 0; i + 1 < c.a.size(); ++i) {
      b_exp.push_back(c.b(i, n));
      t_exp.push_back(c.a[i] - c.b(i, n) - 1);
    }
    Poly s = from_roots(F, c.xi, b_exp);
    Poly t = from_roots(F, c.xi, t_exp);
    const auto idx = static_cast<std::size_t>(n);
    d.s_by_n[idx] = s;
    d.d_by_n[idx] = dims[idx - 1];
    d.first_slot_by_n[idx] = d.slots.size();
    for (int l = 0; l < dims[idx - 1]; ++l) d.slots.push_back({n, l, s, t});
  }
  return d;
}

std::vector<DifferentialForm> holomorphic_basis(const CurveModel& model) {
  const CurveData d = curve_data(model);
  std::vector<DifferentialForm> out;
  for (const auto& slot : d.slots)
    out.push_back({slot.n, LaurentPoly(shift(slot.s, static_cast<std::size_t>(slot.l)), 0)});
  return out;
}

CyclicCoverModel hyper_to_cyclic(const HyperellipticModel& model) {
  const Field& F = *model.field;
  if (model.f.coeff(0) != F.zero()) throw InvalidModel("f(0) != 0: no branch point at 0");
  auto rts = roots(F, model.f);
  if (static_cast<int>(rts.size()) != model.f.degree()) {
    const unsigned d = splitting_degree(F, model.f);
    std::ostringstream os;
    os << "f does not split over F_" << F.q() << "; needs an extension of degree " << d;
    throw NotSplit(os.str(), d);
  }
  // roots() is ascending by encoding, so 0 comes first.
  std::vector<int> a(rts.size() + 1, 1);
  return CyclicCoverModel::make(model.field, 2, std::move(a), std::move(rts));
}

}  // namespace eo
