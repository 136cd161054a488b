#include "eo/regression.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "eo/cartier.hpp"
#include "eo/derham.hpp"
#include "eo/eotype.hpp"
#include "eo/survey.hpp"

namespace eo {

namespace {

using Coeffs = std::map<int, Elem>;

HyperellipticModel normal_form(const FieldPtr& F, const Coeffs& c) {
  std::vector<Elem> v(10);
  for (const auto& [deg, e] : c) v[static_cast<std::size_t>(deg)] = e;
  return HyperellipticModel::make(F, genus4_normal_form(*F, v));
}

HyperellipticModel normal_form_codes(const FieldPtr& F, const std::map<int, std::uint64_t>& c) {
  Coeffs e;
  for (const auto& [deg, code] : c) e[deg] = Elem{code};
  return normal_form(F, e);
}

std::string codes_of(const std::vector<Elem>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].code;
  os << '}';
  return os.str();
}

std::string v_string(const FinalType& ft) {
  std::string s;
  for (int x : ft.v) s += std::to_string(x);
  return s;
}

/// Passes when `holds` accepts at least one primitive element; reports which.
RegressionRow galois_row(const std::string& name, const FieldPtr& F, const std::function<bool(Elem)>& holds) {
  std::vector<Elem> hits;
  const auto all = F->primitive_elements();
  for (Elem t : all) {
    try {
      if (holds(t)) hits.push_back(t);
    } catch (const InvalidModel&) {
    }
  }
  std::ostringstream os;
  os << hits.size() << "/" << all.size() << " primitive elements match";
  if (!hits.empty()) os << ", e.g. code " << hits.front().code << ", all: " << codes_of(hits);
  return {name, !hits.empty(), os.str()};
}

/// The first `count` smooth members of a hyperelliptic family from a seeded
/// sample stream.
template <class Make>
std::vector<std::pair<std::vector<Elem>, HyperellipticModel>> smooth_samples(const FieldPtr& F, unsigned arity,
                                                                             std::size_t count, std::uint64_t seed,
                                                                             Make make) {
  std::vector<std::pair<std::vector<Elem>, HyperellipticModel>> out;
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    auto t = sample_tuple(*F, arity, seed, i);
    const Poly f = make(t);
    if (!squarefree(*F, f)) continue;
    out.emplace_back(t, HyperellipticModel::make(F, f));
  }
  return out;
}

template <class Make>
std::vector<std::vector<Elem>> nonzero_samples(const FieldPtr& F, unsigned arity, std::size_t count, std::uint64_t seed,
                                               Make accept) {
  std::vector<std::vector<Elem>> out;
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    auto t = sample_tuple(*F, arity, seed, i);
    bool ok = true;
    for (Elem e : t) ok = ok && e.code != 0;
    if (ok && accept(t)) out.push_back(t);
  }
  return out;
}

RegressionRow count_row(const std::string& name, std::size_t good, std::size_t total) {
  return {name, good == total, std::to_string(good) + "/" + std::to_string(total) + " match"};
}

const Subspace* member_of_dim(const std::vector<Subspace>& filtration, std::size_t d) {
  for (const auto& w : filtration)
    if (w.dim() == d) return &w;
  return nullptr;
}

struct Filtered {
  DeRhamBasis basis;
  Matrix v;
  std::vector<Subspace> filtration;
};

Filtered filtered(const CurveModel& model) {
  Filtered out{build_basis(model), {}, {}};
  const Field& F = *out.basis.curve.field;
  out.v = verschiebung(out.basis);
  out.filtration = canonical_filtration(F, out.v, pairing_matrix(out.basis), static_cast<std::size_t>(out.basis.genus()));
  return out;
}

void cartier_rows(std::vector<RegressionRow>& rows) {
  const FieldPtr F27 = Field::make(3, 3);
  const auto samples = smooth_samples(F27, 7, 100, 11, [&](const std::vector<Elem>& t) {
    std::vector<Elem> c(10);
    for (std::size_t i = 0; i < 7; ++i) c[i + 2] = t[i];
    return genus4_normal_form(*F27, c);
  });
  std::size_t good = 0;
  for (const auto& [t, model] : samples) {
    const Field& F = *F27;
    Matrix closed(4, 4);
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i) {
        const int e = 3 * j + 2 - i;
        closed.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = F.pth_root(model.f.coeff(static_cast<std::size_t>(e)));
      }
    if (cartier_manin(curve_data(model)) == closed && hyperelliptic_cartier_manin(model) == closed) ++good;
  }
  rows.push_back(count_row("normal form Cartier-Manin matrix equals a_{3j+2-i}^{1/3} (100 random F_27 tuples)", good,
                           samples.size()));
}

void discriminant_rows(std::vector<RegressionRow>& rows) {
  const FieldPtr F3 = Field::make(3, 1), F9 = Field::make(3, 2), F27 = Field::make(3, 3);
  auto rank_of = [](const HyperellipticModel& m) { return rank(*m.field, hyperelliptic_cartier_manin(m)); };

  rows.push_back(galois_row("ordinary example y^2=x^9+t x^5+x over F_9: disc=2, rank(H)=4", F9, [&](Elem t) {
    const auto m = normal_form(F9, {{5, t}});
    return discriminant(*F9, m.f) == F9->from_int(2) && rank_of(m) == 4;
  }));
  {
    const auto m = normal_form_codes(F3, {{2, 1}, {7, 1}, {8, 1}});
    const auto d = discriminant(*F3, m.f);
    rows.push_back({"a2=a7=a8=1: disc=2, rank(H)=3", d.code == 2 && rank_of(m) == 3,
                    "disc=" + std::to_string(d.code) + " rank=" + std::to_string(rank_of(m))});
  }
  {
    const auto m = normal_form_codes(F3, {{3, 1}, {7, 2}});
    const auto d = discriminant(*F3, m.f);
    rows.push_back({"a3=1, a7=2: disc=1, rank(H)=2", d.code == 1 && rank_of(m) == 2,
                    "disc=" + std::to_string(d.code) + " rank=" + std::to_string(rank_of(m))});
  }
  {
    const auto m = normal_form_codes(F3, {{7, 1}});
    const auto d = discriminant(*F3, m.f);
    rows.push_back({"y^2=x^9+x^7+x: disc=1", d.code == 1, "disc=" + std::to_string(d.code)});
  }
  const Field& F = *F27;
  {
    const auto tuples = nonzero_samples(F27, 3, 50, 12, [](const std::vector<Elem>&) { return true; });
    std::size_t good = 0;
    for (const auto& t : tuples) {
      const Elem a7 = t[0], al = t[1], a4 = t[2];
      const Elem al3 = F.pow(al, 3);
      const Poly f = genus4_normal_form(F, {F.zero(), F.zero(), F.zero(), F.mul(al3, a4), a4, F.zero(), F.mul(al3, a7), a7});
      const Elem base = F.add(F.add(F.mul(a4, al), F.mul(a7, F.mul(al, al))), F.one());
      if (discriminant(F, f) == F.pow(base, 9)) ++good;
    }
    rows.push_back(count_row("[3,2] family disc = (a4 al + a7 al^2 + 1)^9 (50 random F_27 tuples)", good, tuples.size()));
  }
  {
    const auto tuples = nonzero_samples(F27, 2, 50, 13, [](const std::vector<Elem>&) { return true; });
    std::size_t literal = 0, ninth = 0;
    for (const auto& t : tuples) {
      const Elem a7 = t[0], al = t[1];
      const Poly f = genus4_normal_form(F, {F.zero(), F.zero(), F.zero(), F.neg(F.mul(F.pow(al, 12), a7)),
                                            F.neg(F.mul(F.pow(al, 9), a7)), F.zero(), F.mul(F.pow(al, 3), a7), a7});
      const Elem rhs = F.add(F.add(F.mul(F.from_int(2), F.mul(F.pow(al, 10), a7)), F.mul(F.pow(al, 2), a7)), F.one());
      const Elem d = discriminant(F, f);
      literal += d == rhs;
      ninth += d == F.pow(rhs, 9);
    }
    RegressionRow row = count_row("[4,1] family disc = 2 al^10 a7 + al^2 a7 + 1 (50 random F_27 tuples)", literal, tuples.size());
    row.detail += "; (2 al^10 a7 + al^2 a7 + 1)^9 matches " + std::to_string(ninth) + "/" + std::to_string(tuples.size());
    rows.push_back(row);
  }
}

void witness_rows(std::vector<RegressionRow>& rows) {
  const FieldPtr F27 = Field::make(3, 3);
  const Field& F = *F27;
  auto witness = [&](Elem v) {
    const Elem a7 = F.pow(v, 10), al = F.pow(v, 9);
    return genus4_normal_form(F, {F.zero(), F.zero(), F.zero(), F.neg(F.mul(F.pow(al, 12), a7)),
                                  F.neg(F.mul(F.pow(al, 9), a7)), F.zero(), F.mul(F.pow(al, 3), a7), a7});
  };
  rows.push_back(galois_row("[4,1] witness (a7,al)=(v^10,v^9) over F_27: disc=v^21", F27,
                            [&](Elem v) { return discriminant(F, witness(v)) == F.pow(v, 21); }));
  rows.back().group = "witness";
  rows.push_back(galois_row("[4,1] witness (a7,al)=(v^10,v^9) over F_27: type [4,1] with v(1)=0, v(2)=1", F27, [&](Elem v) {
    const auto c = classify(HyperellipticModel::make(F27, witness(v)));
    return c.eo_type.mu == std::vector<int>{4, 1} && c.final_type.v[1] == 0 && c.final_type.v[2] == 1;
  }));
  rows.back().group = "types";
}

void classification_rows(std::vector<RegressionRow>& rows) {
  const FieldPtr F3 = Field::make(3, 1), F9 = Field::make(3, 2), F27 = Field::make(3, 3);
  auto typed = [&](const std::string& name, const CurveModel& model, std::vector<int> mu,
                   const std::function<bool(const Classification&)>& extra = {}) {
    const auto c = classify(model);
    const bool ok = c.eo_type.mu == mu && (!extra || extra(c));
    rows.push_back({name, ok, "type " + c.eo_type.to_string() + " v=" + v_string(c.final_type) +
                                  " a=" + std::to_string(c.a_number) + " f=" + std::to_string(c.p_rank)});
  };
  typed("(a3,a4,a6,a7)=(1,0,0,2): type [2,1]", normal_form_codes(F3, {{3, 1}, {7, 2}}), {2, 1});
  typed("(a3,a4,a6,a7)=(0,1,0,0): type [3,1]", normal_form_codes(F3, {{4, 1}}), {3, 1});
  typed("[3,2] family (a7,al,a4)=(2,2,1): type [3,2] with v(1)=v(2)=v(3)=1",
        normal_form_codes(F3, {{7, 2}, {6, 1}, {4, 1}, {3, 2}}), {3, 2}, [](const Classification& c) {
          return c.final_type.v[1] == 1 && c.final_type.v[2] == 1 && c.final_type.v[3] == 1;
        });
  typed("y^2=x^9+x^7+x: type [4,2]", normal_form_codes(F3, {{7, 1}}), {4, 2});
  typed("y^2=x^9+x: type [4,3], a=2", normal_form_codes(F3, {}), {4, 3},
        [](const Classification& c) { return c.a_number == 2; });
  rows.push_back(galois_row("y^2=x^9+t x^5+x over F_9: ordinary, a=0, p-rank 4", F9, [&](Elem t) {
    const auto c = classify(normal_form(F9, {{5, t}}));
    return c.eo_type.mu.empty() && c.a_number == 0 && c.p_rank == 4;
  }));
  rows.push_back(galois_row("y^2=x^9+t^10 x^7+t^11 x^6+x^4+t x^3+x over F_27: type [4,1]", F27, [&](Elem t) {
    const Field& F = *F27;
    const auto c = classify(normal_form(F27, {{7, F.pow(t, 10)}, {6, F.pow(t, 11)}, {4, F.one()}, {3, t}}));
    return c.eo_type.mu == std::vector<int>{4, 1};
  }));
}

void verschiebung_rows(std::vector<RegressionRow>& rows) {
  const FieldPtr F27 = Field::make(3, 3);
  const Field& F = *F27;
  const auto samples = smooth_samples(F27, 4, 200, 14, [&](const std::vector<Elem>& t) {
    return genus4_normal_form(F, {F.zero(), F.zero(), F.zero(), t[0], t[1], F.zero(), t[2], t[3]});
  });
  const char* names[8] = {"V(lambda_0)=0", "V(lambda_3)=0", "V(gamma_2)=0", "V(gamma_3)=0",
                          "V(lambda_1)=a7^(1/3) lambda_2 + a4^(1/3) lambda_1 + lambda_0",
                          "V(lambda_2)=lambda_3 + a6^(1/3) lambda_2 + a3^(1/3) lambda_1",
                          "V(gamma_1)=lambda_2 + a6^(1/3) lambda_1 + a3^(1/3) lambda_0",
                          "V(gamma_4)=a4^(1/3) lambda_2 + (1-(a3 a7)^(1/3)+(a4 a6)^(1/3)) lambda_1 + a6^(1/3) lambda_0"};
  std::size_t good[8] = {};
  for (const auto& [t, model] : samples) {
    const Elem a3 = F.pth_root(t[0]), a4 = F.pth_root(t[1]), a6 = F.pth_root(t[2]), a7 = F.pth_root(t[3]);
    const Matrix v = verschiebung(build_basis(model));
    const Elem z = F.zero(), one = F.one();
    const std::vector<Elem> zero4(8, z);
    const std::pair<std::size_t, std::vector<Elem>> expected[8] = {
        {0, zero4},
        {3, zero4},
        {5, zero4},
        {6, zero4},
        {1, {one, a4, a7, z, z, z, z, z}},
        {2, {z, a3, a6, one, z, z, z, z}},
        {4, {a3, a6, one, z, z, z, z, z}},
        {7, {a6, F.add(F.sub(one, F.pth_root(F.mul(t[0], t[3]))), F.pth_root(F.mul(t[1], t[2]))), a4, z, z, z, z, z}},
    };
    for (int i = 0; i < 8; ++i)
      if (v.column(expected[i].first) == expected[i].second) ++good[i];
  }
  for (int i = 0; i < 8; ++i)
    rows.push_back(count_row(std::string(names[i]) + " (200 random F_27 tuples)", good[i], samples.size()));
}

void filtration_rows(std::vector<RegressionRow>& rows) {
  const FieldPtr F27 = Field::make(3, 3);
  const Field& F = *F27;
  {
    const FieldPtr F3 = Field::make(3, 1);
    const auto model = normal_form_codes(F3, {{3, 1}, {7, 2}});
    const auto fl = filtered(model);
    const Subspace* y2 = member_of_dim(fl.filtration, 2);
    const bool ok = y2 && v_image(*F3, fl.v, *y2) == *y2;
    rows.push_back({"(a3,a4,a6,a7)=(1,0,0,2): V(Y_2)=Y_2", ok, ok ? "Y_2 is V-stable" : "no V-stable 2-dim member"});
  }
  {
    const FieldPtr F3 = Field::make(3, 1);
    const auto model = normal_form_codes(F3, {{4, 1}});
    const auto fl = filtered(model);
    const Subspace* y6 = member_of_dim(fl.filtration, 6);
    bool ok = false;
    if (y6)
      for (std::size_t r = 0; r < y6->dim(); ++r) ok = ok || y6->basis().at(r, 4).code != 0;
    rows.push_back({"(a3,a4,a6,a7)=(0,1,0,0): Y_6 has an element with nonzero gamma_1 coefficient", ok,
                    y6 ? "Y_6 found" : "no 6-dim member"});
  }
  {
    const auto model = normal_form(F27, {{3, F.element(5)}, {4, F.element(7)}, {6, F.element(11)}, {7, F.element(2)}});
    const auto basis = build_basis(model);
    const Poly x{F.zero(), F.one()};
    const Poly s1 = sub(F, mul(F, x, derivative(F, model.f)), scale(F, model.f, F.from_int(2)));
    const Poly psi1({s1.coeff(0), s1.coeff(1)});
    const LaurentPoly expected(scale(F, psi1, F.inv(F.from_int(2))), -2);
    const bool ok = basis.classes[4].label == "gamma_1" && basis.classes[4].u1.n == 1 && basis.classes[4].u1.u == expected;
    rows.push_back({"gamma_1 U1 form is psi_1/(2 x^2 y) dx with s_1 = x f' - 2 f", ok, basis.classes[4].label});
  }
}

void cyclic_rows(std::vector<RegressionRow>& rows) {
  {
    const FieldPtr F = Field::make(7, 2);
    const auto m = CyclicCoverModel::make(F, 5, {1, 1, 1, 2}, {F->zero(), F->one(), F->generator()});
    const auto dims = m.eigenspace_dims();
    const bool ok = m.genus() == 4 && dims == std::vector<int>{0, 1, 1, 2};
    rows.push_back({"y^5=x(x-1)(x-xi): genus 4, eigenspace dims (0,1,1,2)", ok, "genus " + std::to_string(m.genus())});
    const auto basis = holomorphic_basis(m);
    const Poly one = Poly::constant(F->one()), x{F->zero(), F->one()};
    const bool shape = basis.size() == 4 && basis[0].n == 2 && basis[1].n == 3 && basis[2].n == 4 && basis[3].n == 4 &&
                       basis[0].u == LaurentPoly(one) && basis[1].u == LaurentPoly(one) && basis[2].u == LaurentPoly(one) &&
                       basis[3].u == LaurentPoly(x);
    rows.push_back({"y^5=x(x-1)(x-xi): holomorphic basis dx/y^2, dx/y^3, dx/y^4, x dx/y^4", shape, ""});
    const auto data = curve_data(m);
    const auto c2 = cartier_form(data, basis[0]);
    const auto c3 = cartier_form(data, basis[1]);
    rows.push_back({"p=7: C(dx/y^2)=0 and C(dx/y^3) lies in the y^-4 eigenspace", c2.u.is_zero() && c3.n == 4 && !c3.u.is_zero(),
                    "C(dx/y^3) has y-exponent -" + std::to_string(c3.n)});
  }
  {
    const FieldPtr F = Field::make(5, 1);
    const auto m = CyclicCoverModel::make(F, 3, {1, 1, 1, 1, 1, 1}, {F->zero(), F->one(), F->from_int(2), F->from_int(3), F->from_int(4)});
    const bool ok = m.genus() == 4 && m.eigenspace_dims() == std::vector<int>{1, 3};
    rows.push_back({"y^3 = quintic: genus 4, eigenspace dims (1,3)", ok, ""});
  }
  {
    const FieldPtr F = Field::make(19, 1);
    const auto c = classify(CyclicCoverModel::make(F, 5, {1, 1, 1, 2}, {F->zero(), F->one(), F->from_int(18)}));
    rows.push_back({"y^5=x(x-1)(x+1), p=19: superspecial", c.superspecial && c.a_number == 4, "type " + c.eo_type.to_string()});
  }
  {
    // Explicit representatives in characteristic 2 (m = 5, xi = t in F_4).
    const FieldPtr F = Field::make(2, 2);
    const Elem xi = F->generator();
    const auto basis = build_basis(CyclicCoverModel::make(F, 5, {1, 1, 1, 2}, {F->zero(), F->one(), xi}));
    const DeRhamClass* b30 = nullptr;
    const DeRhamClass* b40 = nullptr;
    for (const auto& cls : basis.classes) {
      if (cls.label == "beta_{3,0}") b30 = &cls;
      if (cls.label == "beta_{4,0}") b40 = &cls;
    }
    const Elem xi1 = F->add(xi, F->one());
    const bool ok30 = b30 && b30->u1.u.is_zero() && b30->u2.n == 2 && b30->u2.u == LaurentPoly(Poly::constant(F->neg(xi1)));
    const bool ok40 = b40 && b40->u1.n == 1 && b40->u1.u == LaurentPoly(Poly::constant(xi), -1);
    rows.push_back({"char 2, y^5=x(x-1)(x-xi): beta_{3,0} = (y^3/x, 0, -(xi+1)/y^2 dx)", ok30, ""});
    rows.push_back({"char 2, y^5=x(x-1)(x-xi): beta_{4,0} U1 form = xi/(x y) dx", ok40, ""});
  }
  {
    const FieldPtr F = Field::make(7, 2);
    const auto model = CyclicCoverModel::make(F, 5, {1, 1, 1, 2}, {F->zero(), F->one(), F->generator()});
    const auto fl = filtered(model);
    const Field& f = *F;
    // alpha_{2,0}, alpha_{3,0}, alpha_{4,0}, alpha_{4,1} are coordinates 0..3.
    Matrix y3(3, 8);
    y3.at(0, 0) = f.one();
    y3.at(1, 2) = f.one();
    y3.at(2, 3) = f.one();
    const Subspace expected(f, y3);
    bool present = false;
    for (const auto& w : fl.filtration) present = present || w == expected;
    const auto c = classify(model);
    rows.push_back({"y^5=x(x-1)(x-xi), p=7: canonical filtration contains <alpha_20, alpha_40, alpha_41>", present,
                    "type " + c.eo_type.to_string() + " v=" + v_string(c.final_type)});
  }
}

void survey_rows(std::vector<RegressionRow>& rows) {
  auto claim_rows = [&](const std::string& family, unsigned k, const std::vector<std::string>& wanted) {
    const auto report = scan(find_family(family), Field::make(3, k), ScanMode::exhaustive(), locus_claims(family));
    for (const auto& c : report.claims) {
      if (std::find(wanted.begin(), wanted.end(), c.name) == wanted.end()) continue;
      std::ostringstream os;
      os << "table [[" << c.table[0][0] << "," << c.table[0][1] << "],[" << c.table[1][0] << "," << c.table[1][1] << "]]";
      rows.push_back({family + " over F_" + std::to_string(report.tally.p) + (k > 1 ? "^" + std::to_string(k) : "") + ": " + c.name,
                      c.passed(), os.str()});
    }
    return report;
  };
  const auto gen3 = claim_rows("H4GEN", 1, {"a-number at most 2", "[4,3] only for y^2 = x^9 + x"});
  rows.push_back({"H4GEN over F_3: 2187 tuples scanned", gen3.tally.total == 2187, std::to_string(gen3.tally.total)});
  claim_rows("H4A2", 2, {"every smooth member has a=2"});
  claim_rows("H4E8", 3, {"disc = (a4 al + a7 al^2 + 1)^9"});
  claim_rows("H4E10", 3, {"a7 al != 0: [4,1] off the boundary"});
}

}  // namespace

std::vector<RegressionRow> reference_regression() {
  std::vector<RegressionRow> rows;
  auto section = [&](const char* group, void (*add)(std::vector<RegressionRow>&)) {
    const std::size_t start = rows.size();
    add(rows);
    for (std::size_t i = start; i < rows.size(); ++i)
      if (rows[i].group.empty()) rows[i].group = group;
  };
  section("matrix", cartier_rows);
  section("disc", discriminant_rows);
  section("types", classification_rows);
  section("witness", witness_rows);
  section("vimages", verschiebung_rows);
  section("filtration", filtration_rows);
  section("cyclic", cyclic_rows);
  section("survey", survey_rows);
  for (const auto& s : cyclic_suite())
    rows.push_back({s.family + " p=" + std::to_string(s.p) + ": " + s.claim, s.passed,
                    std::to_string(s.matched) + "/" + std::to_string(s.checked) + " " + s.detail, "suite"});
  return rows;
}

}  // namespace eo
