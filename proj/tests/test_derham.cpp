#include <doctest.h>

#include <random>

#include "eo/derham.hpp"
#include "eo/survey.hpp"
#include "helpers.hpp"

using eo::CyclicCoverModel;
using eo::Elem;
using eo::Field;
using eo::HyperellipticModel;
using eo::LaurentPoly;
using eo::Poly;

namespace {

// A spread of curves from every family shape, including char 2.
std::vector<eo::CurveModel> sample_models() {
  std::vector<eo::CurveModel> out;
  std::mt19937_64 rng(9);
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {3, 2}, {3, 3}, {5, 1}, {7, 1}}) {
    const auto F = Field::make(p, k);
    for (int found = 0; found < 8;) {
      std::vector<Elem> c(10);
      for (int i = 2; i <= 8; ++i) c[static_cast<std::size_t>(i)] = testing::random_elem(*F, rng);
      const Poly f = eo::genus4_normal_form(*F, c);
      if (!eo::squarefree(*F, f)) continue;
      out.push_back(HyperellipticModel::make(F, f));
      ++found;
    }
  }
  for (std::uint32_t p : {2u, 3u, 7u, 11u, 13u}) {
    const auto F = Field::make(p, 2);
    for (std::uint64_t c = 2; c < F->q(); c += 3) {
      const Elem xi{c};
      if (xi != F->one()) out.push_back(CyclicCoverModel::make(F, 5, {1, 1, 1, 2}, {F->zero(), F->one(), xi}));
      if (p != 2 && xi != F->neg(xi)) out.push_back(CyclicCoverModel::make(F, 5, {1, 1, 1, 2}, {F->zero(), xi, F->neg(xi)}));
    }
  }
  for (std::uint32_t p : {5u, 11u, 13u}) {
    const auto F = Field::make(p, 2);
    out.push_back(CyclicCoverModel::make(F, 3, {1, 1, 1, 1, 1, 1}, {F->zero(), F->one(), F->from_int(2), F->from_int(3), F->from_int(4)}));
    out.push_back(CyclicCoverModel::make(F, 7, {1, 2, 4, 1, 6}, {F->zero(), F->one(), F->generator(), F->from_int(3)}));
    out.push_back(CyclicCoverModel::make(F, 4, {1, 1, 1, 1, 3, 1}, {F->zero(), F->one(), F->generator(), F->from_int(3), F->from_int(4)}));
  }
  return out;
}

}  // namespace

TEST_SUITE("derham") {
  TEST_CASE("U1 and U2 representatives have the same Cartier image") {
    std::size_t classes = 0;
    for (const auto& model : sample_models()) {
      const auto basis = eo::build_basis(model);
      REQUIRE(basis.classes.size() == 2 * static_cast<std::size_t>(basis.genus()));
      for (const auto& cls : basis.classes) {
        if (cls.holomorphic) {
          CHECK(cls.u1 == cls.u2);
          continue;
        }
        CHECK(eo::cartier_form(basis.curve, cls.u1) == eo::cartier_form(basis.curve, cls.u2));
        ++classes;
      }
    }
    CHECK(classes > 100);
  }

  TEST_CASE("V lands in H^0, is onto H^0 and restricts to the Cartier-Manin matrix") {
    for (const auto& model : sample_models()) {
      const auto basis = eo::build_basis(model);
      const Field& F = *basis.curve.field;
      const auto v = eo::verschiebung(basis);
      const auto g = static_cast<std::size_t>(basis.genus());
      for (std::size_t r = g; r < 2 * g; ++r)
        for (std::size_t c = 0; c < 2 * g; ++c) CHECK(v.at(r, c).code == 0);
      CHECK(eo::rank(F, v) == g);
      const auto cm = eo::cartier_manin(basis.curve);
      eo::Matrix block(g, g);
      for (std::size_t r = 0; r < g; ++r)
        for (std::size_t c = 0; c < g; ++c) block.at(r, c) = v.at(r, c);
      CHECK(block == cm);
      CHECK(eo::rank(F, block) == eo::rank(F, cm));
    }
  }

  TEST_CASE("hyperelliptic gamma classes split s_i = x f' - 2 i f") {
    const auto F27 = Field::make(3, 3);
    const Field& F = *F27;
    std::mt19937_64 rng(10);
    for (int it = 0; it < 20; ++it) {
      std::vector<Elem> c(10);
      for (int i : {3, 4, 6, 7}) c[static_cast<std::size_t>(i)] = testing::random_elem(F, rng);
      const Poly f = eo::genus4_normal_form(F, c);
      if (!eo::squarefree(F, f)) continue;
      const auto basis = eo::build_basis(HyperellipticModel::make(F27, f));
      const Poly xfp = eo::mul(F, Poly::monomial(F.one(), 1), eo::derivative(F, f));
      for (int i = 1; i <= 4; ++i) {
        const auto& cls = basis.classes[static_cast<std::size_t>(3 + i)];
        CHECK(cls.label == "gamma_" + std::to_string(i));
        CHECK(cls.u1.n == 1);
        const Poly s = eo::sub(F, xfp, eo::scale(F, f, F.from_int(2 * i)));
        const LaurentPoly whole(eo::scale(F, s, F.inv(F.from_int(2))), -(i + 1));
        CHECK(eo::sub(F, cls.u1.u, cls.u2.u) == whole);
        // psi carries the monomials of degree <= i.
        if (!cls.u1.u.is_zero()) CHECK(cls.u1.u.high() <= -1);
        if (!cls.u2.u.is_zero()) CHECK(cls.u2.u.low() >= 0);
      }
    }
  }

  TEST_CASE("cyclic differential numerator is divisible as required") {
    for (const auto& model : sample_models()) {
      const auto* c = std::get_if<CyclicCoverModel>(&model);
      if (!c) continue;
      const Field& F = *c->field;
      const auto data = eo::curve_data(model);
      for (const auto& slot : data.slots) {
        Poly rest = Poly::constant(F.one());
        for (std::size_t i = 0; i < c->xi.size(); ++i) {
          const int e = c->a[i] - c->b(i, slot.n) - 1;
          for (int j = 0; j < e; ++j) rest = eo::mul(F, rest, Poly{F.neg(c->xi[i]), F.one()});
        }
        const Poly num = eo::differential_numerator(data, slot.n, slot.l, slot.s);
        CHECK(eo::exact_div(F, num, eo::mul(F, eo::mul(F, slot.s, slot.s), rest)).has_value());
      }
    }
  }

  TEST_CASE("pairing normalization") {
    const auto F3 = Field::make(3, 1);
    const auto basis = eo::build_basis(HyperellipticModel::make(F3, Poly::from_codes(*F3, {0, 1, 0, 0, 0, 0, 0, 1, 0, 1})));
    const auto P = eo::pairing_matrix(basis);
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c) {
        Elem expected = F3->zero();
        if (r >= 4 && c == r - 4) expected = F3->one();
        if (r < 4 && c == r + 4) expected = F3->neg(F3->one());
        CHECK(P.at(r, c) == expected);
      }
    CHECK(basis.classes[4].label == "gamma_1");
    CHECK(basis.classes[0].label == "lambda_0");

    const auto F7 = Field::make(7, 2);
    const auto cb = eo::build_basis(CyclicCoverModel::make(F7, 5, {1, 1, 1, 2}, {F7->zero(), F7->one(), F7->generator()}));
    const auto Q = eo::pairing_matrix(cb);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(Q.at(4 + k, k) == F7->one());
      CHECK(cb.classes[4 + k].n == cb.classes[k].n);
      CHECK(cb.classes[4 + k].l == cb.classes[k].l);
    }
    CHECK(cb.classes[0].label == "alpha_{2,0}");
    CHECK(cb.classes[7].label == "beta_{4,1}");
  }

  TEST_CASE("basis needs a branch point at 0") {
    const auto F3 = Field::make(3, 1);
    CHECK_THROWS_AS(eo::build_basis(HyperellipticModel::make(F3, Poly::from_codes(*F3, {1, 2, 0, 1}))), eo::InvalidModel);
  }

  TEST_CASE("characteristic 2 representatives on y^5 = x(x-1)(x-xi)") {
    const auto F4 = Field::make(2, 2);
    const Elem xi = F4->generator();
    const auto basis = eo::build_basis(CyclicCoverModel::make(F4, 5, {1, 1, 1, 2}, {F4->zero(), F4->one(), xi}));
    const eo::DeRhamClass* b30 = nullptr;
    const eo::DeRhamClass* b40 = nullptr;
    for (const auto& cls : basis.classes) {
      if (cls.label == "beta_{3,0}") b30 = &cls;
      if (cls.label == "beta_{4,0}") b40 = &cls;
    }
    REQUIRE(b30);
    REQUIRE(b40);
    CHECK(b30->u1.u.is_zero());
    CHECK(b30->u2.n == 2);
    CHECK(b30->u2.u == LaurentPoly(Poly::constant(F4->neg(F4->add(xi, F4->one())))));
    CHECK(b40->u1.n == 1);
    CHECK(b40->u1.u == LaurentPoly(Poly::constant(xi), -1));
  }
}
