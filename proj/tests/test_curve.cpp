#include <doctest.h>

#include <numeric>

#include "eo/curve.hpp"

using eo::CyclicCoverModel;
using eo::Elem;
using eo::Field;
using eo::HyperellipticModel;
using eo::Poly;

namespace {

std::vector<Elem> points(const Field& F, std::size_t n) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(F.from_int(static_cast<std::int64_t>(i)));
  return out;
}

}  // namespace

TEST_SUITE("curve") {
  TEST_CASE("genus of the reference models") {
    const auto F7 = Field::make(7, 2);
    CHECK(CyclicCoverModel::make(F7, 5, {1, 1, 1, 2}, {F7->zero(), F7->one(), F7->generator()}).genus() == 4);
    const auto F5 = Field::make(5, 1);
    CHECK(CyclicCoverModel::make(F5, 3, {1, 1, 1, 1, 1, 1}, points(*F5, 5)).genus() == 4);
    const auto F3 = Field::make(3, 1);
    CHECK(HyperellipticModel::make(F3, Poly::from_codes(*F3, {0, 1, 0, 0, 0, 0, 0, 0, 0, 1})).genus() == 4);
  }

  TEST_CASE("eigenspace dimensions") {
    const auto F7 = Field::make(7, 2);
    CHECK(CyclicCoverModel::make(F7, 5, {1, 1, 1, 2}, {F7->zero(), F7->one(), F7->generator()}).eigenspace_dims() ==
          std::vector<int>{0, 1, 1, 2});
    const auto F5 = Field::make(5, 1);
    CHECK(CyclicCoverModel::make(F5, 3, {1, 1, 1, 1, 1, 1}, points(*F5, 5)).eigenspace_dims() == std::vector<int>{1, 3});
    const auto F11 = Field::make(11, 1);
    CHECK(CyclicCoverModel::make(F11, 2, std::vector<int>(10, 1), points(*F11, 9)).eigenspace_dims() == std::vector<int>{4});
  }

  TEST_CASE("eigenspace dimensions sum to the genus and basis forms are regular (m <= 9, N <= 6, exhaustive)") {
    const auto F = Field::make(11, 1);
    std::size_t models = 0;
    for (int m = 2; m <= 9; ++m) {
      std::vector<int> units;
      for (int a = 1; a < m; ++a)
        if (std::gcd(a, m) == 1) units.push_back(a);
      for (std::size_t N = 3; N <= 6; ++N) {
        std::vector<std::size_t> idx(N, 0);
        for (;;) {
          std::vector<int> a;
          int total = 0;
          for (auto i : idx) {
            a.push_back(units[i]);
            total += units[i];
          }
          if (total % m == 0) {
            const auto model = CyclicCoverModel::make(F, m, a, points(*F, N - 1));
            const auto dims = model.eigenspace_dims();
            CHECK(std::accumulate(dims.begin(), dims.end(), 0) == model.genus());
            for (int d : dims) CHECK(d >= 0);
            const auto basis = eo::holomorphic_basis(model);
            CHECK(static_cast<int>(basis.size()) == model.genus());
            const auto data = eo::curve_data(model);
            for (const auto& slot : data.slots)
              for (std::size_t i = 0; i < N; ++i) CHECK(eo::form_order(model, i, slot.n, slot.l) >= 0);
            ++models;
          }
          std::size_t pos = 0;
          while (pos < N && ++idx[pos] == units.size()) idx[pos++] = 0;
          if (pos == N) break;
        }
      }
    }
    CHECK(models > 1000);
  }

  TEST_CASE("holomorphic basis order") {
    const auto F3 = Field::make(3, 1);
    const auto h = HyperellipticModel::make(F3, Poly::from_codes(*F3, {0, 1, 0, 0, 0, 0, 0, 1, 0, 1}));
    const auto hb = eo::holomorphic_basis(h);
    REQUIRE(hb.size() == 4);
    for (int i = 0; i < 4; ++i) {
      CHECK(hb[static_cast<std::size_t>(i)].n == 1);
      CHECK(hb[static_cast<std::size_t>(i)].u == eo::LaurentPoly(Poly::monomial(F3->one(), static_cast<std::size_t>(i))));
    }

    const auto F7 = Field::make(7, 2);
    const Poly one = Poly::constant(F7->one()), x = Poly::monomial(F7->one(), 1);
    auto expect_shape = [&](const eo::CurveModel& model) {
      const auto b = eo::holomorphic_basis(model);
      REQUIRE(b.size() == 4);
      CHECK(b[0].n == 2);
      CHECK(b[1].n == 3);
      CHECK(b[2].n == 4);
      CHECK(b[3].n == 4);
      CHECK(b[0].u == eo::LaurentPoly(one));
      CHECK(b[1].u == eo::LaurentPoly(one));
      CHECK(b[2].u == eo::LaurentPoly(one));
      CHECK(b[3].u == eo::LaurentPoly(x));
    };
    const Elem xi = F7->generator();
    expect_shape(CyclicCoverModel::make(F7, 5, {1, 1, 1, 2}, {F7->zero(), F7->one(), xi}));
    expect_shape(CyclicCoverModel::make(F7, 5, {1, 1, 1, 2}, {F7->zero(), xi, F7->neg(xi)}));
  }

  TEST_CASE("model validation") {
    const auto F3 = Field::make(3, 1);
    CHECK_THROWS_AS(HyperellipticModel::make(F3, Poly::from_codes(*F3, {0, 1, 0, 0, 0, 0, 0, 0, 1})), eo::InvalidModel);
    CHECK_THROWS_AS(HyperellipticModel::make(F3, Poly::from_codes(*F3, {0, 0, 0, 1})), eo::InvalidModel);
    CHECK_THROWS_AS(HyperellipticModel::make(F3, Poly::from_codes(*F3, {0, 1, 2})), eo::InvalidModel);
    CHECK_THROWS_AS(HyperellipticModel::make(F3, Poly::from_codes(*F3, {0, 2, 0, 0, 0, 2})), eo::InvalidModel);
    const auto F4 = Field::make(2, 2);
    CHECK_THROWS_AS(HyperellipticModel::make(F4, Poly::from_codes(*F4, {0, 1, 0, 1})), eo::InvalidModel);

    const auto F7 = Field::make(7, 1);
    const std::vector<Elem> xi{F7->zero(), F7->one(), F7->from_int(3)};
    CHECK_NOTHROW(CyclicCoverModel::make(F7, 5, {1, 1, 1, 2}, xi));
    CHECK_THROWS_AS(CyclicCoverModel::make(F7, 7, {1, 1, 1, 4}, xi), eo::InvalidModel);
    CHECK_THROWS_AS(CyclicCoverModel::make(F7, 5, {1, 1, 1, 1}, xi), eo::InvalidModel);
    CHECK_THROWS_AS(CyclicCoverModel::make(F7, 6, {1, 1, 2, 2}, xi), eo::InvalidModel);
    CHECK_THROWS_AS(CyclicCoverModel::make(F7, 5, {1, 1, 1, 2}, {F7->one(), F7->zero(), F7->from_int(3)}), eo::InvalidModel);
    CHECK_THROWS_AS(CyclicCoverModel::make(F7, 5, {1, 1, 1, 2}, {F7->zero(), F7->one(), F7->one()}), eo::InvalidModel);
    CHECK_THROWS_AS(CyclicCoverModel::make(F7, 5, {1, 1, 1, 2}, {F7->zero(), F7->one()}), eo::InvalidModel);
    // Characteristic 2 is allowed for cyclic covers with odd m.
    CHECK(CyclicCoverModel::make(F4, 5, {1, 1, 1, 2}, {F4->zero(), F4->one(), F4->generator()}).genus() == 4);
  }

  TEST_CASE("normal form flag") {
    const auto F3 = Field::make(3, 1);
    CHECK(HyperellipticModel::make(F3, Poly::from_codes(*F3, {0, 1, 0, 0, 0, 0, 0, 1, 0, 1})).normal_form());
    CHECK_FALSE(HyperellipticModel::make(F3, Poly::from_codes(*F3, {0, 2, 0, 0, 0, 0, 0, 1, 0, 1})).normal_form());
    CHECK_FALSE(HyperellipticModel::make(F3, Poly::from_codes(*F3, {0, 1, 0, 1})).normal_form());
  }

  TEST_CASE("hyperelliptic to cyclic") {
    const auto F3 = Field::make(3, 1);
    const auto small = HyperellipticModel::make(F3, Poly::from_codes(*F3, {0, 2, 0, 1}));  // x(x-1)(x-2)
    const auto c = eo::hyper_to_cyclic(small);
    CHECK(c.m == 2);
    CHECK(c.genus() == 1);
    CHECK(c.a == std::vector<int>{1, 1, 1, 1});
    CHECK(c.xi.front() == F3->zero());

    const std::vector<std::uint64_t> x9x{0, 1, 0, 0, 0, 0, 0, 0, 0, 1};
    try {
      eo::hyper_to_cyclic(HyperellipticModel::make(F3, Poly::from_codes(*F3, x9x)));
      FAIL("expected NotSplit");
    } catch (const eo::NotSplit& e) {
      CHECK(e.needed_degree() == 4);
    }
    const auto F81 = Field::make(3, 4);
    const auto split = eo::hyper_to_cyclic(HyperellipticModel::make(F81, Poly::from_codes(*F81, x9x)));
    CHECK(split.genus() == 4);
    CHECK(split.a.size() == 10);
    CHECK_THROWS_AS(eo::hyper_to_cyclic(HyperellipticModel::make(F3, Poly::from_codes(*F3, {1, 2, 0, 1}))), eo::InvalidModel);
  }
}
