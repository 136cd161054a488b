#include <doctest.h>

#include <functional>

#include <map>
#include <random>
#include <set>

#include "eo/poly.hpp"
#include "helpers.hpp"

using eo::Elem;
using eo::Field;
using eo::Poly;

namespace {

Poly codes(const Field& F, std::vector<std::uint64_t> c) { return Poly::from_codes(F, c); }

// Galois orbits of x -> x^q inside F_{q^d} of exact size dividing d.
std::vector<std::vector<Elem>> frobenius_orbits(const Field& big, std::uint64_t q, std::size_t max_size) {
  std::vector<std::vector<Elem>> out;
  std::set<std::uint64_t> seen;
  for (std::uint64_t c = 0; c < big.q(); ++c) {
    if (seen.count(c)) continue;
    std::vector<Elem> orbit{Elem{c}};
    for (Elem x = big.pow(Elem{c}, q); x.code != c; x = big.pow(x, q)) orbit.push_back(x);
    for (Elem x : orbit) seen.insert(x.code);
    if (orbit.size() <= max_size) out.push_back(orbit);
  }
  return out;
}

// disc = prod_{i<j} (r_i - r_j)^2 for every squarefree monic polynomial over
// F_9 of degree 2..4 whose roots are unions of the given orbits.
void check_root_products(const eo::FieldPtr& small, const eo::FieldPtr& big, std::size_t& checked) {
  const eo::FieldEmbedding emb(small, big);
  std::map<std::uint64_t, Elem> back;
  for (std::uint64_t c = 0; c < small->q(); ++c) back[emb(Elem{c}).code] = Elem{c};
  const auto orbits = frobenius_orbits(*big, small->q(), 4);
  const Field& B = *big;

  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t size) {
    if (size >= 2) {
      std::vector<Elem> roots;
      for (auto i : pick) roots.insert(roots.end(), orbits[i].begin(), orbits[i].end());
      const Poly fb = eo::from_roots(B, roots, std::vector<int>(roots.size(), 1));
      std::vector<Elem> c;
      for (Elem e : fb.coeffs()) {
        REQUIRE(back.count(e.code));
        c.push_back(back.at(e.code));
      }
      Elem prod = B.one();
      for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
          const Elem d = B.sub(roots[i], roots[j]);
          prod = B.mul(prod, B.mul(d, d));
        }
      CHECK(emb(eo::discriminant(*small, Poly(c))) == prod);
      ++checked;
    }
    for (std::size_t i = from; i < orbits.size(); ++i) {
      if (size + orbits[i].size() > 4) continue;
      pick.push_back(i);
      rec(i + 1, size + orbits[i].size());
      pick.pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("basic ring operations") {
    const auto F3 = Field::make(3, 1);
    const Field& F = *F3;
    const Poly f = codes(F, {0, 1, 0, 0, 0, 0, 0, 0, 0, 1});
    CHECK(eo::gcd(F, f, eo::derivative(F, f)) == Poly::constant(F.one()));
    CHECK(eo::mul(F, f, Poly::constant(F.one())) == f);
    const auto [q, r] = eo::divmod(F, codes(F, {2, 0, 1}), codes(F, {2, 1}));
    CHECK(q == codes(F, {1, 1}));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(eo::divmod(F, f, Poly{}), eo::DivisionByZero);
    CHECK(codes(F, {1, 2, 0, 0}).degree() == 1);
    CHECK(Poly{}.degree() == -1);
  }

  TEST_CASE("derivative in characteristic 3") {
    const auto F3 = Field::make(3, 1);
    CHECK(eo::derivative(*F3, codes(*F3, {0, 1, 0, 0, 0, 0, 0, 1, 0, 1})) == codes(*F3, {1, 0, 0, 0, 0, 0, 1}));
    CHECK(eo::derivative(*F3, codes(*F3, {2})).is_zero());

    const auto F27 = Field::make(3, 3);
    const Field& F = *F27;
    std::mt19937_64 rng(2);
    for (int it = 0; it < 20; ++it) {
      std::vector<Elem> a(10);
      a[1] = a[9] = F.one();
      for (int i = 2; i <= 8; ++i) a[static_cast<std::size_t>(i)] = testing::random_elem(F, rng);
      const Elem two = F.from_int(2);
      std::vector<Elem> expected(8);
      expected[7] = F.mul(two, a[8]);
      expected[6] = a[7];
      expected[4] = F.mul(two, a[5]);
      expected[3] = a[4];
      expected[1] = F.mul(two, a[2]);
      expected[0] = F.one();
      CHECK(eo::derivative(F, Poly(a)) == Poly(expected));
    }
  }

  TEST_CASE("discriminant pins") {
    const auto F3 = Field::make(3, 1);
    CHECK(eo::discriminant(*F3, codes(*F3, {1, 0, 1})) == Elem{2});
    CHECK(eo::discriminant(*F3, codes(*F3, {0, 1, 0, 0, 0, 0, 0, 1, 0, 1})) == Elem{1});
    CHECK(eo::discriminant(*F3, codes(*F3, {0, 1, 1, 0, 0, 0, 0, 1, 1, 1})) == Elem{2});
    CHECK_THROWS_AS(eo::discriminant(*F3, codes(*F3, {0, 1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(eo::discriminant(*F3, codes(*F3, {0, 1})), std::invalid_argument);
  }

  TEST_CASE("resultant equals the Sylvester determinant") {
    std::mt19937_64 rng(3);
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}, {5, 2}, {7, 1}, {3, 3}, {2, 3}}) {
      const auto F = Field::make(p, k);
      for (int it = 0; it < 150; ++it) {
        const int da = 1 + static_cast<int>(rng() % 6), db = 1 + static_cast<int>(rng() % 6);
        Poly a = testing::random_poly(*F, rng, da, false), b = testing::random_poly(*F, rng, db, false);
        if (a.degree() < 1 || b.degree() < 1) continue;
        CHECK(eo::resultant(*F, a, b) == testing::determinant(*F, testing::sylvester(a, a.degree(), b, b.degree())));
        const int formal = b.degree() + static_cast<int>(rng() % 3);
        CHECK(eo::resultant_formal(*F, a, b, formal) == testing::determinant(*F, testing::sylvester(a, a.degree(), b, formal)));
      }
    }
  }

  TEST_CASE("discriminant matches the Sylvester convention") {
    std::mt19937_64 rng(4);
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {3, 2}, {5, 1}, {7, 2}}) {
      const auto F = Field::make(p, k);
      for (int it = 0; it < 100; ++it) {
        const int d = 2 + static_cast<int>(rng() % 8);
        const Poly f = testing::random_poly(*F, rng, d, true);
        Elem expected = testing::determinant(*F, testing::sylvester(f, d, eo::derivative(*F, f), d - 1));
        if ((d * (d - 1) / 2) % 2) expected = F->neg(expected);
        CHECK(eo::discriminant(*F, f) == expected);
      }
    }
  }

  TEST_CASE("discriminant equals the product of squared root differences (degree <= 4 over F_9, exhaustive)") {
    const auto F9 = Field::make(3, 2);
    std::size_t checked = 0;
    check_root_products(F9, Field::make(3, 8), checked);  // splitting degrees 1, 2, 4
    std::size_t with_cubic = 0;
    check_root_products(F9, Field::make(3, 6), with_cubic);  // splitting degrees 1, 2?, 3
    CHECK(checked > 0);
    CHECK(with_cubic > 0);
  }

  TEST_CASE("squarefree and resultant characterizations") {
    const auto F3 = Field::make(3, 1);
    CHECK(eo::squarefree(*F3, codes(*F3, {0, 1, 0, 0, 0, 0, 0, 0, 0, 1})));
    CHECK_FALSE(eo::squarefree(*F3, codes(*F3, {1, 2, 1})));
    CHECK_FALSE(eo::squarefree(*F3, codes(*F3, {0, 0, 0, 1})));

    std::mt19937_64 rng(5);
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
      const auto F = Field::make(p, k);
      for (int it = 0; it < 300; ++it) {
        const int d = 2 + static_cast<int>(rng() % 5);
        const Poly f = testing::random_poly(*F, rng, d, true);
        if (eo::derivative(*F, f).is_zero()) continue;
        CHECK(eo::squarefree(*F, f) == (eo::discriminant(*F, f).code != 0));
        const Poly g = testing::random_poly(*F, rng, 1 + static_cast<int>(rng() % 3), false);
        if (g.degree() < 1) continue;
        CHECK((eo::resultant(*F, f, g).code == 0) == (eo::gcd(*F, f, g).degree() >= 1));
      }
    }
  }

  TEST_CASE("roots and splitting degree") {
    const auto F3 = Field::make(3, 1);
    const Poly x8p1 = codes(*F3, {1, 0, 0, 0, 0, 0, 0, 0, 1});
    CHECK(eo::roots(*F3, x8p1).empty());
    CHECK(eo::splitting_degree(*F3, x8p1) == 4);
    const Poly split = eo::from_roots(*F3, {Elem{0}, Elem{1}, Elem{2}}, {1, 1, 1});
    CHECK(eo::roots(*F3, split) == std::vector<Elem>{Elem{0}, Elem{1}, Elem{2}});
    CHECK(eo::splitting_degree(*F3, split) == 1);
  }

  TEST_CASE("exact division") {
    const auto F5 = Field::make(5, 1);
    const Poly a = codes(*F5, {1, 1}), b = codes(*F5, {2, 0, 3, 1});
    CHECK(eo::exact_div(*F5, eo::mul(*F5, a, b), a) == b);
    CHECK_FALSE(eo::exact_div(*F5, eo::add(*F5, eo::mul(*F5, a, b), Poly::constant(Elem{1})), a).has_value());
  }

  TEST_CASE("Laurent polynomials normalize their offset") {
    const auto F3 = Field::make(3, 1);
    const eo::LaurentPoly u(codes(*F3, {0, 0, 1, 2}), -3);
    CHECK(u.offset() == -1);
    CHECK(u.low() == -1);
    CHECK(u.high() == 0);
    CHECK(u.coeff(-1) == Elem{1});
    CHECK(u.coeff(0) == Elem{2});
    CHECK_FALSE(u.as_poly().has_value());
    const eo::LaurentPoly v = eo::mul(*F3, u, eo::LaurentPoly(codes(*F3, {0, 1})));
    REQUIRE(v.as_poly().has_value());
    CHECK(*v.as_poly() == codes(*F3, {1, 2}));
    CHECK(eo::sub(*F3, u, u).is_zero());
  }
}
