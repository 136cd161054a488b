#include <doctest.h>

#include <numeric>
#include <random>

#include "eo/gf.hpp"
#include "eo/poly.hpp"
#include "helpers.hpp"

using eo::Elem;
using eo::Field;

namespace {

// Least monic irreducible of degree k over F_p by trial division with every
// monic polynomial of degree 1..k/2. Returns the lower coefficients.
std::vector<std::uint32_t> brute_force_modulus(std::uint32_t p, unsigned k) {
  const auto Fp = Field::make(p, 1);
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  auto poly_of = [&](std::uint64_t code, unsigned deg) {
    std::vector<Elem> c;
    for (unsigned i = 0; i < deg; ++i, code /= p) c.push_back(Elem{code % p});
    c.push_back(Fp->one());
    return eo::Poly(c);
  };
  for (std::uint64_t code = 0; code < count; ++code) {
    const eo::Poly f = poly_of(code, k);
    bool irreducible = true;
    for (unsigned d = 1; 2 * d <= k && irreducible; ++d) {
      std::uint64_t n = 1;
      for (unsigned i = 0; i < d; ++i) n *= p;
      for (std::uint64_t g = 0; g < n && irreducible; ++g)
        irreducible = !divmod(*Fp, f, poly_of(g, d)).second.is_zero();
    }
    if (irreducible) {
      std::vector<std::uint32_t> out;
      for (unsigned i = 0; i < k; ++i) out.push_back(static_cast<std::uint32_t>(f.coeff(i).code));
      out.push_back(1);
      return out;
    }
  }
  return {};
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t out = n;
  for (auto r : eo::prime_factors(n)) out = out / r * (r - 1);
  return out;
}

}  // namespace

TEST_SUITE("gf") {
  TEST_CASE("prime field has the degenerate modulus t") {
    CHECK(Field::make(3, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK(Field::make(3, 1)->q() == 3);
  }

  TEST_CASE("F_9 modulus is t^2+1") { CHECK(Field::make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1}); }

  TEST_CASE("canonical modulus agrees with trial division") {
    const std::vector<std::pair<std::uint32_t, unsigned>> cases = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3},
                                                                   {3, 4}, {3, 5}, {3, 6}, {5, 2}, {5, 3}, {5, 4}, {7, 2},
                                                                   {7, 3}, {11, 2}, {13, 2}, {29, 2}};
    for (const auto& [p, k] : cases) {
      CAPTURE(p);
      CAPTURE(k);
      CHECK(Field::make(p, k)->modulus() == brute_force_modulus(p, k));
    }
  }

  TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(3, 13), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(67, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(61, 7), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(3, 2)->element(9), std::out_of_range);
    CHECK(Field::make(3, 2)->element(8).code == 8);
  }

  TEST_CASE("small arithmetic facts") {
    const auto F9 = Field::make(3, 2);
    const Elem t = F9->generator();
    CHECK(F9->mul(t, t) == F9->from_int(2));
    CHECK(F9->inv(F9->one()) == F9->one());
    CHECK_THROWS_AS(F9->inv(F9->zero()), eo::DivisionByZero);
    const auto F3 = Field::make(3, 1);
    CHECK(F3->pow(Elem{2}, 2) == F3->one());
    CHECK(F3->from_int(-1) == Elem{2});
    CHECK(F9->pth_root(t) == F9->mul(F9->from_int(2), t));
    CHECK(F9->pth_root(F9->one()) == F9->one());
    for (std::uint64_t x = 0; x < 3; ++x) CHECK(F3->pth_root(Elem{x}) == Elem{x});
  }

  TEST_CASE("encoding round-trips through digits") {
    const auto F = Field::make(5, 3);
    for (std::uint64_t c = 0; c < F->q(); ++c) {
      const auto d = F->digits(Elem{c});
      REQUIRE(d.size() == 3);
      CHECK(F->from_digits(d).code == c);
    }
  }

  TEST_CASE("Frobenius is an automorphism inverted by pth_root (q <= 81, exhaustive)") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {2, 4}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}}) {
      const auto F = Field::make(p, k);
      CAPTURE(F->q());
      for (std::uint64_t a = 0; a < F->q(); ++a) {
        const Elem x{a};
        CHECK(F->frobenius(F->pth_root(x)) == x);
        CHECK(F->pth_root(F->frobenius(x)) == x);
        CHECK(F->frobenius(x) == F->pow(x, p));
        for (std::uint64_t b = 0; b < F->q(); ++b) {
          const Elem y{b};
          if (F->frobenius(F->add(x, y)) != F->add(F->frobenius(x), F->frobenius(y)) ||
              F->frobenius(F->mul(x, y)) != F->mul(F->frobenius(x), F->frobenius(y)))
            FAIL("Frobenius is not a homomorphism at " << a << ", " << b);
        }
      }
    }
  }

  TEST_CASE("field axioms on table and digit-vector fields") {
    std::mt19937_64 rng(1);
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 3}, {3, 7}, {5, 5}, {2, 11}, {13, 3}}) {
      const auto F = Field::make(p, k);
      CAPTURE(F->q());
      for (int i = 0; i < 300; ++i) {
        const Elem a = testing::random_elem(*F, rng), b = testing::random_elem(*F, rng), c = testing::random_elem(*F, rng);
        CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
        CHECK(F->add(a, F->neg(a)) == F->zero());
        CHECK(F->sub(F->add(a, b), b) == a);
        CHECK(F->pow(a, F->q()) == a);
        if (a.code) CHECK(F->mul(a, F->inv(a)) == F->one());
        CHECK(F->pth_root(F->pow(a, p)) == a);
      }
    }
  }

  TEST_CASE("primitive elements") {
    CHECK(Field::make(3, 2)->primitive_element() == Elem{4});
    CHECK(Field::make(3, 1)->primitive_element() == Elem{2});
    const auto F27 = Field::make(3, 3);
    Elem least{};
    for (std::uint64_t c = 1; c < 27; ++c) {
      bool generator = true;
      for (std::uint64_t e = 1; e < 26 && generator; ++e) generator = F27->pow(Elem{c}, e) != F27->one();
      if (generator) {
        least = Elem{c};
        break;
      }
    }
    CHECK(F27->primitive_element() == least);
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}, {3, 3}, {5, 2}, {7, 2}, {2, 4}, {3, 5}}) {
      const auto F = Field::make(p, k);
      const auto prims = F->primitive_elements();
      CHECK(prims.size() == euler_phi(F->q() - 1));
      CHECK(std::is_sorted(prims.begin(), prims.end()));
      CHECK(F->multiplicative_order(F->primitive_element()) == F->q() - 1);
    }
  }

  TEST_CASE("subfield membership") {
    const auto F = Field::make(3, 4);
    std::uint64_t in_f9 = 0, in_f3 = 0;
    for (std::uint64_t c = 0; c < F->q(); ++c) {
      in_f9 += F->in_subfield(Elem{c}, 2);
      in_f3 += F->in_prime_field(Elem{c});
    }
    CHECK(in_f9 == 9);
    CHECK(in_f3 == 3);
  }

  TEST_CASE("embedding is a ring homomorphism") {
    const auto small = Field::make(3, 2), big = Field::make(3, 4);
    const eo::FieldEmbedding emb(small, big);
    for (std::uint64_t a = 0; a < 9; ++a)
      for (std::uint64_t b = 0; b < 9; ++b) {
        CHECK(emb(small->add(Elem{a}, Elem{b})) == big->add(emb(Elem{a}), emb(Elem{b})));
        CHECK(emb(small->mul(Elem{a}, Elem{b})) == big->mul(emb(Elem{a}), emb(Elem{b})));
      }
    CHECK_THROWS_AS(eo::FieldEmbedding(Field::make(3, 3), big), std::invalid_argument);
  }

  TEST_CASE("make is deterministic") {
    CHECK(Field::make(7, 3)->modulus() == Field::make(7, 3)->modulus());
    CHECK(Field::make(7, 3)->primitive_element() == Field::make(7, 3)->primitive_element());
  }
}
