#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "eo/gf.hpp"
#include "eo/matrix.hpp"
#include "eo/poly.hpp"

namespace testing {

inline eo::Elem random_elem(const eo::Field& F, std::mt19937_64& rng) {
  return eo::Elem{rng() % F.q()};
}

inline eo::Elem random_nonzero(const eo::Field& F, std::mt19937_64& rng) {
  return eo::Elem{1 + rng() % (F.q() - 1)};
}

inline eo::Poly random_poly(const eo::Field& F, std::mt19937_64& rng, int degree, bool monic) {
  std::vector<eo::Elem> c(static_cast<std::size_t>(degree) + 1);
  for (auto& e : c) e = random_elem(F, rng);
  if (monic) c.back() = F.one();
  return eo::Poly(c);
}

/// Determinant by cofactor-free Gaussian elimination, independent of rref.
inline eo::Elem determinant(const eo::Field& F, eo::Matrix a) {
  const std::size_t n = a.rows();
  eo::Elem det = F.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a.at(piv, c).code == 0) ++piv;
    if (piv == n) return F.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, a.at(c, c));
    const eo::Elem inv = F.inv(a.at(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      const eo::Elem factor = F.mul(a.at(r, c), inv);
      for (std::size_t j = c; j < n; ++j) a.at(r, j) = F.sub(a.at(r, j), F.mul(factor, a.at(c, j)));
    }
  }
  return det;
}

/// Sylvester matrix of (a, b) with a at degree da and b padded to degree db.
inline eo::Matrix sylvester(const eo::Poly& a, int da, const eo::Poly& b, int db) {
  const std::size_t n = static_cast<std::size_t>(da + db);
  eo::Matrix s(n, n);
  for (int r = 0; r < db; ++r)
    for (int i = 0; i <= da; ++i) s.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r + i)) = a.coeff(static_cast<std::size_t>(da - i));
  for (int r = 0; r < da; ++r)
    for (int i = 0; i <= db; ++i)
      s.at(static_cast<std::size_t>(db + r), static_cast<std::size_t>(r + i)) = b.coeff(static_cast<std::size_t>(db - i));
  return s;
}

}  // namespace testing
