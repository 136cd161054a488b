#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "eo/gf.hpp"

namespace eo {

/// Dense univariate polynomial; coefficient i multiplies x^i. Always
/// normalized: the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<Elem> coeffs) : c_(coeffs) { normalize(); }

  static Poly constant(Elem c) { return Poly(std::vector<Elem>{c}); }
  static Poly monomial(Elem c, std::size_t degree);
  /// Coefficients given as integer encodings, ascending.
  static Poly from_codes(const Field& F, const std::vector<std::uint64_t>& codes);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{}; }
  Elem leading() const { return c_.empty() ? Elem{} : c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  std::vector<std::uint64_t> codes() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().code == 0) c_.pop_back();
  }
  std::vector<Elem> c_;
};

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly neg(const Field& F, const Poly& a);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, Elem s);
Poly pow(const Field& F, const Poly& a, unsigned e);
/// Multiplies by x^n.
Poly shift(const Poly& a, std::size_t n);
/// Throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
/// Quotient when b divides a, nullopt otherwise.
std::optional<Poly> exact_div(const Field& F, const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Field& F, Poly a, Poly b);
Poly make_monic(const Field& F, const Poly& a);
Poly derivative(const Field& F, const Poly& a);
Elem evaluate(const Field& F, const Poly& a, Elem x);
/// prod (x - r_i)^{e_i}.
Poly from_roots(const Field& F, const std::vector<Elem>& roots, const std::vector<int>& multiplicity);

/// Res_{deg a, deg b}(a, b) with the Sylvester convention (rows of a first).
/// Computed from the Euclidean remainder sequence.
Elem resultant(const Field& F, const Poly& a, const Poly& b);
/// Res_{d, formal}(a, b) where b is padded to formal degree formal >= deg b.
Elem resultant_formal(const Field& F, const Poly& a, const Poly& b, int formal);
/// (-1)^{d(d-1)/2} Res_{d, d-1}(f, f') for monic f of degree d >= 2.
/// Throws std::invalid_argument on a non-monic or low-degree input.
Elem discriminant(const Field& F, const Poly& f);
/// gcd(f, f') = 1 with f' != 0.
bool squarefree(const Field& F, const Poly& f);
/// All roots in the field by exhaustive scan, ascending by encoding.
std::vector<Elem> roots(const Field& F, const Poly& f);
/// Least d >= 1 with every root of the squarefree f in F_{q^d}.
unsigned splitting_degree(const Field& F, const Poly& f);

/// Laurent polynomial x^offset * body(x); body(0) != 0 unless zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Poly body, int offset);
  explicit LaurentPoly(const Poly& p) : LaurentPoly(p, 0) {}

  bool is_zero() const { return body_.is_zero(); }
  int offset() const { return offset_; }
  const Poly& body() const { return body_; }
  /// Lowest and highest exponents; undefined for zero.
  int low() const { return offset_; }
  int high() const { return offset_ + body_.degree(); }
  Elem coeff(int exponent) const;
  /// Polynomial view when no negative exponents occur.
  std::optional<Poly> as_poly() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Poly body_;
  int offset_ = 0;
};

LaurentPoly add(const Field& F, const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const Field& F, const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const Field& F, const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly scale(const Field& F, const LaurentPoly& a, Elem s);

}  // namespace eo
