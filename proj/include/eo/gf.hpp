#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eo {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element of F_{p^k}, identified by its integer encoding sum_i c_i p^i where
/// c_i is the coefficient of t^i in the polynomial basis.
struct Elem {
  std::uint64_t code = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field F_{p^k} = F_p[t]/(modulus), with the modulus chosen as the
/// least monic irreducible polynomial of degree k under the encoding order of
/// its lower coefficients. Immutable after construction.
class Field {
 public:
  static constexpr std::uint32_t kMaxPrime = 64;
  static constexpr unsigned kMaxDegree = 12;
  static constexpr std::uint64_t kTableLimit = 1024;
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 40;

  /// Throws std::invalid_argument for a non-prime p, k outside [1, 12] or
  /// p^k above kMaxOrder.
  static FieldPtr make(std::uint32_t p, unsigned k);

  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }
  /// Ascending coefficients of the monic modulus (length k + 1). For k = 1 the
  /// degenerate modulus t is reported.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  /// The class of t (or 0 in the prime field's degenerate case k = 1).
  Elem generator() const { return k_ == 1 ? zero() : Elem{p_}; }
  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(std::int64_t n) const;
  /// Validates an encoding.
  Elem element(std::uint64_t code) const;

  std::vector<std::uint32_t> digits(Elem x) const;
  Elem from_digits(std::span<const std::uint32_t> d) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  Elem frobenius(Elem x) const;
  /// Unique y with y^p = x.
  Elem pth_root(Elem x) const;
  /// x^{p^d} = x.
  bool in_subfield(Elem x, unsigned d) const;
  bool in_prime_field(Elem x) const { return frobenius(x) == x; }

  std::uint64_t multiplicative_order(Elem x) const;
  /// Least element in encoding order of multiplicative order q - 1.
  Elem primitive_element() const;
  /// All generators of F_q^*, ascending by encoding.
  std::vector<Elem> primitive_elements() const;

  std::string describe() const;

 private:
  Field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;
  Elem mul_slow(Elem a, Elem b) const;
  Elem pow_slow(Elem a, std::uint64_t e) const;

  std::uint32_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> prime_factors_of_order_;
  Elem primitive_{};

  // Dense tables when q <= kTableLimit.
  bool tabled_ = false;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint16_t> frob_;
  std::vector<std::uint16_t> root_;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Embedding F_{p^k} -> F_{p^K} for k | K, sending t to the least root (by
/// encoding) of the small field's modulus.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr from, FieldPtr to);
  Elem operator()(Elem x) const;
  const FieldPtr& source() const { return from_; }
  const FieldPtr& target() const { return to_; }

 private:
  FieldPtr from_;
  FieldPtr to_;
  std::vector<Elem> powers_;  // images of 1, t, ..., t^{k-1}
};

}  // namespace eo
