#include "eo/gf.hpp"

#include <algorithm>
#include <sstream>

namespace eo {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// Polynomials over F_p as ascending coefficient vectors, used only to find
// and validate the modulus.
using PrimePoly = std::vector<std::uint32_t>;

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PrimePoly pp_mod(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = [&] {
    std::uint64_t r = 1, b = m.back(), e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }();
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
    trim(a);
  }
  return a;
}

PrimePoly pp_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return pp_mod(std::move(r), m, p);
}

PrimePoly pp_powmod(PrimePoly base, std::uint64_t e, const PrimePoly& m, std::uint32_t p) {
  PrimePoly r{1};
  base = pp_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = pp_mulmod(r, base, m, p);
    base = pp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return pp_mod(std::move(r), m, p);
}

PrimePoly pp_gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = pp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PrimePoly pp_sub(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// Rabin's test: g | x^{p^k} - x and gcd(g, x^{p^{k/r}} - x) = 1 for every
// prime r | k.
bool irreducible(const PrimePoly& g, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(g.size() - 1);
  if (k == 1) return true;
  const PrimePoly x{0, 1};
  auto frob_iter = [&](unsigned times) {
    PrimePoly r = x;
    for (unsigned i = 0; i < times; ++i) r = pp_powmod(r, p, g, p);
    return r;
  };
  if (!pp_sub(frob_iter(k), x, p).empty()) return false;
  for (std::uint64_t r : prime_factors(k)) {
    PrimePoly h = pp_sub(frob_iter(static_cast<unsigned>(k / r)), x, p);
    if (pp_gcd(g, h, p).size() != 1) return false;
  }
  return true;
}

PrimePoly least_irreducible(std::uint32_t p, unsigned k) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t e = 0; e < count; ++e) {
    PrimePoly g(k + 1, 0);
    std::uint64_t rest = e;
    for (unsigned i = 0; i < k; ++i) {
      g[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    g[k] = 1;
    if (irreducible(g, p)) return g;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

FieldPtr Field::make(std::uint32_t p, unsigned k) {
  if (p < 2 || p > kMaxPrime || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime <= 64, got " + std::to_string(p));
  if (k < 1 || k > kMaxDegree)
    throw std::invalid_argument("extension degree must lie in [1, 12], got " + std::to_string(k));
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order p^k exceeds 2^40");
  }
  return FieldPtr(new Field(p, k, least_irreducible(p, k)));
}

Field::Field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < k_; ++i) q_ *= p_;
  prime_factors_of_order_ = prime_factors(q_ - 1);

  if (q_ <= kTableLimit) {
    const std::size_t q = q_;
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.resize(q);
    frob_.resize(q);
    root_.resize(q);
    for (std::size_t a = 0; a < q; ++a) {
      neg_[a] = static_cast<std::uint16_t>(neg_slow({a}).code);
      for (std::size_t b = 0; b < q; ++b) {
        add_[a * q + b] = static_cast<std::uint16_t>(add_slow({a}, {b}).code);
        mul_[a * q + b] = static_cast<std::uint16_t>(mul_slow({a}, {b}).code);
      }
    }
    for (std::size_t a = 1; a < q; ++a)
      for (std::size_t b = 1; b < q; ++b)
        if (mul_[a * q + b] == 1) {
          inv_[a] = static_cast<std::uint16_t>(b);
          break;
        }
    for (std::size_t a = 0; a < q; ++a) {
      const auto f = pow_slow({a}, p_).code;
      frob_[a] = static_cast<std::uint16_t>(f);
      root_[f] = static_cast<std::uint16_t>(a);
    }
    tabled_ = true;
  }

  for (std::uint64_t c = 1; c < q_; ++c) {
    if (multiplicative_order({c}) == q_ - 1) {
      primitive_ = {c};
      break;
    }
  }
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint64_t>(r)};
}

Elem Field::element(std::uint64_t code) const {
  if (code >= q_)
    throw std::out_of_range("element encoding " + std::to_string(code) + " outside F_" + std::to_string(q_));
  return {code};
}

std::vector<std::uint32_t> Field::digits(Elem x) const {
  std::vector<std::uint32_t> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = static_cast<std::uint32_t>(x.code % p_);
    x.code /= p_;
  }
  return d;
}

Elem Field::from_digits(std::span<const std::uint32_t> d) const {
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p_ + d[i] % p_;
  return {code};
}

Elem Field::add_slow(Elem a, Elem b) const {
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a.code % p_ + b.code % p_) % p_) * scale;
    a.code /= p_;
    b.code /= p_;
    scale *= p_;
  }
  return {out};
}

Elem Field::neg_slow(Elem a) const {
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - a.code % p_) % p_) * scale;
    a.code /= p_;
    scale *= p_;
  }
  return {out};
}

Elem Field::mul_slow(Elem a, Elem b) const {
  if (k_ == 1) return {a.code * b.code % p_};
  const auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  // Reduce with the monic modulus: t^k = -sum_{i<k} m_i t^i.
  for (std::size_t top = prod.size(); top-- > k_;) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    prod[top] = 0;
    for (unsigned i = 0; i < k_; ++i) {
      const std::size_t idx = top - k_ + i;
      prod[idx] = (prod[idx] + (p_ - modulus_[i]) % p_ * c) % p_;
    }
  }
  std::vector<std::uint32_t> out(k_);
  for (unsigned i = 0; i < k_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return from_digits(out);
}

Elem Field::pow_slow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::add(Elem a, Elem b) const {
  return tabled_ ? Elem{add_[a.code * q_ + b.code]} : add_slow(a, b);
}

Elem Field::neg(Elem a) const { return tabled_ ? Elem{neg_[a.code]} : neg_slow(a); }

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  return tabled_ ? Elem{mul_[a.code * q_ + b.code]} : mul_slow(a, b);
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
  return tabled_ ? Elem{inv_[a.code]} : pow_slow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (!tabled_) return pow_slow(a, e);
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::frobenius(Elem x) const { return tabled_ ? Elem{frob_[x.code]} : pow_slow(x, p_); }

Elem Field::pth_root(Elem x) const {
  if (tabled_) return {root_[x.code]};
  return pow_slow(x, q_ / p_);
}

bool Field::in_subfield(Elem x, unsigned d) const {
  Elem y = x;
  for (unsigned i = 0; i < d; ++i) y = frobenius(y);
  return y == x;
}

std::uint64_t Field::multiplicative_order(Elem x) const {
  if (x.code == 0) throw DivisionByZero("zero has no multiplicative order");
  std::uint64_t order = q_ - 1;
  for (std::uint64_t r : prime_factors_of_order_) {
    while (order % r == 0 && pow(x, order / r) == one()) order /= r;
  }
  return order;
}

Elem Field::primitive_element() const { return primitive_; }

std::vector<Elem> Field::primitive_elements() const {
  std::vector<Elem> out;
  for (std::uint64_t c = 1; c < q_; ++c)
    if (multiplicative_order({c}) == q_ - 1) out.push_back({c});
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_ << " (p=" << p_ << ", k=" << k_ << ", modulus=[";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << "])";
  return os.str();
}

FieldEmbedding::FieldEmbedding(FieldPtr from, FieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->p() != to_->p() || to_->k() % from_->k() != 0)
    throw std::invalid_argument("no embedding " + from_->describe() + " -> " + to_->describe());
  const auto& m = from_->modulus();
  Elem root{};
  bool found = false;
  for (std::uint64_t c = 0; c < to_->q() && !found; ++c) {
    // Horner evaluation of the small modulus at c.
    Elem acc = to_->zero();
    for (std::size_t i = m.size(); i-- > 0;) acc = to_->add(to_->mul(acc, {c}), to_->from_int(m[i]));
    if (acc == to_->zero()) {
      root = {c};
      found = true;
    }
  }
  if (!found) throw std::logic_error("modulus has no root in target field");
  Elem pw = to_->one();
  for (unsigned i = 0; i < from_->k(); ++i) {
    powers_.push_back(pw);
    pw = to_->mul(pw, root);
  }
}

Elem FieldEmbedding::operator()(Elem x) const {
  const auto d = from_->digits(x);
  Elem acc = to_->zero();
  for (std::size_t i = 0; i < d.size(); ++i) acc = to_->add(acc, to_->mul(to_->from_int(d[i]), powers_[i]));
  return acc;
}

}  // namespace eo
