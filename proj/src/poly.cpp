#include "eo/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace eo {

Poly Poly::monomial(Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::from_codes(const Field& F, const std::vector<std::uint64_t>& codes) {
  std::vector<Elem> v;
  v.reserve(codes.size());
  for (auto c : codes) v.push_back(F.element(c));
  return Poly(std::move(v));
}

std::vector<std::uint64_t> Poly::codes() const {
  std::vector<std::uint64_t> out;
  out.reserve(c_.size());
  for (auto e : c_) out.push_back(e.code);
  return out;
}

Poly add(const Field& F, const Poly& a, const Poly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Elem> out(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(out));
}

Poly neg(const Field& F, const Poly& a) {
  std::vector<Elem> out(a.coeffs());
  for (auto& e : out) e = F.neg(e);
  return Poly(std::move(out));
}

Poly sub(const Field& F, const Poly& a, const Poly& b) { return add(F, a, neg(F, b)); }

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Elem> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].code == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(x[i], y[j]));
  }
  return Poly(std::move(out));
}

Poly scale(const Field& F, const Poly& a, Elem s) {
  std::vector<Elem> out(a.coeffs());
  for (auto& e : out) e = F.mul(e, s);
  return Poly(std::move(out));
}

Poly pow(const Field& F, const Poly& a, unsigned e) {
  Poly r = Poly::constant(F.one());
  Poly base = a;
  while (e) {
    if (e & 1) r = mul(F, r, base);
    e >>= 1;
    if (e) base = mul(F, base, base);
  }
  return r;
}

Poly shift(const Poly& a, std::size_t n) {
  if (a.is_zero()) return {};
  std::vector<Elem> out(n, Elem{});
  out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Elem> rem(a.coeffs());
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<Elem> quo(rem.size() - db);
  const Elem lead_inv = F.inv(b.leading());
  for (std::size_t top = rem.size(); top-- > db;) {
    const Elem c = F.mul(rem[top], lead_inv);
    quo[top - db] = c;
    if (c.code == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[top - db + i] = F.sub(rem[top - db + i], F.mul(c, d[i]));
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::optional<Poly> exact_div(const Field& F, const Poly& a, const Poly& b) {
  auto [q, r] = divmod(F, a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly make_monic(const Field& F, const Poly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.leading()));
}

Poly gcd(const Field& F, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, a);
}

Poly derivative(const Field& F, const Poly& a) {
  if (a.degree() < 1) return {};
  std::vector<Elem> out(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i)
    out[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), a.coeffs()[i]);
  return Poly(std::move(out));
}

Elem evaluate(const Field& F, const Poly& a, Elem x) {
  Elem acc = F.zero();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.coeffs()[i]);
  return acc;
}

Poly from_roots(const Field& F, const std::vector<Elem>& roots, const std::vector<int>& multiplicity) {
  if (roots.size() != multiplicity.size()) throw std::invalid_argument("roots and multiplicities differ in length");
  Poly out = Poly::constant(F.one());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Poly lin{F.neg(roots[i]), F.one()};
    for (int e = 0; e < multiplicity[i]; ++e) out = mul(F, out, lin);
  }
  return out;
}

Elem resultant(const Field& F, const Poly& a0, const Poly& b0) {
  Poly a = a0, b = b0;
  if (a.is_zero() || b.is_zero()) return F.zero();
  Elem acc = F.one();
  for (;;) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) return F.mul(acc, F.pow(b.leading(), static_cast<std::uint64_t>(m)));
    if (m == 0) return F.mul(acc, F.pow(a.leading(), static_cast<std::uint64_t>(n)));
    if (n > m) {
      if ((m * n) % 2 == 1) acc = F.neg(acc);
      std::swap(a, b);
      continue;
    }
    Poly r = divmod(F, a, b).second;
    if (r.is_zero()) return F.zero();
    // Res(a, b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
    if ((m * n) % 2 == 1) acc = F.neg(acc);
    acc = F.mul(acc, F.pow(b.leading(), static_cast<std::uint64_t>(m - r.degree())));
    a = std::move(b);
    b = std::move(r);
  }
}

Elem resultant_formal(const Field& F, const Poly& a, const Poly& b, int formal) {
  if (b.degree() > formal) throw std::invalid_argument("formal degree below actual degree");
  if (a.is_zero()) return F.zero();
  if (b.is_zero()) return a.degree() == 0 && formal == 0 ? F.one() : F.zero();
  // Padding b with zero leading rows multiplies by lc(a) once per extra degree.
  return F.mul(F.pow(a.leading(), static_cast<std::uint64_t>(formal - b.degree())), resultant(F, a, b));
}

Elem discriminant(const Field& F, const Poly& f) {
  const int d = f.degree();
  if (d < 2) throw std::invalid_argument("discriminant needs degree >= 2");
  if (f.leading() != F.one()) throw std::invalid_argument("discriminant needs a monic polynomial");
  const Elem res = resultant_formal(F, f, derivative(F, f), d - 1);
  return (d * (d - 1) / 2) % 2 == 0 ? res : F.neg(res);
}

bool squarefree(const Field& F, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree of the zero polynomial");
  const Poly fp = derivative(F, f);
  if (fp.is_zero()) return f.degree() == 0;
  return gcd(F, f, fp).degree() == 0;
}

std::vector<Elem> roots(const Field& F, const Poly& f) {
  std::vector<Elem> out;
  for (std::uint64_t c = 0; c < F.q(); ++c)
    if (evaluate(F, f, {c}).code == 0) out.push_back({c});
  return out;
}

unsigned splitting_degree(const Field& F, const Poly& f) {
  if (!squarefree(F, f)) throw std::invalid_argument("splitting degree needs a squarefree polynomial");
  if (f.degree() <= 1) return 1;
  const Poly x{F.zero(), F.one()};
  auto powmod = [&](Poly base, std::uint64_t e) {
    Poly r = Poly::constant(F.one());
    base = divmod(F, base, f).second;
    while (e) {
      if (e & 1) r = divmod(F, mul(F, r, base), f).second;
      e >>= 1;
      if (e) base = divmod(F, mul(F, base, base), f).second;
    }
    return r;
  };
  Poly cur = x;
  for (unsigned d = 1; d <= static_cast<unsigned>(f.degree()) * 64; ++d) {
    cur = powmod(cur, F.q());
    if (cur == divmod(F, x, f).second) return d;
  }
  throw std::logic_error("splitting degree search did not terminate");
}

LaurentPoly::LaurentPoly(Poly body, int offset) {
  if (body.is_zero()) return;
  const auto& c = body.coeffs();
  std::size_t low = 0;
  while (c[low].code == 0) ++low;
  if (low == 0) {
    body_ = std::move(body);
  } else {
    body_ = Poly(std::vector<Elem>(c.begin() + static_cast<std::ptrdiff_t>(low), c.end()));
  }
  offset_ = offset + static_cast<int>(low);
}

Elem LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < offset_) return {};
  return body_.coeff(static_cast<std::size_t>(exponent - offset_));
}

std::optional<Poly> LaurentPoly::as_poly() const {
  if (is_zero()) return Poly{};
  if (offset_ < 0) return std::nullopt;
  return shift(body_, static_cast<std::size_t>(offset_));
}

LaurentPoly add(const Field& F, const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int low = std::min(a.offset(), b.offset());
  const Poly pa = shift(a.body(), static_cast<std::size_t>(a.offset() - low));
  const Poly pb = shift(b.body(), static_cast<std::size_t>(b.offset() - low));
  return LaurentPoly(add(F, pa, pb), low);
}

LaurentPoly sub(const Field& F, const LaurentPoly& a, const LaurentPoly& b) {
  return add(F, a, scale(F, b, F.neg(F.one())));
}

LaurentPoly mul(const Field& F, const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPoly(mul(F, a.body(), b.body()), a.offset() + b.offset());
}

LaurentPoly scale(const Field& F, const LaurentPoly& a, Elem s) {
  return LaurentPoly(scale(F, a.body(), s), a.offset());
}

}  // namespace eo
