#include "eo/survey.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "eo/cartier.hpp"
#include "eo/errors.hpp"

namespace eo {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Lcg64 = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0>;

Candidate hyperelliptic(const FieldPtr& F, Poly f) {
  if (!squarefree(*F, f)) return {std::nullopt, skip::kSingular};
  return {CurveModel(HyperellipticModel::make(F, std::move(f))), {}};
}

Candidate cyclic(const FieldPtr& F, int m, std::vector<int> a, std::vector<Elem> xi) {
  for (std::size_t i = 0; i < xi.size(); ++i)
    for (std::size_t j = i + 1; j < xi.size(); ++j)
      if (xi[i] == xi[j]) return {std::nullopt, skip::kRepeatedBranch};
  return {CurveModel(CyclicCoverModel::make(F, m, std::move(a), std::move(xi))), {}};
}

/// x^9 + a7 x^7 + al^3 a7 x^6 + a4 x^4 + al^3 a4 x^3 + x.
Poly eq8_poly(const Field& F, Elem a7, Elem al, Elem a4) {
  const Elem al3 = F.pow(al, 3);
  std::vector<Elem> c(10);
  c[7] = a7;
  c[6] = F.mul(al3, a7);
  c[4] = a4;
  c[3] = F.mul(al3, a4);
  return genus4_normal_form(F, c);
}

/// x^9 + a7 x^7 + al^3 a7 x^6 - al^9 a7 x^4 - al^12 a7 x^3 + x.
Poly eq10_poly(const Field& F, Elem a7, Elem al) {
  std::vector<Elem> c(10);
  c[7] = a7;
  c[6] = F.mul(F.pow(al, 3), a7);
  c[4] = F.neg(F.mul(F.pow(al, 9), a7));
  c[3] = F.neg(F.mul(F.pow(al, 12), a7));
  return genus4_normal_form(F, c);
}

std::vector<Family> make_families() {
  std::vector<Family> out;
  out.push_back({"H4GEN", "y^2 = x^9 + a8 x^8 + ... + a2 x^2 + x, params (a2..a8)", 7,
                 [](const FieldPtr& F, std::span<const Elem> t) {
                   std::vector<Elem> c(10);
                   for (std::size_t i = 0; i < 7; ++i) c[i + 2] = t[i];
                   return hyperelliptic(F, genus4_normal_form(*F, c));
                 }});
  out.push_back({"H4A2", "y^2 = x^9 + a7 x^7 + a6 x^6 + a4 x^4 + a3 x^3 + x, params (a3,a4,a6,a7)", 4,
                 [](const FieldPtr& F, std::span<const Elem> t) {
                   std::vector<Elem> c(10);
                   c[3] = t[0];
                   c[4] = t[1];
                   c[6] = t[2];
                   c[7] = t[3];
                   return hyperelliptic(F, genus4_normal_form(*F, c));
                 }});
  out.push_back({"H4E8", "y^2 = x^9 + a7 x^7 + al^3 a7 x^6 + a4 x^4 + al^3 a4 x^3 + x, params (a7,al,a4)", 3,
                 [](const FieldPtr& F, std::span<const Elem> t) { return hyperelliptic(F, eq8_poly(*F, t[0], t[1], t[2])); }});
  out.push_back({"H4E10", "y^2 = x^9 + a7 x^7 + al^3 a7 x^6 - al^9 a7 x^4 - al^12 a7 x^3 + x, params (a7,al)", 2,
                 [](const FieldPtr& F, std::span<const Elem> t) { return hyperelliptic(F, eq10_poly(*F, t[0], t[1])); }});
  out.push_back({"C512", "y^5 = x (x - 1)(x - xi), xi outside the prime field", 1,
                 [](const FieldPtr& F, std::span<const Elem> t) {
                   if (F->in_prime_field(t[0])) return Candidate{std::nullopt, skip::kPrimeFieldXi};
                   return cyclic(F, 5, {1, 1, 1, 2}, {F->zero(), F->one(), t[0]});
                 }});
  out.push_back({"C512S", "y^5 = x (x - xi)(x + xi), xi != 0", 1,
                 [](const FieldPtr& F, std::span<const Elem> t) {
                   return cyclic(F, 5, {1, 1, 1, 2}, {F->zero(), t[0], F->neg(t[0])});
                 }});
  out.push_back({"KUDO", "y^3 = x (x - xi)(x - xi^3)(x - xi^5)(x - xi^7), xi a primitive 8th root of unity", 1,
                 [](const FieldPtr& F, std::span<const Elem> t) {
                   if (t[0] == F->zero() || F->multiplicative_order(t[0]) != 8)
                     return Candidate{std::nullopt, skip::kNotPrimitive8};
                   const Elem x = t[0];
                   return cyclic(F, 3, {1, 1, 1, 1, 1, 1}, {F->zero(), x, F->pow(x, 3), F->pow(x, 5), F->pow(x, 7)});
                 }});
  return out;
}

/// Runs body(state, index) for index in [0, count) on worker_count() threads,
/// each with its own copy of `init`, and returns the per-worker states.
template <class State, class Body>
std::vector<State> parallel_states(std::uint64_t count, const State& init, Body body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(count, 1)));
  constexpr std::uint64_t kChunk = 2048;
  std::vector<State> states(workers, init);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](unsigned w) {
    try {
      for (;;) {
        const std::uint64_t start = next.fetch_add(kChunk);
        if (start >= count) break;
        const std::uint64_t end = std::min(count, start + kChunk);
        for (std::uint64_t i = start; i < end; ++i) body(states[w], i);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return states;
}

bool is_type(const Observation& o, std::initializer_list<int> mu) { return o.eo_type.mu == std::vector<int>(mu); }

}  // namespace

Poly genus4_normal_form(const Field& F, const std::vector<Elem>& coeffs) {
  std::vector<Elem> c(10);
  for (std::size_t i = 0; i < coeffs.size() && i < 10; ++i) c[i] = coeffs[i];
  c[0] = F.zero();
  c[1] = F.one();
  c[9] = F.one();
  return Poly(std::move(c));
}

const std::vector<Family>& builtin_families() {
  static const std::vector<Family> families = make_families();
  return families;
}

const Family& find_family(const std::string& id) {
  for (const auto& f : builtin_families())
    if (f.id == id) return f;
  throw std::invalid_argument("unknown family '" + id + "'");
}

Observation observe(const CurveModel& model) {
  Observation o;
  o.genus = genus(model);
  const Field& F = *field_of(model);
  const Matrix h = std::holds_alternative<HyperellipticModel>(model)
                       ? hyperelliptic_cartier_manin(std::get<HyperellipticModel>(model))
                       : cartier_manin(model);
  o.a_number = o.genus - static_cast<int>(rank(F, h));
  o.p_rank = static_cast<int>(p_rank_of(F, h));
  if (auto pinned = pinned_type(o.genus, o.a_number, o.p_rank)) {
    o.eo_type = std::move(*pinned);
    return o;
  }
  const Classification c = classify(model);
  if (c.a_number != o.a_number || c.p_rank != o.p_rank)
    throw InvariantViolation("fast-path invariants disagree with the full classification");
  o.eo_type = c.eo_type;
  o.full = true;
  return o;
}

std::uint64_t parameter_space_size(const Field& F, unsigned arity) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < arity; ++i) {
    if (size > UINT64_MAX / F.q()) return UINT64_MAX;
    size *= F.q();
  }
  return size;
}

std::vector<Elem> exact_tuple(const Field& F, unsigned arity, std::uint64_t index) {
  std::vector<Elem> t(arity);
  for (unsigned j = 0; j < arity; ++j) {
    t[j] = Elem{index % F.q()};
    index /= F.q();
  }
  return t;
}

std::vector<Elem> sample_tuple(const Field& F, unsigned arity, std::uint64_t seed, std::uint64_t index) {
  Lcg64 engine(splitmix64(seed ^ splitmix64(index)));
  std::vector<Elem> t(arity);
  for (unsigned j = 0; j < arity; ++j) t[j] = Elem{(engine() >> 32) % F.q()};
  return t;
}

unsigned worker_count() {
  if (const char* env = std::getenv("EO_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void Tally::merge(const Tally& other) {
  genus = std::max(genus, other.genus);
  total += other.total;
  full_classifications += other.full_classifications;
  for (const auto& [k, v] : other.strata) strata[k] += v;
  for (const auto& [k, v] : other.marginals) marginals[k] += v;
  for (const auto& [k, v] : other.skips) skips[k] += v;
}

std::uint64_t Tally::count(const EOType& t) const {
  const auto it = strata.find(t);
  return it == strata.end() ? 0 : it->second;
}

std::uint64_t Tally::skipped() const {
  std::uint64_t s = 0;
  for (const auto& [k, v] : skips) s += v;
  return s;
}

std::uint64_t Tally::classified() const {
  std::uint64_t s = 0;
  for (const auto& [k, v] : strata) s += v;
  return s;
}

bool ClaimResult::passed() const { return exceptions() == 0; }

std::uint64_t ClaimResult::exceptions() const {
  switch (kind) {
    case ClaimKind::PropertyImpliesEquation: return table[0][1];
    case ClaimKind::EquationImpliesProperty: return table[1][0];
    case ClaimKind::Equivalent: return table[0][1] + table[1][0];
  }
  return 0;
}

ScanReport scan(const Family& family, const FieldPtr& field, const ScanMode& mode, const std::vector<LocusClaim>& claims) {
  const Field& F = *field;
  const std::uint64_t space = parameter_space_size(F, family.arity);
  if (mode.exact && space > kMaxExactSpace) {
    std::ostringstream os;
    os << "exact scan of " << family.id << " over " << F.describe() << " needs " << F.q() << "^" << family.arity
       << " tuples, above the 2^33 limit; use sampling";
    throw SpaceTooLarge(os.str());
  }
  const std::uint64_t count = mode.exact ? space : mode.samples;

  ScanReport init;
  init.tally.family = family.id;
  init.tally.p = F.p();
  init.tally.k = F.k();
  init.tally.modulus = F.modulus();
  init.tally.exact = mode.exact;
  init.tally.samples = mode.exact ? 0 : mode.samples;
  init.tally.seed = mode.exact ? 0 : mode.seed;
  init.tally.space_size = std::pow(static_cast<double>(F.q()), family.arity);
  for (const auto& c : claims) init.claims.push_back({c.name, c.kind, {{0, 0}, {0, 0}}});

  auto states = parallel_states(count, init, [&](ScanReport& r, std::uint64_t i) {
    const auto t = mode.exact ? exact_tuple(F, family.arity, i) : sample_tuple(F, family.arity, mode.seed, i);
    ++r.tally.total;
    const Candidate cand = family.generate(field, t);
    if (!cand.model) {
      ++r.tally.skips[cand.skip];
      return;
    }
    const Observation o = observe(*cand.model);
    r.tally.genus = o.genus;
    ++r.tally.strata[o.eo_type];
    ++r.tally.marginals[{o.a_number, o.p_rank}];
    if (o.full) ++r.tally.full_classifications;
    for (std::size_t c = 0; c < claims.size(); ++c) {
      const auto& claim = claims[c];
      if (claim.domain && !claim.domain(F, t)) continue;
      const bool eq = claim.equation(F, t);
      const bool prop = claim.property ? claim.property(o) : true;
      ++r.claims[c].table[eq][prop];
    }
  });

  ScanReport out = std::move(states.front());
  for (std::size_t w = 1; w < states.size(); ++w) {
    out.tally.merge(states[w].tally);
    for (std::size_t c = 0; c < out.claims.size(); ++c)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) out.claims[c].table[a][b] += states[w].claims[c].table[a][b];
  }
  return out;
}

std::vector<LocusClaim> locus_claims(const std::string& family_id) {
  using Span = std::span<const Elem>;
  std::vector<LocusClaim> out;
  auto never = [](const Field&, Span) { return false; };
  auto always = [](const Field&, Span) { return true; };
  if (family_id == "H4GEN") {
    // t = (a2, a3, a4, a5, a6, a7, a8).
    out.push_back({"a-number at most 2", ClaimKind::PropertyImpliesEquation, {}, never,
                   [](const Observation& o) { return o.a_number >= 3; }});
    out.push_back({"rank(H)=3 implies the a=1 locus equation", ClaimKind::PropertyImpliesEquation, {},
                   [](const Field& F, Span t) {
                     const Elem a2 = t[0], a3 = t[1], a4 = t[2], a5 = t[3], a6 = t[4], a7 = t[5], a8 = t[6];
                     const Elem l = F.mul(F.sub(F.mul(a8, a6), a5), F.sub(F.mul(a2, a4), a5));
                     const Elem r = F.mul(F.sub(a2, F.mul(a3, a8)), F.sub(F.mul(a2, a7), a8));
                     return F.add(l, r) == F.zero();
                   },
                   [](const Observation& o) { return o.a_number == 1; }});
    out.push_back({"a=2 iff a2=a5=a8=0 (smooth members)", ClaimKind::Equivalent, {},
                   [](const Field&, Span t) { return t[0].code == 0 && t[3].code == 0 && t[6].code == 0; },
                   [](const Observation& o) { return o.a_number == 2; }});
    out.push_back({"[3,1] implies a3 a7 = a4 a6", ClaimKind::PropertyImpliesEquation, {},
                   [](const Field& F, Span t) { return F.mul(t[1], t[5]) == F.mul(t[2], t[4]); },
                   [](const Observation& o) { return is_type(o, {3, 1}); }});
    out.push_back({"[4,3] only for y^2 = x^9 + x", ClaimKind::Equivalent, {},
                   [](const Field&, Span t) {
                     for (const Elem e : t)
                       if (e.code != 0) return false;
                     return true;
                   },
                   [](const Observation& o) { return is_type(o, {4, 3}); }});
  } else if (family_id == "H4A2") {
    // t = (a3, a4, a6, a7).
    out.push_back({"every smooth member has a=2", ClaimKind::EquationImpliesProperty, {}, always,
                   [](const Observation& o) { return o.a_number == 2; }});
    out.push_back({"[3,1] implies a3 a7 = a4 a6", ClaimKind::PropertyImpliesEquation, {},
                   [](const Field& F, Span t) { return F.mul(t[0], t[3]) == F.mul(t[1], t[2]); },
                   [](const Observation& o) { return is_type(o, {3, 1}); }});
    out.push_back({"[3,1] implies disc = a3 a4^2 + a6 a7 + 1", ClaimKind::PropertyImpliesEquation, {},
                   [](const Field& F, Span t) {
                     std::vector<Elem> c(10);
                     c[3] = t[0];
                     c[4] = t[1];
                     c[6] = t[2];
                     c[7] = t[3];
                     const Elem rhs = F.add(F.add(F.mul(t[0], F.mul(t[1], t[1])), F.mul(t[2], t[3])), F.one());
                     return discriminant(F, genus4_normal_form(F, c)) == rhs;
                   },
                   [](const Observation& o) { return is_type(o, {3, 1}); }});
    out.push_back({"[3,2] with a7 != 0 implies the [3,2] relation for al = (a6/a7)^(1/3)",
                   ClaimKind::PropertyImpliesEquation, [](const Field&, Span t) { return t[3].code != 0; },
                   [](const Field& F, Span t) {
                     const Elem a3 = t[0], a4 = t[1], a6 = t[2], a7 = t[3];
                     const Elem al = F.pth_root(F.div(a6, a7));
                     const Elem al3 = F.pow(al, 3);
                     if (a3 != F.mul(al3, a4) || a6 != F.mul(al3, a7)) return false;
                     const Elem lhs = F.add(F.mul(al3, F.mul(a7, a7)), F.mul(al, a7));
                     const Elem rhs = F.add(a4, F.mul(al, F.mul(a4, a4)));
                     return lhs == rhs;
                   },
                   [](const Observation& o) { return is_type(o, {3, 2}); }});
  } else if (family_id == "H4E8") {
    // t = (a7, al, a4).
    auto nonzero = [](const Field&, Span t) { return t[0].code != 0 && t[1].code != 0 && t[2].code != 0; };
    out.push_back({"disc = (a4 al + a7 al^2 + 1)^9", ClaimKind::PropertyImpliesEquation, {},
                   [](const Field& F, Span t) {
                     const Elem base = F.add(F.add(F.mul(t[2], t[1]), F.mul(t[0], F.mul(t[1], t[1]))), F.one());
                     return discriminant(F, eq8_poly(F, t[0], t[1], t[2])) == F.pow(base, 9);
                   },
                   {}});
    out.push_back({"[3,2] relation with a4 a7 al != 0 iff type [3,2]", ClaimKind::Equivalent, nonzero,
                   [](const Field& F, Span t) {
                     const Elem a7 = t[0], al = t[1], a4 = t[2];
                     const Elem lhs = F.add(F.mul(F.pow(al, 3), F.mul(a7, a7)), F.mul(al, a7));
                     return lhs == F.add(a4, F.mul(al, F.mul(a4, a4)));
                   },
                   [](const Observation& o) { return is_type(o, {3, 2}); }});
  } else if (family_id == "H4E10") {
    // t = (a7, al).
    auto nonzero = [](const Field&, Span t) { return t[0].code != 0 && t[1].code != 0; };
    auto boundary = [](const Field& F, Span t) {
      const Elem a7 = t[0], al = t[1];
      const Elem lhs = F.mul(F.mul(F.pow(al, 3), F.sub(F.pow(al, 16), F.one())), a7);
      return lhs == F.add(F.pow(al, 9), al);
    };
    out.push_back({"a7 al != 0: [4,2] iff al^3 (al^16 - 1) a7 = al^9 + al", ClaimKind::Equivalent, nonzero, boundary,
                   [](const Observation& o) { return is_type(o, {4, 2}); }});
    out.push_back({"a7 al != 0: [4,1] off the boundary", ClaimKind::Equivalent, nonzero,
                   [boundary](const Field& F, Span t) { return !boundary(F, t); },
                   [](const Observation& o) { return is_type(o, {4, 1}); }});
  }
  return out;
}

std::vector<DimensionRow> dimension_estimate(const Tally& tally, double tolerance, int min_dim) {
  const double q = std::pow(static_cast<double>(tally.p), tally.k);
  std::vector<DimensionRow> rows;
  for (const EOType& t : all_eo_types(4)) {
    DimensionRow row{t, 7 - t.codimension(), tally.count(t), 0, false, false};
    double scaled = static_cast<double>(row.count);
    if (!tally.exact && tally.samples > 0) scaled *= tally.space_size / static_cast<double>(tally.samples);
    row.estimate = row.count == 0 ? std::nan("") : std::log(scaled) / std::log(q);
    row.checked = row.expected >= min_dim;
    row.within = row.count > 0 && std::fabs(row.estimate - row.expected) <= tolerance;
    rows.push_back(row);
  }
  return rows;
}

Poly kudo_product(const Field& F, Elem xi) {
  return from_roots(F, {F.zero(), xi, F.pow(xi, 3), F.pow(xi, 5), F.pow(xi, 7)}, {1, 1, 1, 1, 1});
}

namespace {

std::string distribution(const std::map<std::string, std::uint64_t>& seen) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : seen) {
    os << (first ? "" : " ") << k << "x" << v;
    first = false;
  }
  return os.str();
}

SuiteRow suite_row(const std::string& family_id, std::uint32_t p, const std::string& claim,
                   const std::function<bool(const Field&, Elem)>& xi_filter,
                   const std::function<bool(const Classification&)>& holds) {
  const FieldPtr F = Field::make(p, 2);
  const Family& fam = find_family(family_id);
  SuiteRow row{family_id, p, claim, 0, 0, false, {}};
  std::map<std::string, std::uint64_t> seen;
  for (std::uint64_t code = 0; code < F->q(); ++code) {
    const Elem xi{code};
    if (!xi_filter(*F, xi)) continue;
    const Elem t[1] = {xi};
    const Candidate cand = fam.generate(F, t);
    if (!cand.model) continue;
    const Classification c = classify(*cand.model);
    ++row.checked;
    if (holds(c)) ++row.matched;
    std::string key = c.eo_type.to_string();
    if (c.final_type.v.size() > 2) key += c.final_type.v[2] == 0 ? "/v2=0" : "";
    ++seen[key];
  }
  row.passed = row.checked > 0 && row.matched == row.checked;
  row.detail = "observed " + distribution(seen);
  return row;
}

}  // namespace

std::vector<SuiteRow> cyclic_suite() {
  std::vector<SuiteRow> rows;
  auto outside_prime = [](const Field& F, Elem x) { return !F.in_prime_field(x); };
  auto prime_nonzero = [](const Field& F, Elem x) { return x.code != 0 && F.in_prime_field(x); };
  auto nonzero = [](const Field&, Elem x) { return x.code != 0; };
  auto any = [](const Field&, Elem) { return true; };
  for (std::uint32_t p : {3u, 7u, 13u})
    rows.push_back(suite_row("C512", p, "type [4,2] for every xi outside F_p", outside_prime,
                             [](const Classification& c) { return c.eo_type.mu == std::vector<int>{4, 2}; }));
  for (std::uint32_t p : {3u, 7u, 13u})
    rows.push_back(suite_row("C512S", p, "type [4,3] with v(2)=0 for every xi in F_p^*", prime_nonzero,
                             [](const Classification& c) {
                               return c.eo_type.mu == std::vector<int>{4, 3} && c.meets_ss_criterion;
                             }));
  for (std::uint32_t p : {19u, 29u})
    rows.push_back(suite_row("C512S", p, "superspecial for every xi in F_{p^2}^*", nonzero,
                             [](const Classification& c) { return c.superspecial; }));
  for (std::uint32_t p : {5u, 11u, 17u, 23u}) {
    rows.push_back(suite_row("KUDO", p, "superspecial for every primitive 8th root xi", any,
                             [](const Classification& c) { return c.superspecial; }));
    const FieldPtr F = Field::make(p, 2);
    SuiteRow identity{"KUDO", p, "x(x-xi)(x-xi^3)(x-xi^5)(x-xi^7) = x^5 + x", 0, 0, false, {}};
    const Poly target = Poly::from_codes(*F, {0, 1, 0, 0, 0, 1});
    for (std::uint64_t code = 1; code < F->q(); ++code) {
      const Elem xi{code};
      if (F->multiplicative_order(xi) != 8) continue;
      ++identity.checked;
      if (kudo_product(*F, xi) == target) ++identity.matched;
    }
    identity.passed = identity.checked > 0 && identity.matched == identity.checked;
    identity.detail = std::to_string(identity.checked) + " primitive 8th roots";
    rows.push_back(identity);
  }
  return rows;
}

}  // namespace eo
