#include "eo/eotype.hpp"

#include <algorithm>
#include <sstream>

#include "eo/cartier.hpp"
#include "eo/derham.hpp"
#include "eo/errors.hpp"

namespace eo {

Subspace::Subspace(const Field& F, const Matrix& spanning_rows) : basis_(rref(F, spanning_rows)) {}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(Matrix(0, ambient)); }

Subspace Subspace::full(const Field& F, std::size_t ambient) { return Subspace(Matrix::identity(F, ambient)); }

Subspace Subspace::leading(const Field& F, std::size_t count, std::size_t ambient) {
  Matrix m(count, ambient);
  for (std::size_t i = 0; i < count; ++i) m.at(i, i) = F.one();
  return Subspace(std::move(m));
}

bool Subspace::contains(const Field& F, const Subspace& other) const {
  if (other.dim() > dim()) return false;
  return rank(F, stack(basis_, other.basis_)) == dim();
}

Subspace v_image(const Field& F, const Matrix& v, const Subspace& w) {
  if (w.dim() == 0) return Subspace::zero(w.ambient());
  // Row w maps to (V w^{(1/p)})^T = w^{(1/p)} V^T.
  return Subspace(F, multiply(F, pth_root(F, w.basis()), transpose(v)));
}

Subspace perp(const Field& F, const Matrix& pairing, const Subspace& w, std::size_t g) {
  const std::size_t n = w.ambient();
  bool inside_h0 = true;
  for (std::size_t r = 0; r < w.dim() && inside_h0; ++r)
    for (std::size_t c = g; c < n; ++c)
      if (w.basis().at(r, c).code != 0) {
        inside_h0 = false;
        break;
      }
  if (!inside_h0 && !w.contains(F, Subspace::leading(F, g, n)))
    throw UnsupportedSubspace("orthogonal complement requested for a subspace not comparable with H^0");
  if (w.dim() == 0) return Subspace::full(F, n);
  // <x, w> = x^T P w, so each row w gives the constraint (w^T P^T) x = 0.
  return Subspace(F, nullspace(F, multiply(F, w.basis(), transpose(pairing))));
}

std::vector<Subspace> canonical_filtration(const Field& F, const Matrix& v, const Matrix& pairing, std::size_t g) {
  const std::size_t n = 2 * g;
  std::vector<Subspace> members{Subspace::zero(n), Subspace::full(F, n)};
  auto add = [&](Subspace s) {
    if (std::find(members.begin(), members.end(), s) == members.end()) members.push_back(std::move(s));
  };
  std::size_t processed = 0;
  std::size_t passes = 0;
  while (processed < members.size()) {
    if (++passes > 8 * g + 1) throw InvariantViolation("canonical filtration did not close within 8g passes");
    const std::size_t end = members.size();
    for (; processed < end; ++processed) {
      const Subspace current = members[processed];
      add(v_image(F, v, current));
      add(perp(F, pairing, current, g));
    }
  }
  std::sort(members.begin(), members.end(), [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
  for (std::size_t i = 0; i + 1 < members.size(); ++i)
    if (members[i].dim() == members[i + 1].dim() || !members[i + 1].contains(F, members[i]))
      throw InvariantViolation("canonical filtration is not a chain");
  return members;
}

bool FinalType::valid() const {
  if (g < 0 || v.size() != static_cast<std::size_t>(2 * g + 1)) return false;
  if (v.front() != 0 || v.back() != g) return false;
  for (int i = 0; i < 2 * g; ++i) {
    const int step = v[static_cast<std::size_t>(i + 1)] - v[static_cast<std::size_t>(i)];
    if (step < 0 || step > 1) return false;
  }
  for (int i = 0; i <= 2 * g; ++i)
    if (v[static_cast<std::size_t>(2 * g - i)] != v[static_cast<std::size_t>(i)] + g - i) return false;
  return true;
}

int EOType::codimension() const {
  int s = 0;
  for (int m : mu) s += m;
  return s;
}

bool EOType::valid(int g) const {
  if (static_cast<int>(mu.size()) > g) return false;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] <= 0 || mu[i] > g) return false;
    if (i > 0 && mu[i] >= mu[i - 1]) return false;
  }
  return true;
}

std::string EOType::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
  os << ']';
  return os.str();
}

FinalType final_type(const Field& F, const std::vector<Subspace>& filtration, const Matrix& v) {
  if (filtration.empty()) throw std::invalid_argument("empty filtration");
  const int n = static_cast<int>(filtration.back().ambient());
  FinalType ft{n / 2, std::vector<int>(static_cast<std::size_t>(n) + 1, -1)};
  std::vector<std::pair<int, int>> known;
  for (const auto& w : filtration) known.emplace_back(static_cast<int>(w.dim()), static_cast<int>(v_image(F, v, w).dim()));
  for (std::size_t k = 0; k + 1 < known.size(); ++k) {
    const auto [d1, v1] = known[k];
    const auto [d2, v2] = known[k + 1];
    const int rise = v2 - v1;
    if (rise != 0 && rise != d2 - d1) {
      std::ostringstream os;
      os << "V is neither injective nor zero on the graded piece between dimensions " << d1 << " and " << d2;
      throw InvariantViolation(os.str());
    }
    for (int i = d1; i <= d2; ++i) ft.v[static_cast<std::size_t>(i)] = rise == 0 ? v1 : v1 + (i - d1);
  }
  if (!ft.valid()) throw InvariantViolation("final type violates its invariants");
  return ft;
}

EOType eo_from_final(const FinalType& ft) {
  EOType out;
  for (int i = 1; i <= ft.g; ++i) {
    const int prev = (i - 1) - ft.v[static_cast<std::size_t>(i - 1)];
    const int cur = i - ft.v[static_cast<std::size_t>(i)];
    if (cur - prev == 1) out.mu.push_back(ft.g - i + 1);
  }
  return out;
}

FinalType final_from_eo(const EOType& eo, int g) {
  FinalType ft{g, std::vector<int>(static_cast<std::size_t>(2 * g) + 1, 0)};
  for (int i = 0; i <= g; ++i) {
    int above = 0;
    for (int m : eo.mu)
      if (m > g - i) ++above;
    ft.v[static_cast<std::size_t>(i)] = i - above;
  }
  for (int i = 0; i < g; ++i) ft.v[static_cast<std::size_t>(2 * g - i)] = ft.v[static_cast<std::size_t>(i)] + g - i;
  return ft;
}

bool eo_leq(const EOType& mu, const EOType& nu) {
  if (mu.mu.size() > nu.mu.size()) return false;
  for (std::size_t i = 0; i < mu.mu.size(); ++i)
    if (mu.mu[i] > nu.mu[i]) return false;
  return true;
}

std::vector<EOType> all_eo_types(int g) {
  std::vector<EOType> out;
  for (unsigned mask = 0; mask < (1u << g); ++mask) {
    EOType t;
    for (int value = g; value >= 1; --value)
      if (mask & (1u << (value - 1))) t.mu.push_back(value);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<EOType> pinned_type(int g, int a, int p_rank) {
  if (a == 0) return EOType{};
  const int top = g - p_rank;
  if (a == 1) return EOType{{top}};
  if (top == a) {
    EOType t;
    for (int value = a; value >= 1; --value) t.mu.push_back(value);
    return t;
  }
  return std::nullopt;
}

Classification classify(const CurveModel& model) {
  Classification out;
  out.genus = genus(model);
  if (out.genus > kMaxClassifyGenus) throw std::invalid_argument("classification is limited to genus <= 8");
  const DeRhamBasis basis = build_basis(model);
  const Field& F = *basis.curve.field;
  const auto g = static_cast<std::size_t>(out.genus);

  out.cm_matrix = cartier_manin(basis.curve);
  out.a_number = out.genus - static_cast<int>(rank(F, out.cm_matrix));
  out.p_rank = static_cast<int>(p_rank_of(F, out.cm_matrix));

  const Matrix v = verschiebung(basis);
  for (std::size_t r = 0; r < g; ++r)
    for (std::size_t c = 0; c < g; ++c)
      if (v.at(r, c) != out.cm_matrix.at(r, c)) throw InvariantViolation("V on H^0 differs from the Cartier-Manin matrix");
  const auto filtration = canonical_filtration(F, v, pairing_matrix(basis), g);
  out.final_type = final_type(F, filtration, v);
  out.eo_type = eo_from_final(out.final_type);

  if (out.eo_type.a_number() != out.a_number)
    throw InvariantViolation("a-number from the Cartier-Manin rank disagrees with the E-O type");
  if (out.eo_type.p_rank(out.genus) != out.p_rank)
    throw InvariantViolation("p-rank from Cartier iteration disagrees with the E-O type");
  out.superspecial = out.a_number == out.genus;
  out.meets_ss_criterion = out.genus == 4 && out.final_type.v[2] == 0;
  return out;
}

}  // namespace eo
