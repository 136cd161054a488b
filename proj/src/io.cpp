#include "eo/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace eo {

namespace {

using json = nlohmann::json;

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') {
      if (depth == 0) throw ParseError("unbalanced ']'");
      --depth;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (depth == 0 && !cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
      continue;
    }
    cur += ch;
  }
  if (depth != 0) throw ParseError("unbalanced '['");
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::uint64_t parse_uint(const std::string& key, const std::string& s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError("'" + key + "' expects a non-negative integer, got '" + s + "'");
  return v;
}

std::vector<std::uint64_t> parse_list(const std::string& key, const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("'" + key + "' expects a list like [1,2,3], got '" + s + "'");
  std::vector<std::uint64_t> out;
  const std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_uint(key, item));
  if (body.back() == ',') throw ParseError("'" + key + "' has a trailing comma");
  return out;
}

std::string list_string(const std::vector<std::uint64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

json codes(const std::vector<Elem>& v) {
  json out = json::array();
  for (Elem e : v) out.push_back(e.code);
  return out;
}

json field_header(const Field& F) {
  return {{"p", F.p()}, {"k", F.k()}, {"modulus", F.modulus()}};
}

json form_json(const DifferentialForm& w) {
  return {{"y_exponent", -w.n}, {"x_offset", w.u.offset()}, {"coeffs", codes(w.u.body().coeffs())}};
}

}  // namespace

CurveModel parse_curve(const std::string& text) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty curve specification");
  const std::string& kind = tokens[0];
  if (kind != "hyper" && kind != "cyclic") throw ParseError("curve kind must be 'hyper' or 'cyclic', got '" + kind + "'");
  const std::vector<std::string> allowed =
      kind == "hyper" ? std::vector<std::string>{"p", "k", "f"} : std::vector<std::string>{"p", "k", "m", "a", "xi"};
  std::map<std::string, std::string> kv;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value, got '" + tokens[i] + "'");
    const std::string key = tokens[i].substr(0, eq);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ParseError("unknown key '" + key + "' for " + kind + " curves");
    if (!kv.emplace(key, tokens[i].substr(eq + 1)).second) throw ParseError("duplicate key '" + key + "'");
  }
  for (const auto& key : allowed)
    if (key != "k" && !kv.count(key)) throw ParseError("missing key '" + key + "'");

  const auto p = parse_uint("p", kv["p"]);
  const auto k = kv.count("k") ? parse_uint("k", kv["k"]) : 1;
  if (p > UINT32_MAX || k > 64) throw std::invalid_argument("field parameters out of range");
  const FieldPtr F = Field::make(static_cast<std::uint32_t>(p), static_cast<unsigned>(k));
  auto elements = [&](const std::string& key) {
    std::vector<Elem> out;
    for (auto c : parse_list(key, kv[key])) out.push_back(F->element(c));
    return out;
  };
  if (kind == "hyper") return HyperellipticModel::make(F, Poly(elements("f")));
  const auto m = parse_uint("m", kv["m"]);
  std::vector<int> a;
  for (auto v : parse_list("a", kv["a"])) {
    if (v > 1000000) throw ParseError("monodromy entry too large");
    a.push_back(static_cast<int>(v));
  }
  if (m > 1000000) throw ParseError("m too large");
  return CyclicCoverModel::make(F, static_cast<int>(m), std::move(a), elements("xi"));
}

std::string format_curve(const CurveModel& model) {
  const Field& F = *field_of(model);
  std::ostringstream os;
  if (const auto* h = std::get_if<HyperellipticModel>(&model)) {
    os << "hyper p=" << F.p() << " k=" << F.k() << " f=" << list_string(h->f.codes());
  } else {
    const auto& c = std::get<CyclicCoverModel>(model);
    std::vector<std::uint64_t> a(c.a.begin(), c.a.end()), xi;
    for (Elem e : c.xi) xi.push_back(e.code);
    os << "cyclic p=" << F.p() << " k=" << F.k() << " m=" << c.m << " a=" << list_string(a) << " xi=" << list_string(xi);
  }
  return os.str();
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(codes(m.row(r)));
  return rows;
}

json classification_json(const CurveModel& model, const Classification& c) {
  json out = field_header(*field_of(model));
  out["model"] = format_curve(model);
  out["genus"] = c.genus;
  out["cm_matrix"] = matrix_json(c.cm_matrix);
  out["a_number"] = c.a_number;
  out["p_rank"] = c.p_rank;
  out["final_type"] = c.final_type.v;
  out["eo_type"] = c.eo_type.mu;
  out["superspecial"] = c.superspecial;
  out["meets_ss_criterion"] = c.meets_ss_criterion;
  return out;
}

json basis_json(const CurveModel& model, const DeRhamBasis& basis, const Matrix& v) {
  json out = field_header(*field_of(model));
  out["model"] = format_curve(model);
  out["genus"] = basis.genus();
  json classes = json::array();
  for (const auto& cls : basis.classes)
    classes.push_back({{"label", cls.label},
                       {"holomorphic", cls.holomorphic},
                       {"n", cls.n},
                       {"l", cls.l},
                       {"u1", form_json(cls.u1)},
                       {"u2", form_json(cls.u2)}});
  out["classes"] = classes;
  out["labels"] = json::array();
  for (const auto& cls : basis.classes) out["labels"].push_back(cls.label);
  out["verschiebung"] = matrix_json(v);
  out["pairing"] = matrix_json(pairing_matrix(basis));
  return out;
}

std::string tally_csv(const Tally& t) {
  std::ostringstream os;
  os << "family,p,k,mode,eo_type,a_number,p_rank,count\n";
  for (const auto& [type, count] : t.strata) {
    os << t.family << ',' << t.p << ',' << t.k << ',' << (t.exact ? "exact" : "sample") << ",\"" << type.to_string()
       << "\"," << type.a_number() << ',' << type.p_rank(t.genus) << ',' << count << '\n';
  }
  return os.str();
}

json tally_json(const Tally& t, const std::vector<ClaimResult>& claims, const std::vector<DimensionRow>& dims) {
  json out = {{"family", t.family},     {"p", t.p},
              {"k", t.k},               {"modulus", t.modulus},
              {"mode", t.exact ? "exact" : "sample"},
              {"genus", t.genus},       {"total", t.total},
              {"skipped", t.skipped()}, {"classified", t.classified()},
              {"full_classifications", t.full_classifications},
              {"note", "counts are of parameter tuples, not isomorphism classes"}};
  if (!t.exact) {
    out["samples"] = t.samples;
    out["seed"] = t.seed;
  }
  json strata = json::array();
  for (const auto& [type, count] : t.strata)
    strata.push_back({{"eo_type", type.mu}, {"a_number", type.a_number()}, {"p_rank", type.p_rank(t.genus)}, {"count", count}});
  out["strata"] = strata;
  json marginals = json::array();
  for (const auto& [key, count] : t.marginals)
    marginals.push_back({{"a_number", key.first}, {"p_rank", key.second}, {"count", count}});
  out["marginals"] = marginals;
  out["skips"] = json::object();
  for (const auto& [reason, count] : t.skips) out["skips"][reason] = count;
  if (!claims.empty()) {
    json rows = json::array();
    for (const auto& c : claims) {
      const char* kind = c.kind == ClaimKind::Equivalent                ? "iff"
                         : c.kind == ClaimKind::PropertyImpliesEquation ? "property implies equation"
                                                                        : "equation implies property";
      rows.push_back({{"name", c.name},
                      {"kind", kind},
                      {"table", {{c.table[0][0], c.table[0][1]}, {c.table[1][0], c.table[1][1]}}},
                      {"exceptions", c.exceptions()},
                      {"passed", c.passed()}});
    }
    out["claims"] = rows;
  }
  if (!dims.empty()) {
    json rows = json::array();
    for (const auto& d : dims) {
      json row = {{"eo_type", d.type.mu}, {"expected_dim", d.expected}, {"count", d.count}, {"checked", d.checked}, {"within", d.within}};
      row["estimate"] = d.count ? json(d.estimate) : json(nullptr);
      rows.push_back(row);
    }
    out["dimensions"] = rows;
  }
  return out;
}

}  // namespace eo
