// eoclass: classify curves by Ekedahl-Oort type and survey curve families.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eo/errors.hpp"
#include "eo/io.hpp"
#include "eo/regression.hpp"

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kParse = 2, kInvalid = 3, kTooLarge = 4 };

std::string join(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
  return s;
}

int analyze(const std::vector<std::string>& words) {
  const auto model = eo::parse_curve(join(words));
  const auto c = eo::classify(model);
  std::cout << eo::classification_json(model, c).dump(2) << '\n';
  return kOk;
}

int basis(const std::vector<std::string>& words) {
  const auto model = eo::parse_curve(join(words));
  const auto b = eo::build_basis(model);
  std::cout << eo::basis_json(model, b, eo::verschiebung(b)).dump(2) << '\n';
  return kOk;
}

struct SurveyArgs {
  std::string family;
  std::uint32_t p = 3;
  unsigned k = 1;
  bool exact = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  std::string out = ".";
  std::string format;
};

void print_summary(const eo::ScanReport& r, const std::vector<eo::DimensionRow>& dims, double seconds) {
  const auto& t = r.tally;
  std::cout << t.family << " over F_" << t.p << "^" << t.k << " (" << (t.exact ? "exact" : "sampled") << ")\n";
  std::cout << "  scanned " << t.total << ", skipped " << t.skipped() << ", classified " << t.classified()
            << ", full de Rham " << t.full_classifications << ", " << std::fixed << std::setprecision(2) << seconds
            << " s\n";
  for (const auto& [reason, n] : t.skips) std::cout << "  skip " << reason << ": " << n << '\n';
  std::cout << "  " << std::left << std::setw(12) << "type" << std::right << std::setw(6) << "a" << std::setw(8)
            << "p-rank" << std::setw(14) << "count" << std::setw(10) << "log_q" << std::setw(6) << "dim" << '\n';
  for (const auto& d : dims) {
    if (!d.count) continue;
    std::cout << "  " << std::left << std::setw(12) << d.type.to_string() << std::right << std::setw(6)
              << d.type.a_number() << std::setw(8) << d.type.p_rank(t.genus) << std::setw(14) << d.count
              << std::setw(10) << std::setprecision(3) << d.estimate << std::setw(6) << d.expected
              << (d.checked ? (d.within ? "  ok" : "  off") : "") << '\n';
  }
  if (dims.empty())
    for (const auto& [type, n] : t.strata)
      std::cout << "  " << std::left << std::setw(12) << type.to_string() << std::right << std::setw(6)
                << type.a_number() << std::setw(8) << type.p_rank(t.genus) << std::setw(14) << n << '\n';
  for (const auto& c : r.claims)
    std::cout << "  claim " << (c.passed() ? "PASS " : "FAIL ") << c.name << " [[" << c.table[0][0] << ","
              << c.table[0][1] << "],[" << c.table[1][0] << "," << c.table[1][1] << "]]\n";
}

int survey(const SurveyArgs& a) {
  if (a.exact == (a.samples > 0)) throw CLI::ValidationError("survey", "give exactly one of --exact and --sample N");
  const auto& family = eo::find_family(a.family);
  const auto field = eo::Field::make(a.p, a.k);
  const auto mode = a.exact ? eo::ScanMode::exhaustive() : eo::ScanMode::sampled(a.samples, a.seed);
  const auto start = std::chrono::steady_clock::now();
  const auto report = eo::scan(family, field, mode, eo::locus_claims(a.family));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto dims = report.tally.genus == 4 ? eo::dimension_estimate(report.tally) : std::vector<eo::DimensionRow>{};

  std::filesystem::create_directories(a.out);
  std::ostringstream stem;
  stem << a.family << "_p" << a.p << "_k" << a.k << (a.exact ? "_exact" : "_sample");
  const auto base = std::filesystem::path(a.out) / stem.str();
  if (a.format.empty() || a.format == "csv") std::ofstream(base.string() + ".csv") << eo::tally_csv(report.tally);
  if (a.format.empty() || a.format == "json")
    std::ofstream(base.string() + ".json") << eo::tally_json(report.tally, report.claims, dims).dump(2) << '\n';
  print_summary(report, dims, seconds);
  return kOk;
}

int verify_paper() {
  const auto start = std::chrono::steady_clock::now();
  const auto rows = eo::reference_regression();
  int failed = 0;
  for (const auto& r : rows) {
    failed += !r.passed;
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << '\n';
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << rows.size() - static_cast<std::size_t>(failed) << "/" << rows.size() << " rows pass, " << std::fixed
            << std::setprecision(2) << seconds << " s\n";
  return failed ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ekedahl-Oort classification of curves over finite fields"};
  app.require_subcommand(1);

  std::vector<std::string> curve;
  auto* analyze_cmd = app.add_subcommand("analyze", "classify one curve, JSON to stdout");
  analyze_cmd->add_option("curve", curve, "hyper p=.. k=.. f=[..] | cyclic p=.. k=.. m=.. a=[..] xi=[..]")->required();
  auto* basis_cmd = app.add_subcommand("basis", "de Rham basis, V matrix and pairing, JSON to stdout");
  basis_cmd->add_option("curve", curve, "curve specification")->required();

  SurveyArgs sa;
  auto* survey_cmd = app.add_subcommand("survey", "tally EO strata over a curve family");
  survey_cmd->add_option("--family", sa.family, "H4GEN, H4A2, H4E8, H4E10, C512, C512S or KUDO")->required();
  survey_cmd->add_option("--p", sa.p, "characteristic")->required();
  survey_cmd->add_option("--k", sa.k, "extension degree")->check(CLI::PositiveNumber);
  survey_cmd->add_flag("--exact", sa.exact, "enumerate every parameter tuple");
  survey_cmd->add_option("--sample", sa.samples, "number of random tuples")->check(CLI::PositiveNumber);
  survey_cmd->add_option("--seed", sa.seed, "sampling seed");
  survey_cmd->add_option("--out", sa.out, "output directory");
  survey_cmd->add_option("--format", sa.format, "csv or json (default both)")->check(CLI::IsMember({"csv", "json"}));

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the reference regression table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*analyze_cmd) return analyze(curve);
    if (*basis_cmd) return basis(curve);
    if (*survey_cmd) return survey(sa);
    if (*verify_cmd) return verify_paper();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const eo::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const eo::SpaceTooLarge& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return kTooLarge;
  } catch (const eo::InvalidModel& e) {
    std::cerr << "invalid model: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const eo::InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}
