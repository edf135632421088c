// Copyright 2026 The polardeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polardeg/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polardeg/catalog.hpp"
#include "polardeg/error.hpp"
#include "polardeg/formula.hpp"
#include "polardeg/oracle/report_json.hpp"
#include "polardeg/parse.hpp"
#include "polardeg/profile_json.hpp"

namespace polardeg {

using nlohmann::json;
using oracle::OracleReport;
using oracle::TrackerConfig;

namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 42;
  unsigned workers = 0;
};

struct OracleOptions {
  int trials = 5;
  double newton_tol = 1e-10;
  double dedup_tol = 1e-6;
  double grad_tol = 1e-8;
  std::size_t max_paths = 256;
  bool extended = false;

  void add_to(CLI::App* app) {
    app->add_option("--trials", trials, "Independent random targets (odd)")->capture_default_str();
    app->add_option("--tol", newton_tol, "Endpoint residual tolerance")->capture_default_str();
    app->add_option("--dedup-tol", dedup_tol, "Distance for merging endpoints")->capture_default_str();
    app->add_option("--grad-tol", grad_tol, "Gradient size marking the singular locus")->capture_default_str();
    app->add_option("--max-paths", max_paths, "Path budget (d-1)^n")->capture_default_str();
    app->add_flag("--extended", extended, "Track in extended precision");
  }

  TrackerConfig config(std::uint64_t seed) const {
    TrackerConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.newton_tol = newton_tol;
    cfg.dedup_tol = dedup_tol;
    cfg.singular_grad_tol = grad_tol;
    cfg.max_paths = max_paths;
    cfg.precision = extended ? oracle::Precision::extended : oracle::Precision::double_precision;
    return cfg;
  }
};

Polynomial read_form(const std::string& text, Int n) {
  if (n < 1) throw DomainError("--n must be >= 1");
  return parse(text, static_cast<std::size_t>(n + 1));
}

// Accepts "p", "p/q" and decimals such as "0.001".
Rational parse_rational(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
  const auto dot = text.find('.');
  try {
    if (dot == std::string::npos) {
      Rational q(text);
      q.canonicalize();
      return q;
    }
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(text);
    const bool negative = !whole.empty() && whole[0] == '-';
    std::string digits = (negative || (!whole.empty() && whole[0] == '+')) ? whole.substr(1) : whole;
    if (digits.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(text);
    Rational q(mpz_class((digits.empty() ? "0" : digits) + frac), mpz_class("1" + std::string(frac.size(), '0')));
    q.canonicalize();
    return negative ? Rational(-q) : q;
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: '" + text + "'");
  }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw DomainError("empty list of values");
  return out;
}

std::string join(const std::vector<Int>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  return s.str();
}

std::string or_dash(const std::optional<Int>& v) { return v ? std::to_string(*v) : "-"; }

void print_pol_result(const PolResult& r, std::ostream& out) {
  out << "pol = " << r.pol << "\n";
  out << "method: " << to_string(r.method) << "\n";
  std::size_t width = 0;
  for (const auto& c : r.breakdown) width = std::max(width, c.label.size());
  for (const auto& c : r.breakdown) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << c.label << "  " << std::right << std::setw(6)
        << c.value << "\n";
  }
}

void print_report(const OracleReport& r, std::ostream& out) {
  out << "pol_estimate = " << r.pol_estimate << "\n";
  out << "per-trial counts: " << join(r.per_trial_counts) << "\n";
  out << "consensus: " << (r.consensus ? "yes" : "no") << "\n";
  out << "paths tracked: " << r.paths_total << " (" << r.bezout << " per trial)\n";
  out << "discarded:";
  for (oracle::TrackStatus s : oracle::kAllStatuses) {
    const std::string name = s == oracle::TrackStatus::regular ? "duplicate" : std::string(to_string(s));
    out << " " << name << "=" << r.discarded_count(s);
  }
  out << "\n";
}

void emit(const json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

int cmd_formula(const Globals& g, const std::string& path, std::ostream& out) {
  const SingularityProfile p = load_profile(path);
  const PolResult r = pol_one_dim(p);
  if (g.json) {
    emit(pol_result_to_json(r), out);
  } else {
    print_pol_result(r, out);
  }
  return kExitOk;
}

int cmd_oracle(const Globals& g, const OracleOptions& o, const std::string& poly, Int n, std::ostream& out) {
  const Polynomial f = read_form(poly, n);
  const OracleReport r = oracle::solve_count(f, o.config(g.seed), g.workers);
  if (g.json) {
    emit(oracle::report_to_json(r), out);
  } else {
    print_report(r, out);
  }
  return r.consensus ? kExitOk : kExitNoConsensus;
}

int cmd_verify(const Globals& g, const OracleOptions& o, const std::string& poly, const std::string& path,
               std::ostream& out) {
  const SingularityProfile p = load_profile(path);
  const Polynomial f = read_form(poly, p.n);
  const oracle::VerifyReport v = oracle::verify(f, p, o.config(g.seed), g.workers);
  if (g.json) {
    emit(oracle::verify_to_json(v), out);
  } else {
    out << "oracle:\n";
    print_report(v.oracle, out);
    out << "formula:\n";
    if (v.formula) {
      print_pol_result(*v.formula, out);
    } else {
      out << "  inconsistent profile: " << *v.formula_error << "\n";
    }
    out << (v.match ? "MATCH" : "MISMATCH") << "\n";
  }
  if (v.formula_error) return kExitInconsistentProfile;
  if (!v.oracle.consensus) return kExitNoConsensus;
  return v.match ? kExitOk : kExitMismatch;
}

int cmd_catalog(const Globals& g, const OracleOptions& o, const std::string& suite, const std::string& path,
                std::ostream& out) {
  const Catalog catalog = load_catalog(path);
  std::vector<const CatalogSuite*> chosen;
  if (suite.empty()) {
    for (const auto& s : catalog.suites) chosen.push_back(&s);
  } else {
    chosen.push_back(&catalog.suite(suite));
  }
  std::vector<RowResult> rows;
  for (const CatalogSuite* s : chosen) {
    auto part = run_suite(*s, o.config(g.seed), g.workers);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  const auto passed = std::count_if(rows.begin(), rows.end(), [](const RowResult& r) { return r.pass; });

  if (g.json) {
    json j{{"catalog_version", catalog.version}, {"seed", g.seed}, {"rows", json::array()}};
    for (const auto& r : rows) j["rows"].push_back(row_to_json(r));
    j["passed"] = passed;
    j["total"] = rows.size();
    j["pass"] = passed == static_cast<long>(rows.size());
    emit(j, out);
  } else {
    out << std::left << std::setw(16) << "suite" << std::setw(30) << "name" << std::right << std::setw(9) << "expected"
        << std::setw(9) << "formula" << std::setw(8) << "oracle" << std::setw(7) << "union" << "  result\n";
    for (const auto& r : rows) {
      out << std::left << std::setw(16) << r.suite << std::setw(30) << r.name << std::right << std::setw(9) << r.expected
          << std::setw(9) << or_dash(r.formula) << std::setw(8) << or_dash(r.oracle) << std::setw(7)
          << or_dash(r.union_value) << "  " << (r.pass ? "pass" : "FAIL");
      if (!r.error.empty()) out << "  (" << r.error << ")";
      out << "\n";
    }
    out << passed << "/" << rows.size() << " rows pass\n";
  }
  return passed == static_cast<long>(rows.size()) ? kExitOk : kExitMismatch;
}

int cmd_deform(const Globals& g, const OracleOptions& o, const std::string& poly, Int n, const std::string& l_text,
               std::optional<unsigned> d, const std::string& s_values, std::ostream& out) {
  const Polynomial f = read_form(poly, n);
  const Polynomial l = read_form(l_text, n);
  const unsigned power = d.value_or(f.degree());
  const auto values = parse_rational_list(s_values);
  const TrackerConfig cfg = o.config(g.seed);

  const OracleReport base = oracle::solve_count(f, cfg, g.workers);
  bool consensus = base.consensus;
  bool holds = true;
  json rows = json::array();
  std::ostringstream table;
  table << "pol(f) = " << base.pol_estimate << "\n" << std::left << std::setw(14) << "s" << std::right << std::setw(8)
        << "pol" << "  check\n";
  for (const Rational& s : values) {
    const OracleReport r = oracle::solve_count(deform(f, l, power, s), cfg, g.workers);
    consensus = consensus && r.consensus;
    const bool ok = semicontinuity_expectation(base.pol_estimate, r.pol_estimate);
    holds = holds && ok;
    rows.push_back({{"s", s.get_str()}, {"pol", r.pol_estimate}, {"consensus", r.consensus}, {"semicontinuous", ok}});
    table << std::left << std::setw(14) << s.get_str() << std::right << std::setw(8) << r.pol_estimate << "  "
          << (ok ? "ok" : "VIOLATED") << (r.consensus ? "" : " (no consensus)") << "\n";
  }
  if (g.json) {
    emit({{"pol", base.pol_estimate}, {"consensus", consensus}, {"deformations", rows}, {"holds", holds}}, out);
  } else {
    out << table.str() << (holds ? "semicontinuity holds" : "semicontinuity VIOLATED") << "\n";
  }
  if (!consensus) return kExitNoConsensus;
  return holds ? kExitOk : kExitMismatch;
}

// Small nonzero integers drawn from the seed: a generic choice that is
// still reproducible.
std::vector<Rational> generic_coefficients(std::uint64_t seed, std::uint64_t stream, std::size_t count) {
  std::mt19937_64 rng(oracle::derive_seed(seed, stream));
  std::uniform_int_distribution<int> pick(1, 9);
  std::bernoulli_distribution negative(0.5);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < count; ++i) c.emplace_back(negative(rng) ? -pick(rng) : pick(rng));
  return c;
}

int cmd_slice_yomdin(const Globals& g, const OracleOptions& o, const std::string& poly, Int n,
                     const std::string& hyperplane, const std::string& l_text, const std::string& s_text,
                     std::ostream& out) {
  const Polynomial f = read_form(poly, n);
  if (n < 2) throw DomainError("slice-yomdin needs n >= 2");
  std::vector<Rational> h = hyperplane.empty() ? generic_coefficients(g.seed, 101, static_cast<std::size_t>(n))
                                               : parse_rational_list(hyperplane);
  if (h.size() != static_cast<std::size_t>(n)) {
    throw DomainError("--hyperplane needs n coefficients (x_n = c0 x0 + ... + c_{n-1} x_{n-1})");
  }
  Polynomial l(static_cast<std::size_t>(n + 1));
  if (l_text.empty()) {
    l = Polynomial::linear_form(generic_coefficients(g.seed, 102, static_cast<std::size_t>(n + 1)));
  } else {
    l = read_form(l_text, n);
  }
  const Rational s = parse_rational(s_text);
  const TrackerConfig cfg = o.config(g.seed);

  const Polynomial slice = restrict_to_hyperplane(f, h);
  const OracleReport rs = oracle::solve_count(slice, cfg, g.workers);
  const OracleReport rd = oracle::solve_count(deform(f, l, f.degree(), s), cfg, g.workers);
  const Int predicted = static_cast<Int>(f.degree() - 1) * rs.pol_estimate;
  const bool holds = rd.pol_estimate == predicted;
  const bool consensus = rs.consensus && rd.consensus;

  if (g.json) {
    emit({{"slice", to_string(slice)},
          {"pol_slice", rs.pol_estimate},
          {"pol_deformed", rd.pol_estimate},
          {"predicted", predicted},
          {"consensus", consensus},
          {"holds", holds}},
         out);
  } else {
    out << "slice: " << to_string(slice) << "\n";
    out << "pol(slice) = " << rs.pol_estimate << "\n";
    out << "pol(deformed) = " << rd.pol_estimate << "\n";
    out << "(d-1) * pol(slice) = " << predicted << "  " << (holds ? "ok" : "MISMATCH") << "\n";
  }
  if (!consensus) return kExitNoConsensus;
  return holds ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polar degrees of projective hypersurfaces", "polardeg"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.workers = oracle::default_workers();
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--workers", g.workers, "Tracking threads; never changes results")->capture_default_str();

  OracleOptions o;
  std::string profile_path, poly, l_text, s_values = "1/1000,1/100,1/10", suite, hyperplane, s_text = "1/10";
  std::string catalog_path = default_catalog_path();
  Int n = 0;
  std::optional<unsigned> power;

  auto* formula = app.add_subcommand("formula", "Closed-form polar degree of a singularity profile");
  formula->add_option("--profile", profile_path, "Profile JSON file")->required();

  auto* orc = app.add_subcommand("oracle", "Count a generic gradient fibre numerically");
  orc->add_option("--poly", poly, "Homogeneous polynomial in x0..xn")->required();
  orc->add_option("--n", n, "Projective dimension")->required();
  o.add_to(orc);

  auto* ver = app.add_subcommand("verify", "Compare oracle and formula");
  ver->add_option("--poly", poly, "Homogeneous polynomial in x0..xn")->required();
  ver->add_option("--profile", profile_path, "Profile JSON file")->required();
  o.add_to(ver);

  auto* cat = app.add_subcommand("catalog", "Run the regression catalog");
  cat->add_option("--suite", suite, "cubic-surfaces, examples or unions (default: all)");
  cat->add_option("--catalog", catalog_path, "Catalog JSON file")->capture_default_str();
  o.add_to(cat);

  auto* def = app.add_subcommand("deform", "Check semicontinuity under f + s*l^d");
  def->add_option("--poly", poly, "Homogeneous polynomial in x0..xn")->required();
  def->add_option("--n", n, "Projective dimension")->required();
  def->add_option("--l", l_text, "Linear form l")->required();
  def->add_option("--d", power, "Power of l (default: degree of f)");
  def->add_option("--s-values", s_values, "Comma-separated deformation parameters")->capture_default_str();
  o.add_to(def);

  auto* yom = app.add_subcommand("slice-yomdin", "Check pol(f + s*l^d) = (d-1) * pol(generic slice)");
  yom->add_option("--poly", poly, "Homogeneous polynomial in x0..xn")->required();
  yom->add_option("--n", n, "Projective dimension")->required();
  yom->add_option("--hyperplane", hyperplane, "c0,..,c_{n-1} for x_n = sum c_i x_i (default: seeded)");
  yom->add_option("--l", l_text, "Linear form l (default: seeded)");
  yom->add_option("--s", s_text, "Deformation parameter")->capture_default_str();
  o.add_to(yom);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*formula) return cmd_formula(g, profile_path, out);
    if (*orc) return cmd_oracle(g, o, poly, n, out);
    if (*ver) return cmd_verify(g, o, poly, profile_path, out);
    if (*cat) return cmd_catalog(g, o, suite, catalog_path, out);
    if (*def) return cmd_deform(g, o, poly, n, l_text, power, s_values, out);
    if (*yom) return cmd_slice_yomdin(g, o, poly, n, hyperplane, l_text, s_text, out);
  } catch (const InconsistentProfile& e) {
    err << e.what() << "\n";
    return kExitInconsistentProfile;
  } catch (const BudgetExceeded& e) {
    err << "path budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace polardeg
