#include "llab/harness.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace llab {

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Triangular: return "triangular";
    case Suite::Tangential: return "tangential";
    case Suite::Identities: return "identities";
    case Suite::All: return "all";
  }
  return "unknown";
}

Suite parse_suite(std::string_view s) {
  if (s == "triangular") return Suite::Triangular;
  if (s == "tangential") return Suite::Tangential;
  if (s == "identities") return Suite::Identities;
  if (s == "all") return Suite::All;
  throw Error(ErrorCode::ConfigInvalid, "unknown suite '" + std::string(s) + "'");
}

std::string_view to_string(Format f) { return f == Format::Json ? "json" : "text"; }

Format parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  throw Error(ErrorCode::ConfigInvalid, "unknown format '" + std::string(s) + "'");
}

std::vector<Theorem> suite_theorems(Suite s) {
  switch (s) {
    case Suite::Triangular:
      return {Theorem::GenericBettiTriangular, Theorem::Lemma1General, Theorem::Lemma1Divisor,
              Theorem::CorollaryForward, Theorem::CorollaryBackward};
    case Suite::Tangential:
      return {Theorem::GenericBettiTangential, Theorem::PropTangential, Theorem::MuCriterion};
    case Suite::Identities: return {Theorem::DimensionIdentity, Theorem::RiemannRochLedger};
    case Suite::All: break;
  }
  std::vector<Theorem> all;
  for (auto sub : {Suite::Triangular, Suite::Tangential, Suite::Identities})
    for (auto t : suite_theorems(sub)) all.push_back(t);
  return all;
}

namespace {

struct Range {
  int lo, hi;
};

Range default_range(Suite s, Theorem t) {
  switch (s) {
    case Suite::Triangular: return {3, 6};
    case Suite::Tangential: return {1, 3};
    case Suite::Identities: return t == Theorem::RiemannRochLedger ? Range{2, 20} : Range{1, 10};
    case Suite::All: break;
  }
  return {0, -1};
}

// hard limits of a whole suite
Range suite_bounds(Suite s) {
  switch (s) {
    case Suite::Triangular: return {3, 8};
    case Suite::Tangential: return {1, 4};
    case Suite::Identities: return {1, 1000};
    case Suite::All: break;
  }
  return {1, 1000};
}

Suite suite_of(Theorem t) {
  for (auto s : {Suite::Triangular, Suite::Tangential, Suite::Identities})
    for (auto u : suite_theorems(s))
      if (u == t) return s;
  return Suite::All;
}

}  // namespace

std::vector<int> r_values(const RunConfig& config, Suite suite, Theorem t) {
  const Suite own = suite == Suite::All ? suite_of(t) : suite;
  Range range = default_range(own, t);
  if (config.r_min || config.r_max) {
    range.lo = config.r_min.value_or(config.r_max.value_or(0));
    range.hi = config.r_max.value_or(range.lo);
  }
  const auto [lo, hi] = theorem_r_bounds(t);
  std::vector<int> out;
  for (int r = std::max(range.lo, lo); r <= std::min(range.hi, hi); ++r) out.push_back(r);
  return out;
}

void validate(const RunConfig& config) {
  PrimeField field(config.prime);  // throws FieldTooSmall / ConfigInvalid
  (void)field;
  if (config.trials < 1) throw Error(ErrorCode::ConfigInvalid, "--trials must be >= 1");
  if (config.jobs < 1) throw Error(ErrorCode::ConfigInvalid, "--jobs must be >= 1");
  if (config.r_min && config.r_max && *config.r_min > *config.r_max)
    throw Error(ErrorCode::ConfigInvalid, "--r-min exceeds --r-max");
  if ((config.r_min || config.r_max) && config.suite != Suite::All) {
    const auto b = suite_bounds(config.suite);
    const int lo = config.r_min.value_or(*config.r_max), hi = config.r_max.value_or(*config.r_min);
    if (lo < b.lo || hi > b.hi)
      throw Error(ErrorCode::ConfigInvalid, "r range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                                "] outside the supported bounds [" + std::to_string(b.lo) + ", " +
                                                std::to_string(b.hi) + "] of suite " +
                                                std::string(to_string(config.suite)));
  }
  bool any = false;
  for (auto t : suite_theorems(config.suite)) any = any || !r_values(config, config.suite, t).empty();
  if (!any) throw Error(ErrorCode::ConfigInvalid, "the r range selects no verifier");
}

RunReport run_suite(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.config = config;
  try {
    validate(config);
  } catch (const Error& e) {
    report.error = e;
    report.aggregate_pass = false;
    return report;
  }
  const PrimeField field(config.prime);
  for (auto t : suite_theorems(config.suite))
    for (int r : r_values(config, config.suite, t)) {
      const bool single = t == Theorem::DimensionIdentity || t == Theorem::RiemannRochLedger;
      report.results.push_back(verify(field, t, r, single ? 1 : config.trials, config.seed, config.jobs));
    }
  report.aggregate_pass = true;
  for (const auto& v : report.results)
    if (!v.failures.empty() || v.passes != v.trials) report.aggregate_pass = false;
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

int exit_code(const RunReport& report) {
  if (report.error) return 2;
  return report.aggregate_pass ? 0 : 1;
}

nlohmann::ordered_json to_json(const RunReport& report, bool with_timing) {
  using json = nlohmann::ordered_json;
  const auto& c = report.config;
  json config{{"prime", c.prime}, {"seed", c.seed}, {"trials", c.trials}, {"suite", to_string(c.suite)}};
  config["r_min"] = c.r_min ? json(*c.r_min) : json(nullptr);
  config["r_max"] = c.r_max ? json(*c.r_max) : json(nullptr);
  config["format"] = to_string(c.format);
  config["jobs"] = c.jobs;

  json results = json::array();
  for (const auto& v : report.results) {
    json failures = json::array();
    for (const auto& f : v.failures) failures.push_back({{"trial", f.trial}, {"seed", f.seed}, {"detail", f.detail}});
    json ledger = json::array();
    for (const auto& e : v.h0_ledger) {
      json entry{{"trial", e.trial}};
      for (const auto& [k, val] : e.values) entry[k] = val;
      ledger.push_back(std::move(entry));
    }
    json item{{"theorem", v.theorem}, {"r", v.r},           {"trials", v.trials},
              {"passes", v.passes},   {"failures", failures}, {"h0_ledger", ledger}};
    if (!v.notes.empty()) item["notes"] = v.notes;
    if (with_timing) item["wall_seconds"] = v.wall_seconds;
    results.push_back(std::move(item));
  }

  json out{{"schema", kSchema}, {"config", config}, {"results", results}, {"aggregate_pass", report.aggregate_pass}};
  if (report.error)
    out["error"] = {{"code", to_string(report.error->code())}, {"message", report.error->what()}};
  out["version"] = kVersion;
  if (with_timing) out["wall_seconds"] = report.wall_seconds;
  return out;
}

std::string to_text(const RunReport& report) {
  std::ostringstream os;
  const auto& c = report.config;
  os << "liaison-lab " << kVersion << "  suite=" << to_string(c.suite) << " prime=" << c.prime << " seed=" << c.seed
     << " trials=" << c.trials << "\n";
  if (report.error) {
    os << "error: " << report.error->what() << "\n";
    return os.str();
  }
  for (const auto& v : report.results) {
    const bool ok = v.failures.empty() && v.passes == v.trials;
    os << (ok ? "[PASS] " : "[FAIL] ") << std::left << std::setw(26) << v.theorem << " r=" << v.r << "  " << v.passes
       << "/" << v.trials << "  (" << std::fixed << std::setprecision(2) << v.wall_seconds << " s)\n";
    for (const auto& f : v.failures)
      os << "    trial " << f.trial << " seed " << f.seed << ": " << f.detail << "\n";
  }
  os << "aggregate: " << (report.aggregate_pass ? "PASS" : "FAIL") << "  (" << std::fixed << std::setprecision(2)
     << report.wall_seconds << " s)\n";
  return os.str();
}

std::vector<FpPoint> parse_points(const PrimeField& field, std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::ParseError, "points file must hold a JSON array");
  std::vector<FpPoint> points;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& p = doc[i];
    if (!p.is_array() || p.size() != 3)
      throw Error(ErrorCode::ParseError, "entry " + std::to_string(i) + " is not a 3-element array");
    std::int64_t c[3];
    for (std::size_t j = 0; j < 3; ++j) {
      if (!p[j].is_number_integer())
        throw Error(ErrorCode::ParseError, "entry " + std::to_string(i) + " has a non-integer coordinate");
      c[j] = p[j].get<std::int64_t>();
    }
    try {
      points.push_back(FpPoint::make(field, field.from_int(c[0]), field.from_int(c[1]), field.from_int(c[2])));
    } catch (const Error&) {
      throw Error(ErrorCode::ParseError, "entry " + std::to_string(i) + " is zero modulo p");
    }
  }
  return points;
}

int betti_command(const std::string& path, int d_max, std::uint32_t prime, std::ostream& out, std::ostream& err) {
  try {
    if (d_max < 0 || d_max > 60)
      throw Error(ErrorCode::DegreeOutOfRange, "--dmax must lie in [0, 60], got " + std::to_string(d_max));
    const PrimeField field(prime);
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    auto points = parse_points(field, buf.str());
    auto ideal = FpIdeal::from_points(field, std::move(points));
    const auto betti = betti_table(ideal, d_max);
    const auto profile = hilbert_profile(ideal, d_max);
    out << "points " << ideal.points().size() << "\n";
    out << "beta0 " << to_string(betti.beta0) << "\n";
    out << "beta1 " << to_string(betti.beta1) << "\n";
    out << "hilbert";
    for (auto v : profile.codims) out << " " << v;
    out << "\n";
    out << "stable " << (profile.stable_value ? std::to_string(*profile.stable_value) : "-") << "\n";
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace llab
