#pragma once

// Experiment driver behind the liaison-lab command line: config
// validation, suite execution, report rendering and the exit-code contract
// (0 all pass, 1 verification failure, 2 configuration or input error).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "llab/errors.hpp"
#include "llab/field.hpp"
#include "llab/liaison.hpp"

namespace llab {

inline constexpr std::string_view kSchema = "liaison-lab/1";
inline constexpr std::string_view kVersion = "1.0.0";

enum class Suite { Triangular, Tangential, Identities, All };
enum class Format { Text, Json };

std::string_view to_string(Suite s);
Suite parse_suite(std::string_view s);
std::string_view to_string(Format f);
Format parse_format(std::string_view s);

struct RunConfig {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 0;
  int trials = 20;
  std::optional<int> r_min;
  std::optional<int> r_max;
  Suite suite = Suite::All;
  Format format = Format::Text;
  std::optional<std::string> output_path;
  int jobs = 1;
};

/// Theorems run by a suite, in report order.
std::vector<Theorem> suite_theorems(Suite s);
/// r values used for one theorem of a suite under this config.
std::vector<int> r_values(const RunConfig& config, Suite suite, Theorem t);

/// Throws ConfigInvalid or FieldTooSmall.
void validate(const RunConfig& config);

struct RunReport {
  RunConfig config;
  std::vector<VerificationReport> results;
  bool aggregate_pass = false;
  std::optional<Error> error;  // set when the config was rejected
  double wall_seconds = 0;
};

/// Executes the selected verifiers; deterministic given (prime, seed).
/// A rejected config produces a report carrying the error instead of
/// throwing.
RunReport run_suite(const RunConfig& config);

int exit_code(const RunReport& report);

nlohmann::ordered_json to_json(const RunReport& report, bool with_timing = true);
std::string to_text(const RunReport& report);

/// Points file: a JSON array of three-integer arrays, read modulo p.
std::vector<FpPoint> parse_points(const PrimeField& field, std::string_view text);

/// Prints the Betti table and Hilbert profile of the points in `path`.
/// Returns the process exit code; errors go to `err`.
int betti_command(const std::string& path, int d_max, std::uint32_t prime, std::ostream& out, std::ostream& err);

}  // namespace llab
