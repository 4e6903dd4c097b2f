#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "geoforge/caps.hpp"

namespace geoforge {

enum class StepStatus { Pass, Fail, Error, Cap, Skipped };
std::string to_string(StepStatus s);

struct StepReport {
  std::string name;
  StepStatus status = StepStatus::Pass;
  nlohmann::ordered_json witness;  // null when passing
  double ms = 0;
};

struct Report {
  std::vector<StepReport> steps;
  std::optional<double> total_ms;

  bool passed() const;
  /// 0 all pass, 3 if some step hit a cap, 1 otherwise.
  int exit_code() const;
  /// {"schema":1,"steps":[{"name","status","witness","ms"}...]}
  nlohmann::ordered_json to_json() const;
};

struct RunOptions {
  /// Flag overrides applied on top of the spec's "caps".
  std::optional<std::uint64_t> cap_closure, cap_product, cap_geometry;
  std::optional<std::size_t> rank_guard;
  /// With false every "ms" is 0, making reports byte-identical across runs.
  bool timing = true;
  /// Directory against which relative output paths resolve.
  std::string base_dir = ".";
};

/// JSON parse of a pipeline document; ParseError carries line and column.
nlohmann::ordered_json parse_spec(const std::string& text);

/// Parses, resolves and runs a pipeline document. Input problems throw
/// ParseError (with line and column) or UnresolvedReference before anything
/// runs; failures inside steps become report entries.
Report run_pipeline(const std::string& text, const RunOptions& options = {});
Report run_pipeline_file(const std::string& path, RunOptions options = {});

struct Criterion {
  int id;
  std::string name;
  double budget_ms;
};
const std::vector<Criterion>& suite_criteria();

/// Runs every criterion whose name contains `filter`. A criterion passes when
/// each of its checks holds and it finishes within its time budget.
Report regression_suite(const std::string& filter = "", bool timing = true);

/// Exit code for an exception escaping run_pipeline: 3 for caps, 2 otherwise.
int exit_code_for(const std::exception& e);

}  // namespace geoforge
