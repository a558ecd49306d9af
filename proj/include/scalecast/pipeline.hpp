#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scalecast/assessor.hpp"
#include "scalecast/dataset.hpp"
#include "scalecast/metrics.hpp"

namespace scalecast {

enum class GatewayMode { kMock, kHttp };

struct GatewayConfig {
  GatewayMode mode = GatewayMode::kMock;
  std::filesystem::path mock_script;
  std::string endpoint_url;
  std::string api_key;
  std::string generator_model = "generator";
  std::string judge_model = "judge";
  std::string subject_model = "subject";
  std::size_t concurrency = 4;
  RetryPolicy retry;
  std::optional<std::filesystem::path> cache_dir;
  double price_per_1k_tokens = 0.0;
  std::int64_t timeout_ms = 60000;
  double temperature = 0.7;
  int max_tokens = 512;
};

struct GenerateConfig {
  SelectionMode selection = SelectionMode::kFull;
  bool single = true;
  bool multi = true;
  std::size_t multi_per_scale = 1;
  /// Empty means every Train character / every selected scale.
  std::vector<std::string> characters;
  std::vector<std::string> scales;
  /// Per scale, the first n questions by id; 0 keeps all.
  std::size_t max_questions_per_scale = 0;
};

inline const std::set<std::string> kAllMetrics = {"pf", "mr", "rouge", "winrate", "dims", "consistency"};

struct EvalConfig {
  std::set<std::string> metrics;
  std::optional<std::filesystem::path> mcq_path;
  std::optional<std::filesystem::path> general_path;
  std::size_t items_per_dimension = 0;
  std::vector<std::string> scales;
  AccuracyMode accuracy_mode = AccuracyMode::kPooled;
  StdMode std_mode = StdMode::kPopulation;
};

struct RunConfig {
  std::filesystem::path bank_path;
  std::filesystem::path registry_path;
  std::filesystem::path output_dir;
  std::optional<std::filesystem::path> prompts_dir;
  std::optional<std::uint64_t> seed;
  std::string created_at;
  GatewayConfig gateway;
  GenerateConfig generate;
  FilterPolicy filter_policy = FilterPolicy::kPerDimension;
  std::vector<SubsetName> subsets = {SubsetName::kFullSingle, SubsetName::kPartSingle, SubsetName::kPartMulti};
  EvalConfig eval;
  /// The interpolated document the config was parsed from.
  nlohmann::json document;

  std::uint64_t seed_or_zero() const { return seed.value_or(0); }
  /// SHA-256 of the interpolated document; secrets are masked first.
  std::string digest() const;
};

/// Replaces ${VAR} in every string value. Throws kConfigError for an unset
/// variable.
nlohmann::json interpolate_env(const nlohmann::json& doc);

/// Sets a value by JSON pointer; `value` is parsed as JSON when it parses,
/// otherwise taken as a string.
void apply_override(nlohmann::json& doc, const std::string& pointer, const std::string& value);

/// Relative paths resolve against `base_dir`. Throws kConfigError.
RunConfig parse_run_config(const nlohmann::json& doc, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path,
                          const std::vector<std::pair<std::string, std::string>>& overrides = {});

/// Per-stage record counts. `generated` counts planned interview units.
struct ManifestCounts {
  std::size_t generated = 0;
  std::size_t suitability_excluded = 0;
  std::size_t failed = 0;
  std::size_t interviewed = 0;
  std::size_t filtered_out = 0;
  std::size_t kept = 0;
  std::size_t exported = 0;
};

/// generated = exported + suitability_excluded + filtered_out + failed.
bool reconciles(const ManifestCounts& c);

struct StageOutcome {
  /// 0 success, 3 partial failure.
  int exit_code = 0;
  nlohmann::json manifest;
};

/// Errors: kConfigError before any gateway call; otherwise unit failures
/// are recorded and reported through exit code 3.
StageOutcome cmd_generate(const RunConfig& config);
/// Throws kMissingStore when no interview store exists.
StageOutcome cmd_filter(const RunConfig& config);
/// Throws kMissingStore, kTestLeak.
StageOutcome cmd_export(const RunConfig& config);
/// Each metric runs in isolation; exit code 3 when any errored.
StageOutcome cmd_eval(const RunConfig& config, const std::set<std::string>& which);
/// Summarises the manifest and metric reports. Throws kMissingStore.
StageOutcome cmd_report(const RunConfig& config, std::string* text = nullptr);

/// Maps an error code to the CLI exit status (2 config, 4 hard failure).
int exit_code_for(Errc code);

}  // namespace scalecast
