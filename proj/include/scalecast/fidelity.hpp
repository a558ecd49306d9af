#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scalecast/assessor.hpp"
#include "scalecast/character_registry.hpp"
#include "scalecast/interview.hpp"
#include "scalecast/llm_gateway.hpp"
#include "scalecast/metrics.hpp"
#include "scalecast/scale_bank.hpp"

namespace scalecast {

struct FidelityOptions {
  std::string subject_model = "subject";
  std::string judge_model = "judge";
  /// Questions asked per dimension; 0 asks every question.
  std::size_t items_per_dimension = 0;
  /// Restricts the scales; empty means every scale a character is labelled on.
  std::vector<std::string> scales;
  AccuracyMode accuracy_mode = AccuracyMode::kPooled;
  StdMode std_mode = StdMode::kPopulation;
  std::uint64_t seed = 0;
  std::size_t concurrency = 1;
  std::string created_at;
};

struct FidelityUnitError {
  std::string character;
  std::string scale_id;
  std::string error;
};

struct FidelityReport {
  double single_accuracy = 0.0;
  double full_accuracy = 0.0;
  /// Fraction of test characters with at least one assessed, labelled scale.
  double coverage = 0.0;
  std::vector<AssessmentResult> results;
  std::vector<FidelityUnitError> errors;
};

nlohmann::json to_json(const FidelityReport& r);

/// Interviews the subject model as each test character (no suitability
/// screening) and compares judged labels with ground truth. Units that fail
/// are reported in `errors`. Throws kNoGroundTruth when no test character
/// has a label on a selected scale.
FidelityReport personality_fidelity_run(Gateway& gateway, const PromptTemplates& templates,
                                        const FidelityOptions& options, const std::vector<CharacterProfile>& characters,
                                        const ScaleBank& bank, const Registry& registry);

struct CharacterConsistency {
  std::string character;
  ConsistencyReport report;
};

struct ConsistencyRunReport {
  std::vector<CharacterConsistency> units;
  /// Mean of the units' average_std.
  double average_std = 0.0;
  std::vector<FidelityUnitError> errors;
};

nlohmann::json to_json(const ConsistencyRunReport& r);

/// Five rounds per scored dimension: one conversation per dimension, one
/// question of that dimension per round, each round's answer judged on its
/// own. Scales default to those the character is labelled on.
ConsistencyRunReport consistency_run(Gateway& gateway, const PromptTemplates& templates, const FidelityOptions& options,
                                     const std::vector<CharacterProfile>& characters, const ScaleBank& bank,
                                     const Registry& registry);

}  // namespace scalecast
