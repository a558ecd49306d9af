#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "scalecast/character_registry.hpp"
#include "scalecast/interview.hpp"
#include "scalecast/llm_gateway.hpp"
#include "scalecast/scale_bank.hpp"

namespace scalecast {

/// The last line of `reply` that is a bare integer in [lo, hi], ignoring
/// surrounding whitespace and markdown emphasis. Lines out of range are
/// skipped, so a trailing "10/10" style aside does not win.
std::optional<int> last_standalone_integer(std::string_view reply, int lo, int hi);

/// Throws kJudgeParseError when no score line is present.
int parse_judge_score(std::string_view reply, int lo, int hi);

/// Reflection about the scale midpoint: min + max - x. An involution.
double reflect_score(double x, double min, double max);

struct DimensionScore {
  std::string character;
  std::string scale_id;
  std::string dimension_code;
  double raw_score = 0.0;
  Level level = Level::kLow;
  int n_items = 0;
};

Level level_for(const Scale& scale, const Dimension& dim, double raw_score);

/// Per-item judge scores, already oriented (reverse-scored items reflected).
/// Throws kJudgeFailure when the list is empty.
DimensionScore score_dimension(const std::string& character, const Scale& scale, const Dimension& dim,
                               const std::vector<double>& item_scores);

struct JudgeItem {
  Question question;
  std::string response;
};

struct AssessorOptions {
  std::string judge_model = "judge";
  int max_tokens = 512;
};

/// Judges every item at temperature 0 and averages the oriented scores.
/// Unparseable items are skipped; kJudgeFailure if none survive.
/// kPreconditionViolation if an item belongs to another dimension.
DimensionScore judge_dimension(Gateway& gateway, const PromptTemplates& templates, const AssessorOptions& options,
                               const std::string& character, const Scale& scale, const Dimension& dim,
                               const std::vector<JudgeItem>& items);

/// Throws kMissingDimension unless every scored dimension has a score.
LabelValue classify(const std::vector<DimensionScore>& scores, const Scale& scale);

struct AssessmentResult {
  std::string character;
  std::string scale_id;
  std::vector<DimensionScore> dimension_scores;
  /// Absent when a scored dimension could not be judged.
  std::optional<LabelValue> predicted_label;
  std::optional<GroundTruthLabel> truth;
  /// Keyed by the dimensions the truth label annotates.
  std::map<std::string, bool> per_dimension_match;
  bool full_match = false;
  std::vector<std::string> failed_dimensions;
};

nlohmann::json to_json(const AssessmentResult& r);
AssessmentResult assessment_from_json(const nlohmann::json& j);

/// Fills predicted_label, per_dimension_match and full_match from the scores
/// and the (optional) truth. A truth dimension without a score counts as a
/// mismatch.
void compare(AssessmentResult& result, const Scale& scale, const std::optional<GroundTruthLabel>& truth);

/// Judges all turns of the given records (one character, one scale).
AssessmentResult assess(Gateway& gateway, const PromptTemplates& templates, const AssessorOptions& options,
                        const CharacterProfile& character, const Scale& scale,
                        const std::vector<InterviewRecord>& records, const std::optional<GroundTruthLabel>& truth);

enum class AccuracyMode { kPooled, kPerCharacterMean };

/// Errors: kEmptyInput, kNoGroundTruth when a result lacks truth.
double single_accuracy(const std::vector<AssessmentResult>& results, AccuracyMode mode = AccuracyMode::kPooled);
double full_accuracy(const std::vector<AssessmentResult>& results);

enum class FilterPolicy { kPerDimension, kStrict };
enum class FilterReason { kMatch, kMismatch, kNoGroundTruth, kJudgeFailure };

std::string_view to_string(FilterPolicy p);
std::string_view to_string(FilterReason r);
FilterPolicy parse_filter_policy(std::string_view s);

struct FilterOutcome {
  std::string record_id;
  bool kept = true;
  FilterReason reason = FilterReason::kMatch;
};

nlohmann::json to_json(const FilterOutcome& o);

/// One outcome per record, in input order. Records whose (character, scale)
/// has no assessment or no truth are kept with kNoGroundTruth.
std::vector<FilterOutcome> filter_records(const std::vector<InterviewRecord>& records,
                                          const std::vector<AssessmentResult>& assessments,
                                          FilterPolicy policy = FilterPolicy::kPerDimension);

}  // namespace scalecast
