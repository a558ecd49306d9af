#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace scalecast {

enum class LabelKind { kPerDimensionLevel, kCategoricalType, kQuadrant };
enum class Level { kLow, kHigh };

std::string_view to_string(LabelKind kind);
std::string_view to_string(Level level);
Level parse_level(std::string_view s);

/// dimension code -> level
using LevelMap = std::map<std::string, Level>;

/// A classified label: a type/quadrant string, or a level per dimension.
using LabelValue = std::variant<std::string, LevelMap>;

struct Dimension {
  std::string scale_id;
  std::string code;
  std::string name;
  std::string description;
  /// Filler dimensions carry questions but take no part in scoring.
  bool scored = true;
  /// Type-code letters for categorical scales ("E" / "I").
  std::string high_letter;
  std::string low_letter;
  /// Overrides the scale midpoint for the High/Low split (e.g. BSRI medians).
  std::optional<double> threshold;
};

struct Question {
  std::string id;
  std::string scale_id;
  std::string dimension_code;
  std::string text;
  bool reverse_scored = false;
  std::string language_tag = "en";
};

struct Scale {
  std::string id;
  std::string name;
  LabelKind label_kind = LabelKind::kPerDimensionLevel;
  std::size_t declared_count = 0;
  double score_min = 1.0;
  double score_max = 7.0;
  double midpoint = 4.0;
  /// Categorical scales: letters required in a ground-truth type code. Type
  /// letters past this count are written after a '-' (INTJ-A).
  std::size_t type_min_letters = 0;
  /// Quadrant scales: quadrant name -> required levels.
  std::map<std::string, LevelMap> quadrants;
  std::vector<Dimension> dimensions;
  std::vector<Question> questions;

  const Dimension* find_dimension(std::string_view code) const;
  const Question* find_question(std::string_view id) const;
  std::vector<const Dimension*> scored_dimensions() const;
  double threshold_for(const Dimension& dim) const;
};

struct ScaleBank {
  std::map<std::string, Scale> scales;
  std::vector<std::string> part_subset;

  const Scale& at(std::string_view id) const;
  const Scale* find(std::string_view id) const;
  bool in_part(std::string_view id) const;
};

/// Loads and validates a bank file. Errors: kMissingFile, kSchemaViolation
/// (message carries a JSON pointer), kCountMismatch.
ScaleBank load_scale_bank(const std::filesystem::path& path);
ScaleBank parse_scale_bank(const nlohmann::json& doc);
nlohmann::json to_json(const ScaleBank& bank);

enum class SelectionMode { kFull, kPart };

/// Full: every question. Part: questions of part_subset scales. Ordered by
/// (scale id, question id).
std::vector<Question> select_questions(const ScaleBank& bank, SelectionMode mode);

std::map<std::string, std::vector<Question>> questions_by_dimension(const Scale& scale);

/// Converts a label to per-dimension levels. Categorical codes may omit the
/// trailing letters (a four-letter 16P code leaves Identity unannotated).
/// Throws kSchemaViolation when the label does not fit the scale's alphabet.
LevelMap levels_from_label(const Scale& scale, const LabelValue& label);

/// Inverse of levels_from_label for a complete level assignment. Throws
/// kMissingDimension when a scored dimension has no level.
LabelValue label_from_levels(const Scale& scale, const LevelMap& levels);

std::string label_to_string(const LabelValue& label);

/// A type/quadrant string, or an object of dimension code -> "High"/"Low".
nlohmann::json label_to_json(const LabelValue& label);
/// Throws kSchemaViolation.
LabelValue label_from_json(const nlohmann::json& j);

}  // namespace scalecast
