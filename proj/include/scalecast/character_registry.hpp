#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "scalecast/scale_bank.hpp"

namespace scalecast {

enum class Source { kRoleLLM, kChatHaruhi, kOther };
enum class Split { kTrain, kTest };

std::string_view to_string(Source s);
std::string_view to_string(Split s);

struct MemoryExcerpt {
  std::string text;
  std::string source_tag;
};

struct CharacterProfile {
  std::string name;
  Source source = Source::kOther;
  std::string description;
  std::vector<MemoryExcerpt> memory;
  Split split = Split::kTrain;
};

struct GroundTruthLabel {
  std::string character;
  std::string scale_id;
  LabelValue label;
};

struct Registry {
  std::map<std::string, CharacterProfile> characters;
  std::vector<GroundTruthLabel> labels;

  /// Throws kUnknownCharacter.
  const CharacterProfile& at(std::string_view name) const;
  bool contains(std::string_view name) const;
  bool is_test(std::string_view name) const;
};

/// Errors: kMissingFile, kSchemaViolation, kDanglingLabel.
Registry load_registry(const std::filesystem::path& path);
Registry parse_registry(const nlohmann::json& doc);
nlohmann::json to_json(const Registry& reg);

/// Checks every label against the active bank: the scale must exist and the
/// label must fit its alphabet. Throws kSchemaViolation.
void validate_labels(const Registry& reg, const ScaleBank& bank);

struct RegistrySplit {
  std::vector<CharacterProfile> train;
  std::vector<CharacterProfile> test;
};

RegistrySplit split_registry(const Registry& reg);

/// Throws kUnknownCharacter for unregistered names; returns nullopt when the
/// pair simply has no annotation.
std::optional<GroundTruthLabel> ground_truth_for(const Registry& reg, std::string_view character,
                                                 std::string_view scale_id);

/// Lexical top-k: excerpts ranked by the number of distinct query tokens
/// they contain; ties keep registry order; zero-overlap excerpts are still
/// returned if fewer than k excerpts overlap.
std::vector<MemoryExcerpt> retrieve_memory(const CharacterProfile& profile, std::string_view query,
                                           std::size_t k = 3);

}  // namespace scalecast
