#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "scalecast/character_registry.hpp"
#include "scalecast/interview.hpp"
#include "scalecast/llm_gateway.hpp"
#include "scalecast/scale_bank.hpp"

namespace scalecast {

enum class SubsetName { kFullSingle, kPartSingle, kPartMulti };
std::string_view to_string(SubsetName n);
/// Throws kConfigError.
SubsetName parse_subset_name(std::string_view s);

struct DatasetSample {
  std::string id;
  std::string character;
  std::vector<Message> messages;
  std::set<std::string> subset_tags;
  std::string source_record;

  bool operator==(const DatasetSample&) const = default;
};

/// One system message, then user/assistant pairs, ending on assistant.
/// Single-tagged samples carry one pair, Multi-tagged five.
/// Throws kSchemaViolation.
void validate_sample(const DatasetSample& s);

struct SubsetReference {
  std::size_t questions = 0;
  std::size_t turns = 0;
  std::size_t samples = 0;
};

/// Sample counts of the original generation run, kept for comparison only.
SubsetReference reference_counts(SubsetName n);

struct SubsetManifest {
  SubsetName name = SubsetName::kFullSingle;
  std::size_t sample_count = 0;
  std::size_t question_count = 0;
  std::size_t turn_count = 0;
  std::vector<std::string> character_roster;
  std::string content_digest;
};

nlohmann::json to_json(const SubsetManifest& m);

struct BuiltSubset {
  std::vector<DatasetSample> samples;
  SubsetManifest manifest;
};

/// Assembles one subset from kept records. Any Test-split character among
/// the records raises kTestLeak, whatever the subset. An empty result is
/// only logged.
BuiltSubset build_subset(SubsetName name, const std::vector<InterviewRecord>& records, const ScaleBank& bank,
                         const Registry& registry, const PromptTemplates& templates = PromptTemplates::defaults());

/// Compact JSON lines {id, character, messages}, sorted by id.
std::string serialize_jsonl(std::vector<DatasetSample> samples);

/// Writes the serialization atomically. Throws kIoError.
void export_jsonl(const std::vector<DatasetSample>& samples, const std::filesystem::path& path);

/// Throws kMissingFile or kSchemaViolation (with the line number).
std::vector<DatasetSample> import_jsonl(const std::filesystem::path& path);

}  // namespace scalecast
