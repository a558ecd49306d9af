#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "scalecast/character_registry.hpp"
#include "scalecast/llm_gateway.hpp"
#include "scalecast/scale_bank.hpp"

namespace scalecast {

inline constexpr std::size_t kMultiTurns = 5;

struct Turn {
  std::string question_id;
  std::string dimension_code;
  std::string question_text;
  std::string response_text;

  bool operator==(const Turn&) const = default;
};

enum class InterviewKind { kSingle, kMulti };
std::string_view to_string(InterviewKind k);

struct InterviewRecord {
  std::string id;
  std::string character;
  std::string scale_id;
  InterviewKind kind = InterviewKind::kSingle;
  std::vector<Turn> turns;
  /// The persona message the generator saw; reused verbatim on export.
  std::string system_prompt;
  std::string generator_model;
  std::string created_at;
  std::uint64_t seed = 0;

  bool operator==(const InterviewRecord&) const = default;
};

nlohmann::json to_json(const InterviewRecord& r);
InterviewRecord record_from_json(const nlohmann::json& j);

/// Throws kSchemaViolation when the turn count or dimension distinctness
/// does not fit the record kind.
void validate_record(const InterviewRecord& r);

struct SuitabilityVerdict {
  std::string question_id;
  std::string character;
  bool suitable = false;
  std::string judge_rationale;
  /// Set when the judge reply could not be parsed; the question is then
  /// treated as unsuitable.
  bool flagged = false;
};

nlohmann::json to_json(const SuitabilityVerdict& v);
SuitabilityVerdict verdict_from_json(const nlohmann::json& j);

/// Thread-safe store of verdicts keyed by (character, question id).
class SuitabilityBook {
 public:
  SuitabilityBook() = default;
  SuitabilityBook(const SuitabilityBook& other);
  SuitabilityBook& operator=(const SuitabilityBook& other);

  void record(SuitabilityVerdict v);
  std::optional<SuitabilityVerdict> find(const std::string& character, const std::string& question_id) const;
  bool is_suitable(const std::string& character, const std::string& question_id) const;
  /// Sorted by (character, question id).
  std::vector<SuitabilityVerdict> all() const;
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::map<std::pair<std::string, std::string>, SuitabilityVerdict> verdicts_;
};

/// Mustache-slot templates. Defaults are compiled in; any file present in a
/// prompt directory overrides its default.
struct PromptTemplates {
  std::string rpa_system;
  std::string rpa_turn;
  std::string suitability;
  std::string assessment;
  std::string mcq;

  static PromptTemplates defaults();
  static PromptTemplates load(const std::filesystem::path& dir);
};

struct RpaPromptSpec {
  std::string character;
  std::string description;
  std::vector<MemoryExcerpt> memory_snippets;
  /// Prior (question, response) turns.
  std::vector<std::pair<std::string, std::string>> history;
  std::string question;
};

/// System message followed by alternating user/assistant history and the new
/// user turn. Throws kPreconditionViolation if history is already full.
std::vector<Message> render_rpa_messages(const PromptTemplates& t, const RpaPromptSpec& spec,
                                         std::size_t max_turns = kMultiTurns);
std::string render_rpa_system(const PromptTemplates& t, const RpaPromptSpec& spec);

struct InterviewOptions {
  std::string generator_model = "generator";
  std::string judge_model = "judge";
  double temperature = 0.7;
  int max_tokens = 512;
  std::size_t memory_k = 3;
  std::string created_at;
};

/// Parses a YES/NO verdict: the first word of the first non-blank line, or
/// failing that a lone standalone yes/no anywhere in the reply.
/// Throws kJudgeParseError.
bool parse_yes_no(std::string_view reply);

class InterviewEngine {
 public:
  InterviewEngine(Gateway& gateway, PromptTemplates templates, InterviewOptions options);

  /// Never throws kJudgeParseError: an unparseable reply yields an
  /// unsuitable, flagged verdict. Gateway errors propagate.
  SuitabilityVerdict judge_suitability(const CharacterProfile& character, const Question& question);

  /// Errors: kPreconditionViolation (no suitable verdict; no gateway call),
  /// kEmptyResponse (blank twice), gateway errors with context.
  InterviewRecord run_single_interview(const CharacterProfile& character, const Question& question,
                                       const SuitabilityBook& book, std::uint64_t seed);

  /// Five turns over distinct scored dimensions, each with at least one
  /// suitable question. Throws kInsufficientDimensions otherwise.
  InterviewRecord run_multi_interview(const CharacterProfile& character, const Scale& scale,
                                      const SuitabilityBook& book, std::uint64_t rng_seed, std::size_t index);

  /// Asks the questions in order within one conversation, each turn seeing
  /// the full history. No suitability or distinctness checks.
  std::vector<Turn> run_conversation(const CharacterProfile& character, const std::vector<const Question*>& questions,
                                     std::uint64_t seed, const std::string& context, std::string* system_prompt = nullptr);

  const PromptTemplates& templates() const { return templates_; }
  const InterviewOptions& options() const { return options_; }

 private:
  std::string ask(const std::vector<Message>& messages, std::uint64_t seed, const std::string& context);

  Gateway& gateway_;
  PromptTemplates templates_;
  InterviewOptions options_;
};

std::string single_record_id(const std::string& character, const std::string& scale_id,
                             const std::string& question_id);
std::string multi_record_id(const std::string& character, const std::string& scale_id, std::size_t index);

}  // namespace scalecast
