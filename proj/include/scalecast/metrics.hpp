#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "scalecast/llm_gateway.hpp"

namespace scalecast {

// ---- Rouge-L ---------------------------------------------------------------

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// F1 over the token LCS; 0 when either side is empty or nothing overlaps.
double rouge_l_tokens(const std::vector<std::string>& candidate, const std::vector<std::string>& reference);

/// rouge_l_tokens over tokenize() of both texts.
double rouge_l(std::string_view candidate, std::string_view reference);

// ---- Motivation recognition ------------------------------------------------

struct McqOption {
  std::string letter;
  std::string text;
};

struct McqItem {
  std::string id;
  std::string scenario;
  std::vector<McqOption> options;
  std::string correct;
};

/// A JSON list of {id, scenario, options: [{letter, text}], correct}.
/// Throws kMcqSchemaError; kMissingFile for an absent file.
std::vector<McqItem> parse_mcq(const nlohmann::json& doc);
std::vector<McqItem> load_mcq(const std::filesystem::path& path);

/// "Answer: X" wins; otherwise the first standalone option letter.
std::optional<std::string> parse_mcq_answer(std::string_view reply, const std::vector<McqOption>& options);

struct McqOutcome {
  std::string id;
  std::optional<std::string> answer;
  bool correct = false;
};

struct McqReport {
  double accuracy = 0.0;
  std::size_t total = 0;
  std::size_t correct = 0;
  std::size_t unparsed = 0;
  std::vector<McqOutcome> items;
};

nlohmann::json to_json(const McqReport& r);

/// Unparseable replies count as incorrect. Throws kEmptyInput.
McqReport mr_accuracy(Gateway& gateway, const std::string& model, const std::vector<McqItem>& items,
                      std::string_view mcq_template);

// ---- Win rate --------------------------------------------------------------

struct WinRateItem {
  std::string id;
  std::string role_name;
  std::string role_description;
  std::string question;
  std::string candidate_answer;
  std::string reference_answer;
};

/// Model names shown to the judge; neutral so neither side is favoured.
inline constexpr std::string_view kWinRateNameA = "model_a";
inline constexpr std::string_view kWinRateNameB = "model_b";

/// The user message for one comparison, with `first` shown before `second`.
std::string render_winrate_prompt(const WinRateItem& item, std::string_view first, std::string_view second);
std::string winrate_system_prompt();

/// model name -> rank. Accepts JSON, Python literals and the typographic
/// quotes the template itself uses. Throws kRankParseError.
std::map<std::string, int> parse_rank_list(std::string_view reply);

struct WinRateOutcome {
  std::string id;
  bool candidate_first = true;
  std::optional<int> candidate_rank;
  std::optional<int> reference_rank;
  bool win = false;
  std::string error;
};

struct WinRateReport {
  double win_rate = 0.0;
  std::size_t wins = 0;
  std::size_t judged = 0;
  std::size_t parse_failures = 0;
  std::vector<WinRateOutcome> items;
};

nlohmann::json to_json(const WinRateReport& r);

/// Presentation order per item comes from derive_seed(seed, id). Parse
/// failures leave the denominator. Throws kEmptyInput, and kRankParseError
/// when no item could be parsed.
WinRateReport win_rate(Gateway& gateway, const std::string& judge_model, const std::vector<WinRateItem>& items,
                       std::uint64_t seed);

// ---- Five-dimension judging -----------------------------------------------

/// In report order.
inline constexpr std::string_view kJudgeDimensions[] = {"memorization", "personality", "values", "stability",
                                                        "hallucination"};

/// The judge template for `dimension`, filled with str.format semantics.
std::string render_dimension_prompt(std::string_view dimension, const std::string& agent_name,
                                    const std::string& agent_context, const std::string& interactions);

struct DimensionalScore {
  std::string character;
  /// A missing entry means the judge reply had no parseable score.
  std::map<std::string, int> scores;
  std::vector<std::string> missing;
  std::string transcript_ref;
};

nlohmann::json to_json(const DimensionalScore& s);

/// Each dimension judged independently at temperature 0; scores parsed as
/// the final standalone integer in [1, 7].
DimensionalScore dimensional_scores(Gateway& gateway, const std::string& judge_model, const std::string& character,
                                    const std::string& agent_context, const std::string& interactions);

/// "Q: ...\nA: ..." blocks separated by blank lines.
std::string format_interactions(const std::vector<std::pair<std::string, std::string>>& turns);

// ---- Multi-turn consistency -----------------------------------------------

enum class StdMode { kPopulation, kSample };

struct ConsistencyReport {
  std::string scale_id;
  std::map<std::string, double> per_dimension_std;
  double average_std = 0.0;
  std::size_t n_rounds = 0;
};

nlohmann::json to_json(const ConsistencyReport& r);

/// Errors: kRoundCountMismatch, kKeySetMismatch, kEmptyInput (no dimensions).
ConsistencyReport consistency(const std::vector<std::map<std::string, double>>& rounds, StdMode mode = StdMode::kPopulation,
                              std::size_t expected_rounds = 5, std::string scale_id = {});

}  // namespace scalecast
