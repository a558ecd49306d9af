#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scalecast {

enum class Errc {
  kMissingFile,
  kSchemaViolation,
  kCountMismatch,
  kEmptyPartSubset,
  kDanglingLabel,
  kUnknownCharacter,
  kTimeout,
  kRateLimited,
  kEndpointError,
  kMockScriptExhausted,
  kOfflineGuard,
  kJudgeParseError,
  kPreconditionViolation,
  kEmptyResponse,
  kInsufficientDimensions,
  kJudgeFailure,
  kMissingDimension,
  kEmptyInput,
  kTestLeak,
  kEmptyDataset,
  kIoError,
  kMcqSchemaError,
  kRankParseError,
  kScoreParseError,
  kRoundCountMismatch,
  kKeySetMismatch,
  kNoGroundTruth,
  kConfigError,
  kMissingStore,
};

std::string_view to_string(Errc code);

/// Every failure the library reports carries one of the codes above, so
/// callers can branch on the code and still show a readable message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace scalecast
