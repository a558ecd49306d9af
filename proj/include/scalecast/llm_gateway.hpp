#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <exception>
#include <filesystem>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "scalecast/error.hpp"

namespace scalecast {

enum class Role { kSystem, kUser, kAssistant };
std::string_view to_string(Role r);
Role parse_role(std::string_view s);

struct Message {
  Role role = Role::kUser;
  std::string content;

  bool operator==(const Message&) const = default;
};

struct ChatRequest {
  std::string model;
  std::vector<Message> messages;
  double temperature = 0.7;
  int max_tokens = 512;
  std::optional<std::int64_t> seed;

  /// Throws kSchemaViolation when an invariant does not hold.
  void validate() const;
};

/// Canonical serialization used for hashing and for the wire body.
nlohmann::json to_json(const ChatRequest& req);

enum class FinishReason { kStop, kLength, kError };
std::string_view to_string(FinishReason f);

struct Usage {
  std::int64_t prompt_tokens = 0;
  std::int64_t completion_tokens = 0;
};

struct ChatResponse {
  std::string content;
  FinishReason finish_reason = FinishReason::kStop;
  Usage usage;
  bool cached = false;
};

/// SHA-256 over the canonical request JSON.
struct CacheKey {
  std::string digest;

  static CacheKey of(const ChatRequest& req);
  bool operator==(const CacheKey&) const = default;
};

/// A failure worth retrying (timeouts, 429s, 5xx). The gateway rethrows it
/// once the retry budget is spent.
class TransientError : public Error {
 public:
  using Error::Error;
};

class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  virtual ChatResponse complete(const ChatRequest& req) = 0;
};

/// Scripted offline backend. A script is a JSON list of rules:
///
///   {"match": {"digest": "...", "message_substring": "..." | [...], "model": "..."},
///    "response": "..." | "responses": [...], "cycle": false,
///    "finish_reason": "stop", "error": "timeout|rate_limited|endpoint", "fail_times": 1}
///
/// The first matching rule answers. `message_substring` tests the request's
/// messages joined by newlines; a list requires every entry to occur. A
/// single `response` answers every match. A `responses` list is handed out
/// in order and raises kMockScriptExhausted after the last entry unless
/// `cycle` is set. `{{last_user}}` in a response is
/// replaced by the final user message.
class MockBackend : public ChatBackend {
 public:
  struct Rule {
    std::optional<std::string> digest;
    std::vector<std::string> substrings;
    std::optional<std::string> model;
    std::vector<std::string> responses;
    bool cycle = false;
    FinishReason finish_reason = FinishReason::kStop;
    std::optional<Errc> error;
    int fail_times = 0;
  };

  struct CallRecord {
    std::size_t seq = 0;
    std::string digest;
    std::string model;
    std::string response_digest;
  };

  MockBackend() = default;
  explicit MockBackend(std::vector<Rule> rules);
  static std::vector<Rule> parse_script(const nlohmann::json& script);
  static std::shared_ptr<MockBackend> from_json(const nlohmann::json& script);
  static std::shared_ptr<MockBackend> from_file(const std::filesystem::path& path);

  void add_rule(Rule rule);
  /// Artificial per-call latency, so tests can observe overlap.
  void set_latency(std::chrono::milliseconds latency) { latency_ = latency; }

  ChatResponse complete(const ChatRequest& req) override;

  std::vector<CallRecord> call_log() const;
  std::size_t call_count() const;
  std::size_t max_in_flight() const { return max_in_flight_.load(); }
  /// One JSON line per call, in call order.
  std::string transcript() const;

 private:
  struct RuleState {
    Rule rule;
    std::size_t next = 0;
    int failures = 0;
  };

  mutable std::mutex mu_;
  std::vector<RuleState> rules_;
  std::vector<CallRecord> log_;
  std::chrono::milliseconds latency_{0};
  std::atomic<std::size_t> in_flight_{0};
  std::atomic<std::size_t> max_in_flight_{0};
};

/// Process-wide switch checked by HttpBackend before any I/O. Mock runs turn
/// it off so an accidental real endpoint raises kOfflineGuard.
void set_network_allowed(bool allowed);
bool network_allowed();

struct HttpBackendConfig {
  /// Base URL up to and including the API version, e.g. https://api.openai.com/v1
  std::string endpoint_url;
  std::string api_key;
  std::chrono::milliseconds timeout{60000};
};

/// OpenAI-compatible POST {endpoint}/chat/completions.
class HttpBackend : public ChatBackend {
 public:
  explicit HttpBackend(HttpBackendConfig config);
  ChatResponse complete(const ChatRequest& req) override;

  /// Exposed for tests: maps a completion body to a response.
  static ChatResponse parse_completion(const nlohmann::json& body);

 private:
  HttpBackendConfig config_;
  std::string scheme_host_port_;
  std::string base_path_;
};

/// Content-addressed store: `<dir>/<digest[0:2]>/<digest>.json`. The first
/// writer of a key wins; later writes are no-ops. Entries carry the SHA-256
/// of their content and a mismatch on read counts as a miss.
class ResponseCache {
 public:
  explicit ResponseCache(std::optional<std::filesystem::path> dir = std::nullopt);

  std::optional<ChatResponse> get(const CacheKey& key);
  void put(const CacheKey& key, const ChatResponse& resp);
  std::size_t size() const;

 private:
  std::filesystem::path path_for(const CacheKey& key) const;

  std::optional<std::filesystem::path> dir_;
  mutable std::mutex mu_;
  std::map<std::string, ChatResponse> memory_;
};

struct RetryPolicy {
  /// Total attempts per request, including the first.
  int max_attempts = 4;
  std::chrono::milliseconds backoff_base{500};
  double multiplier = 2.0;
};

struct GatewayOptions {
  RetryPolicy retry;
  std::optional<std::filesystem::path> cache_dir;
  bool use_cache = true;
  double price_per_1k_tokens = 0.0;
  /// Injected so tests do not sleep through backoff.
  std::function<void(std::chrono::milliseconds)> sleep;
};

struct GatewayStats {
  std::int64_t requests = 0;
  std::int64_t backend_calls = 0;
  std::int64_t cache_hits = 0;
  std::int64_t retries = 0;
  std::int64_t failures = 0;
  std::int64_t prompt_tokens = 0;
  std::int64_t completion_tokens = 0;
  double cost = 0.0;
};

nlohmann::json to_json(const GatewayStats& s);

class ConcurrentGateway;

/// Thread-safe chat access with caching and bounded retries.
class Gateway {
 public:
  explicit Gateway(std::shared_ptr<ChatBackend> backend, GatewayOptions options = {});

  /// Errors: kTimeout / kRateLimited / kEndpointError after the retry budget,
  /// kMockScriptExhausted, kOfflineGuard, kSchemaViolation for invalid requests.
  ChatResponse chat(const ChatRequest& req);

  GatewayStats stats() const;
  ConcurrentGateway with_concurrency_limit(std::size_t n);

 private:
  std::shared_ptr<ChatBackend> backend_;
  GatewayOptions options_;
  ResponseCache cache_;
  mutable std::mutex stats_mu_;
  GatewayStats stats_;
};

/// Runs tasks on a fixed worker pool. Tasks sharing a lane run one at a time
/// in submission order; distinct lanes run in parallel.
class LaneExecutor {
 public:
  explicit LaneExecutor(std::size_t workers);
  ~LaneExecutor();
  LaneExecutor(const LaneExecutor&) = delete;
  LaneExecutor& operator=(const LaneExecutor&) = delete;

  void post(const std::string& lane, std::function<void()> task);
  /// Blocks until every posted task finished; rethrows the first exception.
  void wait();

 private:
  struct Lane {
    std::deque<std::function<void()>> tasks;
    bool busy = false;
    bool queued = false;
  };

  void worker_loop();

  std::mutex mu_;
  std::condition_variable cv_;
  std::condition_variable idle_cv_;
  std::map<std::string, Lane> lanes_;
  std::deque<std::string> ready_;
  std::size_t pending_ = 0;
  bool stop_ = false;
  std::exception_ptr first_error_;
  std::vector<std::thread> workers_;
};

/// Gateway handle with at most `n` requests in flight. Requests submitted on
/// the same lane (one lane per character) are issued in submission order.
class ConcurrentGateway {
 public:
  ConcurrentGateway(Gateway& gateway, std::size_t n);

  std::future<ChatResponse> submit(const std::string& lane, ChatRequest req);
  /// Runs a task that may issue several sequential chats on this lane.
  void run(const std::string& lane, std::function<void()> task);
  void wait();

  Gateway& gateway() { return *gateway_; }
  std::size_t limit() const { return limit_; }

 private:
  Gateway* gateway_;
  std::size_t limit_;
  std::unique_ptr<LaneExecutor> executor_;
};

}  // namespace scalecast
