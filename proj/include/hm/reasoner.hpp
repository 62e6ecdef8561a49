#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hm/core.hpp"

namespace hm {

struct SamplingConfig {
  double temperature = 0.1;
  int max_tokens = 4000;
  double top_p = 1.0;
  int n = 1;
};

struct ChatMessage {
  std::string role;  // "user" or "assistant"
  std::string text;
};

struct PromptExchange {
  std::string system;
  std::vector<ChatMessage> messages;
  SamplingConfig sampling;
};

struct ReasonerTrace {
  uint64_t digest = 0;
  std::string response;
  int retry_count = 0;
  double latency_ms = 0.0;
};

struct BackendUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

uint64_t exchange_digest(const PromptExchange& exchange);

// The pluggable text-completion backend realizing every LLM(.) call.
class Reasoner {
 public:
  virtual ~Reasoner() = default;
  virtual std::string complete(const PromptExchange& exchange) = 0;

  using TraceSink = std::function<void(const ReasonerTrace&)>;
  void set_trace_sink(TraceSink sink) { trace_sink_ = std::move(sink); }

 protected:
  void emit_trace(const ReasonerTrace& t) {
    if (trace_sink_) trace_sink_(t);
  }

 private:
  TraceSink trace_sink_;
};

// Deterministic rule-based stand-in for the LLM: identical exchange text
// always yields an identical response, across processes.
class OracleReasoner : public Reasoner {
 public:
  std::string complete(const PromptExchange& exchange) override;
};

struct HttpReasonerConfig {
  std::string endpoint;      // e.g. https://api.example.com
  std::string path = "/v1/chat/completions";
  std::string model = "gpt-4-1106-preview";
  std::string api_key_env = "HM_API_KEY";
  int max_retries = 3;
  int initial_backoff_ms = 500;
  std::string cassette_path;  // record/replay file; empty disables
  bool replay_only = false;   // never touch the network, cassette must hit
};

// Chat-completion HTTP client with retry/backoff and a JSONL cassette for
// offline replays. Credentials come only from the environment.
class HttpReasoner : public Reasoner {
 public:
  explicit HttpReasoner(HttpReasonerConfig config);
  ~HttpReasoner() override;
  std::string complete(const PromptExchange& exchange) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// name -> template text, bundled from data/prompts/.
const std::string& prompt_template(const std::string& name);

// Replace every {name} placeholder; unknown placeholders are left intact.
std::string fill_template(const std::string& tpl,
                          const std::map<std::string, std::string>& vars);

std::unique_ptr<Reasoner> make_reasoner(const std::string& spec);

}  // namespace hm
