#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>
#include <unordered_map>

#include "hm/reasoner.hpp"

#include "httplib.h"
#include "json.hpp"

namespace hm {

using nlohmann::json;

struct HttpReasoner::Impl {
  HttpReasonerConfig config;
  std::unordered_map<uint64_t, std::string> cassette;

  explicit Impl(HttpReasonerConfig cfg) : config(std::move(cfg)) {
    if (!config.cassette_path.empty()) load_cassette();
  }

  void load_cassette() {
    std::ifstream in(config.cassette_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json rec = json::parse(line, nullptr, false);
      if (rec.is_discarded() || !rec.contains("digest")) continue;
      cassette[rec["digest"].get<uint64_t>()] =
          rec.value("response", std::string{});
    }
  }

  void append_cassette(uint64_t digest, const std::string& response) {
    if (config.cassette_path.empty()) return;
    std::ofstream out(config.cassette_path, std::ios::app);
    json rec{{"digest", digest}, {"response", response}};
    out << rec.dump() << '\n';
  }

  std::string call_remote(const PromptExchange& exchange, int& retries) {
    const char* key = std::getenv(config.api_key_env.c_str());
    if (!key || !*key) {
      throw BackendUnavailable("credential env var " + config.api_key_env +
                               " is unset");
    }
    json body{{"model", config.model},
              {"temperature", exchange.sampling.temperature},
              {"max_tokens", exchange.sampling.max_tokens},
              {"top_p", exchange.sampling.top_p},
              {"n", exchange.sampling.n}};
    json messages = json::array();
    if (!exchange.system.empty()) {
      messages.push_back({{"role", "system"}, {"content", exchange.system}});
    }
    for (const auto& m : exchange.messages) {
      messages.push_back({{"role", m.role}, {"content", m.text}});
    }
    body["messages"] = std::move(messages);

    httplib::Client client(config.endpoint);
    client.set_read_timeout(120, 0);
    httplib::Headers headers{
        {"Authorization", std::string("Bearer ") + key}};
    const std::string payload = body.dump();

    int backoff = config.initial_backoff_ms;
    std::string last_error = "no attempt made";
    for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
      if (attempt > 0) {
        std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
        backoff *= 2;
        ++retries;
      }
      auto res = client.Post(config.path, headers, payload,
                             "application/json");
      if (!res) {
        last_error = "transport error: " + httplib::to_string(res.error());
        continue;
      }
      if (res->status == 429 || res->status >= 500) {
        last_error = "status " + std::to_string(res->status);
        continue;
      }
      if (res->status != 200) {
        throw BackendUnavailable("completion endpoint returned status " +
                                 std::to_string(res->status));
      }
      json reply = json::parse(res->body, nullptr, false);
      if (reply.is_discarded() || !reply.contains("choices") ||
          reply["choices"].empty()) {
        last_error = "malformed completion payload";
        continue;
      }
      return reply["choices"][0]["message"]["content"].get<std::string>();
    }
    throw BackendUnavailable("completion request failed after retries: " +
                             last_error);
  }
};

HttpReasoner::HttpReasoner(HttpReasonerConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {}

HttpReasoner::~HttpReasoner() = default;

std::string HttpReasoner::complete(const PromptExchange& exchange) {
  uint64_t digest = exchange_digest(exchange);
  if (auto it = impl_->cassette.find(digest); it != impl_->cassette.end()) {
    emit_trace(ReasonerTrace{digest, it->second, 0, 0.0});
    return it->second;
  }
  if (impl_->config.replay_only) {
    throw BackendUnavailable("cassette miss in replay-only mode");
  }
  int retries = 0;
  auto start = std::chrono::steady_clock::now();
  std::string response = impl_->call_remote(exchange, retries);
  auto elapsed = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  impl_->cassette[digest] = response;
  impl_->append_cassette(digest, response);
  emit_trace(ReasonerTrace{digest, response, retries, elapsed});
  return response;
}

}  // namespace hm
