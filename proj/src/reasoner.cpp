#include <cstddef>
#include <stdexcept>
#include <utility>

#include "hm/reasoner.hpp"

namespace hm {

namespace detail {
// generated into prompts_data.cpp at configure time
struct PromptEntry {
  const char* name;
  const char* text;
};
extern const PromptEntry kPromptTemplates[];
extern const std::size_t kPromptTemplateCount;
}  // namespace detail

const std::string& prompt_template(const std::string& name) {
  static std::map<std::string, std::string> cache = [] {
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < detail::kPromptTemplateCount; ++i) {
      m.emplace(detail::kPromptTemplates[i].name,
                detail::kPromptTemplates[i].text);
    }
    return m;
  }();
  auto it = cache.find(name);
  if (it == cache.end()) {
    throw std::invalid_argument("unknown prompt template: " + name);
  }
  return it->second;
}

std::string fill_template(const std::string& tpl,
                          const std::map<std::string, std::string>& vars) {
  std::string out;
  out.reserve(tpl.size());
  size_t i = 0;
  while (i < tpl.size()) {
    if (tpl[i] == '{') {
      size_t close = tpl.find('}', i);
      if (close != std::string::npos) {
        auto it = vars.find(tpl.substr(i + 1, close - i - 1));
        if (it != vars.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out.push_back(tpl[i]);
    ++i;
  }
  return out;
}

std::unique_ptr<Reasoner> make_reasoner(const std::string& spec) {
  if (spec.empty() || spec == "oracle") {
    return std::make_unique<OracleReasoner>();
  }
  if (spec.rfind("replay:", 0) == 0) {
    HttpReasonerConfig cfg;
    cfg.cassette_path = spec.substr(7);
    cfg.replay_only = true;
    return std::make_unique<HttpReasoner>(cfg);
  }
  if (spec.rfind("http://", 0) == 0 || spec.rfind("https://", 0) == 0) {
    HttpReasonerConfig cfg;
    std::string rest = spec;
    // optional "<endpoint>|<model>|<cassette>" suffixes
    size_t bar = rest.find('|');
    if (bar != std::string::npos) {
      cfg.endpoint = rest.substr(0, bar);
      rest = rest.substr(bar + 1);
      bar = rest.find('|');
      if (bar != std::string::npos) {
        cfg.model = rest.substr(0, bar);
        cfg.cassette_path = rest.substr(bar + 1);
      } else if (!rest.empty()) {
        cfg.model = rest;
      }
    } else {
      cfg.endpoint = rest;
    }
    return std::make_unique<HttpReasoner>(cfg);
  }
  throw std::invalid_argument("unknown reasoner spec: " + spec);
}

}  // namespace hm
