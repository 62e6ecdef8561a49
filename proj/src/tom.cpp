#include "hm/tom.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "hm/literal.hpp"

namespace hm {

namespace {

std::vector<Hypothesis> kEmptyStream;
std::vector<InteractionRecord> kEmptyHistory;

std::string render_inventory_map(int kinds, const Inventory& inv) {
  std::ostringstream os;
  os << '{';
  for (int k = 0; k < kinds; ++k) {
    if (k) os << ", ";
    if (kinds == 3) {
      os << '\'' << rws_kind_name(k) << '/' << rws_color_name(k) << "': ";
    } else {
      os << '\'' << pd_kind_name(k) << "': ";
    }
    os << inv.counts[k];
  }
  os << '}';
  return os.str();
}

std::optional<Inventory> inventory_from_literal(const LiteralValue& v,
                                                int kinds) {
  if (!v.is(LiteralValue::Kind::Map)) return std::nullopt;
  Inventory inv;
  inv.counts.assign(kinds, 0);
  int seen = 0;
  for (const auto& [key, val] : v.entries()) {
    if (!val.is(LiteralValue::Kind::Int)) continue;
    for (int k = 0; k < kinds; ++k) {
      const char* name = kinds == 3 ? rws_kind_name(k) : pd_kind_name(k);
      if (key.find(name) != std::string::npos) {
        inv.counts[k] = static_cast<int>(val.as_int());
        ++seen;
        break;
      }
    }
  }
  if (seen != kinds) return std::nullopt;
  return inv;
}

// complete() with a single retry around response parsing.
std::optional<LiteralValue> ask(Reasoner* reasoner,
                                const PromptExchange& exchange) {
  for (int attempt = 0; attempt < 2; ++attempt) {
    auto parsed = parse_response_map(reasoner->complete(exchange));
    if (parsed) return parsed;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LiteralValue> parse_response_map(const std::string& response) {
  auto r = parse_literal(extract_block(response));
  if (!r.ok() || !r.value->is(LiteralValue::Kind::Map)) return std::nullopt;
  return *r.value;
}

// ---- HypothesisBank --------------------------------------------------

bool HypothesisBank::empty(PlayerId opponent) const {
  auto it = streams_.find(opponent);
  return it == streams_.end() || it->second.empty();
}

const std::vector<Hypothesis>& HypothesisBank::stream(
    PlayerId opponent) const {
  auto it = streams_.find(opponent);
  return it == streams_.end() ? kEmptyStream : it->second;
}

Hypothesis& HypothesisBank::add(PlayerId opponent, std::string text,
                                int interaction_index) {
  auto& s = streams_[opponent];
  s.push_back(Hypothesis{next_id_++, std::move(text), 0.0, interaction_index,
                         {}, std::nullopt});
  return s.back();
}

void HypothesisBank::evaluate(PlayerId opponent, int actual_feature) {
  auto it = streams_.find(opponent);
  if (it == streams_.end()) return;
  for (Hypothesis& h : it->second) {
    if (!h.pending) continue;
    bool correct = *h.pending == actual_feature;
    double r = correct ? cfg_.reward_scale : -cfg_.reward_scale;
    h.value += cfg_.alpha * (r - h.value);
    h.log.push_back(PredictionEntry{static_cast<int>(h.log.size()) + 1,
                                    *h.pending, actual_feature, correct});
    h.pending.reset();
  }
}

void HypothesisBank::apply_reward(PlayerId opponent, int id, double reward) {
  auto it = streams_.find(opponent);
  if (it == streams_.end()) return;
  for (Hypothesis& h : it->second) {
    if (h.id == id) h.value += cfg_.alpha * (reward - h.value);
  }
}

void HypothesisBank::set_pending(PlayerId opponent, int id, int predicted) {
  auto it = streams_.find(opponent);
  if (it == streams_.end()) return;
  for (Hypothesis& h : it->second) {
    if (h.id == id) h.pending = predicted;
  }
}

void HypothesisBank::clear_pending(PlayerId opponent) {
  auto it = streams_.find(opponent);
  if (it == streams_.end()) return;
  for (Hypothesis& h : it->second) h.pending.reset();
}

const Hypothesis* HypothesisBank::validated(PlayerId opponent) const {
  const Hypothesis* best = nullptr;
  for (const Hypothesis& h : stream(opponent)) {
    if (h.value < cfg_.validation_threshold) continue;
    // ties break toward the newer hypothesis
    if (!best || h.value >= best->value) best = &h;
  }
  return best;
}

const Hypothesis* HypothesisBank::active(PlayerId opponent) const {
  if (const Hypothesis* v = validated(opponent)) return v;
  const auto& s = stream(opponent);
  return s.empty() ? nullptr : &s.back();
}

std::vector<const Hypothesis*> HypothesisBank::top_positive(
    PlayerId opponent) const {
  std::vector<const Hypothesis*> out;
  for (const Hypothesis& h : stream(opponent)) {
    if (h.value > 0.0) out.push_back(&h);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Hypothesis* a, const Hypothesis* b) {
                     return a->value > b->value;
                   });
  if (static_cast<int>(out.size()) > cfg_.top_k) out.resize(cfg_.top_k);
  return out;
}

std::vector<const Hypothesis*> HypothesisBank::prediction_set(
    PlayerId opponent) const {
  if (const Hypothesis* v = validated(opponent)) return {v};
  std::vector<const Hypothesis*> out;
  for (const Hypothesis& h : stream(opponent)) out.push_back(&h);
  std::stable_sort(out.begin(), out.end(),
                   [](const Hypothesis* a, const Hypothesis* b) {
                     return a->value > b->value;
                   });
  if (static_cast<int>(out.size()) > cfg_.top_k) out.resize(cfg_.top_k);
  const Hypothesis* act = active(opponent);
  if (act && std::find(out.begin(), out.end(), act) == out.end()) {
    if (!out.empty()) out.pop_back();
    out.push_back(act);
  }
  return out;
}

// ---- TomEngine -------------------------------------------------------

TomEngine::TomEngine(int kinds, bool arena, TomConfig cfg, Reasoner* reasoner)
    : kinds_(kinds), arena_(arena), bank_(cfg), reasoner_(reasoner) {}

const std::vector<InteractionRecord>& TomEngine::history(
    PlayerId opponent) const {
  auto it = histories_.find(opponent);
  return it == histories_.end() ? kEmptyHistory : it->second;
}

int TomEngine::active_id(PlayerId opponent) const {
  const Hypothesis* h = bank_.active(opponent);
  return h ? h->id : -1;
}

std::string TomEngine::play_word(int feature) const {
  if (feature < 0) return "unknown";
  return kinds_ == 3 ? rws_kind_name(feature) : pd_kind_name(feature);
}

std::string TomEngine::last_interaction_text(
    const InteractionRecord& record) const {
  std::ostringstream os;
  os << "'your_inventory': " << render_inventory_map(kinds_, record.own_inventory)
     << ", 'rewards': " << record.reward;
  return os.str();
}

int TomEngine::estimate_feature(PlayerId opponent, InteractionRecord& record,
                                int step) {
  PromptExchange ex;
  ex.system = system_;
  ex.messages.push_back(ChatMessage{
      "user",
      fill_template(prompt_template("tom_estimate"),
                    {{"step", std::to_string(step)},
                     {"last_interaction", last_interaction_text(record)}})});
  auto parsed = ask(reasoner_, ex);
  if (!parsed) return -1;
  const LiteralValue* inv = parsed->find("possible_opponent_inventory");
  if (!inv) return -1;
  auto est = inventory_from_literal(*inv, kinds_);
  if (!est) return -1;
  record.estimated_opponent_inventory = *est;
  record.opponent_feature = est->argmax();
  return record.opponent_feature;
}

void TomEngine::refine(PlayerId opponent, const InteractionRecord& record,
                       int step) {
  std::ostringstream tops;
  tops << '[';
  bool first = true;
  for (const Hypothesis* h : bank_.top_positive(opponent)) {
    if (!first) tops << ", ";
    first = false;
    tops << "{'hypothesis': '" << h->text << "', 'value': " << h->value << '}';
  }
  tops << ']';
  PromptExchange ex;
  ex.system = system_;
  ex.messages.push_back(ChatMessage{
      "user",
      fill_template(
          prompt_template("tom_hypothesize"),
          {{"rewards", std::to_string(total_reward_)},
           {"step", std::to_string(step)},
           {"last_interaction", last_interaction_text(record)},
           {"interaction_history",
            render_interaction_history(history(opponent), kinds_)},
           {"top_hypotheses", tops.str()}})});
  auto parsed = ask(reasoner_, ex);
  std::string text;
  if (parsed) {
    if (const LiteralValue* s = parsed->find("Opponent_strategy");
        s && s->is(LiteralValue::Kind::String)) {
      text = s->as_string();
    }
  }
  if (text.empty()) {
    text = "pure " + play_word(record.opponent_feature);
  }
  bank_.add(opponent, text, static_cast<int>(history(opponent).size()));
}

void TomEngine::predict_round(PlayerId opponent, int step, TomOutcome& out) {
  const auto& hist = history(opponent);
  int my_last = hist.empty() ? -1 : hist.back().own_feature;
  int opp_last = hist.empty() ? -1 : hist.back().opponent_feature;
  const Hypothesis* act = bank_.active(opponent);
  const char* tpl = arena_ ? "tom_predict" : "tom_predict_counter";
  for (const Hypothesis* h : bank_.prediction_set(opponent)) {
    PromptExchange ex;
    ex.system = system_;
    ex.messages.push_back(ChatMessage{
        "user",
        fill_template(
            prompt_template(tpl),
            {{"opponent_id", "player_" + std::to_string(opponent)},
             {"step", std::to_string(step)},
             {"interaction_history",
              render_interaction_history(hist, kinds_)},
             {"hypothesis", h->text},
             {"my_last_play", play_word(my_last)},
             {"opponent_last_play", play_word(opp_last)},
             {"round_count", std::to_string(hist.size())}})});
    auto parsed = ask(reasoner_, ex);
    if (!parsed) continue;
    const LiteralValue* pred = parsed->find("predicted_opponent_next_inventory");
    auto pred_inv = pred ? inventory_from_literal(*pred, kinds_) : std::nullopt;
    if (pred_inv) bank_.set_pending(opponent, h->id, pred_inv->argmax());
    if (h == act) {
      out.active_hypothesis = h->text;
      out.validated = bank_.validated(opponent) == h;
      if (!arena_) {
        const LiteralValue* mine = parsed->find("my_next_inventory");
        auto mine_inv =
            mine ? inventory_from_literal(*mine, kinds_) : std::nullopt;
        if (mine_inv) out.target_inventory = *mine_inv;
      }
    }
  }
  if (arena_) {
    PromptExchange ex;
    ex.system = system_;
    ex.messages.push_back(ChatMessage{
        "user",
        fill_template(prompt_template("tom_counter_arena"),
                      {{"step", std::to_string(step)},
                       {"interaction_history",
                        render_interaction_history(overall_, kinds_)},
                       {"hypotheses_summary", hypotheses_summary()}})});
    auto parsed = ask(reasoner_, ex);
    if (parsed) {
      if (const LiteralValue* mine = parsed->find("my_next_inventory")) {
        if (auto inv = inventory_from_literal(*mine, kinds_)) {
          out.target_inventory = *inv;
        }
      }
      if (const LiteralValue* seek = parsed->find("opponents_to_seekout");
          seek && seek->is(LiteralValue::Kind::List)) {
        for (const auto& item : seek->items()) {
          if (!item.is(LiteralValue::Kind::String)) continue;
          const std::string& s = item.as_string();
          size_t us = s.rfind('_');
          if (us != std::string::npos) {
            out.seekout.push_back(std::atoi(s.c_str() + us + 1));
          }
        }
      }
    }
  }
}

std::string TomEngine::hypotheses_summary() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [opponent, stream] : bank_.streams()) {
    if (stream.empty()) continue;
    const Hypothesis* act = bank_.active(opponent);
    const auto& hist = history(opponent);
    if (!first) os << ", ";
    first = false;
    os << "'player_" << opponent << "': {'hypothesis': '" << act->text
       << "', 'value': " << act->value << ", 'validated': "
       << (bank_.validated(opponent) == act && act->value >=
                   bank_.config().validation_threshold
               ? "True"
               : "False")
       << ", 'my_last_play': '"
       << play_word(hist.empty() ? -1 : hist.back().own_feature)
       << "', 'opponent_last_play': '"
       << play_word(hist.empty() ? -1 : hist.back().opponent_feature)
       << "', 'round_count': " << hist.size() << '}';
  }
  os << '}';
  return os.str();
}

TomOutcome TomEngine::on_interaction(PlayerId opponent,
                                     InteractionRecord record, int step) {
  TomOutcome out;
  total_reward_ += record.reward;
  record.own_feature = record.own_inventory.argmax();
  out.opponent_feature = estimate_feature(opponent, record, step);
  out.estimated_inventory = record.estimated_opponent_inventory;
  histories_[opponent].push_back(record);
  overall_.push_back(record);
  if (out.opponent_feature >= 0) {
    bank_.evaluate(opponent, out.opponent_feature);
  } else {
    bank_.clear_pending(opponent);
  }
  if (!bank_.validated(opponent)) {
    refine(opponent, record, step);
    out.generated_new = true;
  }
  predict_round(opponent, step, out);
  return out;
}

TomOutcome TomEngine::on_interaction_counterfactual(PlayerId opponent,
                                                    InteractionRecord record,
                                                    int step,
                                                    int executed_id) {
  TomOutcome out;
  total_reward_ += record.reward;
  record.own_feature = record.own_inventory.argmax();
  out.opponent_feature = estimate_feature(opponent, record, step);
  histories_[opponent].push_back(record);
  overall_.push_back(record);
  const double c = bank_.config().reward_scale;
  // score everything that made a recommendation last round
  std::vector<std::pair<int, int>> pendings;  // (id, predicted feature)
  for (const Hypothesis& h : bank_.stream(opponent)) {
    if (h.pending) pendings.emplace_back(h.id, *h.pending);
  }
  for (auto [id, predicted] : pendings) {
    if (id == executed_id) {
      double r = record.reward > 0.5 ? c : record.reward < -0.5 ? -c : 0.0;
      bank_.apply_reward(opponent, id, r);
      continue;
    }
    if (out.opponent_feature < 0) continue;
    int recommended = kinds_ == 3 ? rws_counter(predicted) : kCooperate;
    std::string hyp_text;
    for (const Hypothesis& h : bank_.stream(opponent)) {
      if (h.id == id) hyp_text = h.text;
    }
    PromptExchange ex;
    ex.system = system_;
    ex.messages.push_back(ChatMessage{
        "user",
        fill_template(prompt_template("counterfactual"),
                      {{"step", std::to_string(step)},
                       {"opponent_play", play_word(out.opponent_feature)},
                       {"hypothesis", hyp_text},
                       {"hypothetical_play", play_word(recommended)}})});
    auto parsed = ask(reasoner_, ex);
    if (!parsed) continue;
    const LiteralValue* o = parsed->find("counterfactual_outcome");
    if (!o || !o->is(LiteralValue::Kind::String)) continue;
    double r = 0.0;
    if (o->as_string() == "positive") r = c;
    if (o->as_string() == "negative") r = -c;
    bank_.apply_reward(opponent, id, r);
  }
  bank_.clear_pending(opponent);
  if (!bank_.validated(opponent)) {
    refine(opponent, record, step);
    out.generated_new = true;
  }
  predict_round(opponent, step, out);
  return out;
}

}  // namespace hm
