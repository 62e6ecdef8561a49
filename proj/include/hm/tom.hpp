#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hm/literal.hpp"
#include "hm/memory.hpp"
#include "hm/payoff.hpp"
#include "hm/reasoner.hpp"

namespace hm {

struct PredictionEntry {
  int round = 0;
  int predicted = -1;
  int actual = -1;
  bool correct = false;
};

// A natural-language belief about one opponent's policy, scored by how
// well its predictions have matched observed behavior.
struct Hypothesis {
  int id = 0;
  std::string text;
  double value = 0.0;
  int created_at = 0;  // interaction index when generated
  std::vector<PredictionEntry> log;
  std::optional<int> pending;  // predicted feature awaiting the next round
};

struct TomConfig {
  double alpha = 0.3;             // learning rate
  double reward_scale = 1.0;      // intrinsic reward magnitude c
  double validation_threshold = 0.7;
  int top_k = 5;
};

// Per-opponent hypothesis streams with the value update
//   V <- V + alpha * (r - V),  r = +c on a correct prediction else -c.
class HypothesisBank {
 public:
  explicit HypothesisBank(TomConfig cfg = {}) : cfg_(cfg) {}

  const TomConfig& config() const { return cfg_; }

  bool empty(PlayerId opponent) const;
  const std::vector<Hypothesis>& stream(PlayerId opponent) const;
  const std::map<PlayerId, std::vector<Hypothesis>>& streams() const {
    return streams_;
  }

  Hypothesis& add(PlayerId opponent, std::string text, int interaction_index);

  // Score every hypothesis with a pending prediction against the observed
  // feature, append to its log, and clear the pending slot.
  void evaluate(PlayerId opponent, int actual_feature);

  // One value update with an explicit reward (counterfactual mode).
  void apply_reward(PlayerId opponent, int id, double reward);

  void set_pending(PlayerId opponent, int id, int predicted);
  void clear_pending(PlayerId opponent);

  // Highest-valued hypothesis at or above the validation threshold.
  const Hypothesis* validated(PlayerId opponent) const;
  // The validated hypothesis if any, else the newest.
  const Hypothesis* active(PlayerId opponent) const;
  // Up to k hypotheses with positive value, best first (refinement context).
  std::vector<const Hypothesis*> top_positive(PlayerId opponent) const;
  // Up to k hypotheses by value, best first, ties toward newer; always
  // includes the active one (prediction targets).
  std::vector<const Hypothesis*> prediction_set(PlayerId opponent) const;

 private:
  TomConfig cfg_;
  std::map<PlayerId, std::vector<Hypothesis>> streams_;
  int next_id_ = 0;
};

// One pass of the interaction-triggered reasoning loop.
struct TomOutcome {
  int opponent_feature = -1;
  std::optional<Inventory> estimated_inventory;
  std::string active_hypothesis;
  bool validated = false;
  std::optional<Inventory> target_inventory;  // counter plan
  std::vector<PlayerId> seekout;              // arena only
  bool generated_new = false;
};

// Drives the estimate / evaluate / refine / predict / counter sequence for
// the matrix substrates and owns the per-opponent interaction histories.
class TomEngine {
 public:
  TomEngine(int kinds, bool arena, TomConfig cfg, Reasoner* reasoner);

  // System-prompt text prepended to every reasoner exchange.
  void set_system(std::string text) { system_ = std::move(text); }

  // Full post-interaction pass. `record` is this round's interaction with
  // `opponent`; its estimated-feature fields are filled in.
  TomOutcome on_interaction(PlayerId opponent, InteractionRecord record,
                            int step);

  // Counterfactual-evaluation variant: hypotheses are scored from the
  // realized reward (executed plan) or a reasoner judgment (the rest)
  // instead of prediction matching.
  TomOutcome on_interaction_counterfactual(PlayerId opponent,
                                           InteractionRecord record, int step,
                                           int executed_id);

  HypothesisBank& bank() { return bank_; }
  const HypothesisBank& bank() const { return bank_; }
  const std::vector<InteractionRecord>& history(PlayerId opponent) const;
  const std::vector<InteractionRecord>& overall_history() const {
    return overall_;
  }
  int active_id(PlayerId opponent) const;

  // Rendered per-player hypothesis map for the subgoal and arena prompts.
  std::string hypotheses_summary() const;

  int kinds() const { return kinds_; }

 private:
  int estimate_feature(PlayerId opponent, InteractionRecord& record, int step);
  void refine(PlayerId opponent, const InteractionRecord& record, int step);
  void predict_round(PlayerId opponent, int step, TomOutcome& out);
  std::string last_interaction_text(const InteractionRecord& record) const;
  std::string play_word(int feature) const;

  int kinds_;
  bool arena_;
  std::string system_;
  HypothesisBank bank_;
  Reasoner* reasoner_;
  std::map<PlayerId, std::vector<InteractionRecord>> histories_;
  std::vector<InteractionRecord> overall_;
  double total_reward_ = 0.0;
};

// extract_block + parse_literal with one retry hook folded in by callers.
std::optional<LiteralValue> parse_response_map(const std::string& response);

}  // namespace hm
