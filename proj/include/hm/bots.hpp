#pragma once

#include <memory>
#include <vector>

#include "hm/agents.hpp"
#include "hm/core.hpp"

namespace hm {

enum class BotVariant {
  // matrix, competitive
  Pure,
  BestResponse,
  FlipAfterTwo,
  FlipAfterOne,
  Gullible,
  // prisoner's-dilemma partners
  Cooperator,
  Defector,
  Grim,
  TitForTat,
  NoisyTitForTat,
  CoopThenDefect,
  CorrigibleTft,
  CorrigibleNoisyTft,
  // cooking partners
  Unhelpful,
  SkilledChef,
  SemiSkilledChef,
};

const char* bot_variant_name(BotVariant v);

struct BotSpec {
  BotVariant variant = BotVariant::Pure;
  int kind = 0;            // fixed / initial resource kind
  int commitment = 5;      // resources to collect before seeking a duel
  int flip_commitment = 5; // commitment after a strategy flip
  double noise = 0.1;      // noisy tit-for-tat defect probability
  int grim_threshold = 1;  // focal defections before grim retaliation
  int switch_round = 5;    // cooperate-then-defect switch interaction
  int corrigible_trigger = 2;
  double error_prob = 0.3;  // semi-skilled chef noop probability
  uint64_t seed = 0;
};

struct BotState {
  int interactions = 0;
  int last_focal_play = -1;
  int focal_defections = 0;
  bool persuaded = false;
  std::vector<int> focal_play_counts;
};

// Strategy layer: which kind to stock up next and how many to collect.
// `rng` is only drawn from where the variant is stochastic.
std::pair<int, int> rws_next_target(const BotSpec& spec, const BotState& st,
                                    Rng& rng);
int pd_next_play(const BotSpec& spec, const BotState& st, Rng& rng);

// Bookkeeping after an interaction where the focal player's inventory
// peaked at `focal_play`.
void note_interaction(const BotSpec& spec, BotState& st, int focal_play);

// The sampled opponents for one evaluation scenario. One spec per
// non-focal player slot.
std::vector<BotSpec> build_scenario(const std::string& substrate,
                                    int scenario_id, Rng& rng);
int scenario_count(const std::string& substrate);

// Embodied wrappers: collect-to-commitment then hunt (matrix), or the
// scripted kitchen loop (cooking).
std::unique_ptr<AgentController> make_matrix_bot(BotSpec spec, PlayerId id,
                                                 PlayerId focal,
                                                 uint64_t seed);
std::unique_ptr<AgentController> make_cooking_bot(BotSpec spec, PlayerId id,
                                                  uint64_t seed);

}  // namespace hm
