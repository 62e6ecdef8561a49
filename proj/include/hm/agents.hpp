#pragma once

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hm/memory.hpp"
#include "hm/plan.hpp"
#include "hm/planner.hpp"
#include "hm/reasoner.hpp"
#include "hm/tom.hpp"
#include "hm/world.hpp"

namespace hm {

// One decision-maker bound to one player slot; queried every step.
class AgentController {
 public:
  virtual ~AgentController() = default;
  // `last` is the previous step's result; null on the first step.
  virtual AtomicAction act(const World& world, const StepResult* last) = 0;
  virtual PlayerId player() const = 0;
  virtual std::string name() const = 0;
  // Bank snapshots etc. for the episode log; empty by default.
  virtual std::string state_summary() const { return {}; }
};

enum class AgentKind { Hypothetical, React, Reflexion, PlanReact };

struct AgentOptions {
  AgentKind kind = AgentKind::Hypothetical;
  TomConfig tom;
  bool counterfactual_mode = false;  // HE+HR hypothesis scoring
  int max_plan_calls = 6;
};

std::unique_ptr<AgentController> make_matrix_agent(
    const std::string& substrate, PlayerId id, Reasoner* reasoner,
    const AgentOptions& options);

std::unique_ptr<AgentController> make_cooking_agent(PlayerId id,
                                                    Reasoner* reasoner,
                                                    const AgentOptions& options);

}  // namespace hm
