#pragma once

#include "hm/core.hpp"
#include "hm/grid.hpp"
#include "hm/observation.hpp"

namespace hm {

// A partially observable Markov game: joint-action stepping plus a
// per-player egocentric view. One instance is one episode's state.
class World {
 public:
  virtual ~World() = default;

  virtual int player_count() const = 0;
  virtual int step_count() const = 0;
  virtual int max_steps() const = 0;
  virtual bool done() const = 0;
  virtual const GridMap& map() const = 0;

  virtual StepResult step(const JointAction& joint) = 0;
  virtual StructuredObservation observe(PlayerId player) const = 0;
};

}  // namespace hm
