#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hm {

struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

using PlayerId = int;

struct GridPos {
  int x = 0;
  int y = 0;
  friend bool operator==(const GridPos&, const GridPos&) = default;
  friend auto operator<=>(const GridPos&, const GridPos&) = default;
  friend GridPos operator+(GridPos a, GridPos b) {
    return {a.x + b.x, a.y + b.y};
  }
};

inline int manhattan(GridPos a, GridPos b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

// N is -y, S is +y, E is +x, W is -x.
enum class Orientation : uint8_t { North, East, South, West };

inline char orientation_letter(Orientation o) {
  switch (o) {
    case Orientation::North: return 'N';
    case Orientation::East: return 'E';
    case Orientation::South: return 'S';
    case Orientation::West: return 'W';
  }
  return '?';
}

inline GridPos forward_delta(Orientation o) {
  switch (o) {
    case Orientation::North: return {0, -1};
    case Orientation::East: return {1, 0};
    case Orientation::South: return {0, 1};
    case Orientation::West: return {-1, 0};
  }
  return {0, 0};
}

inline Orientation turn_right(Orientation o) {
  return static_cast<Orientation>((static_cast<int>(o) + 1) % 4);
}

inline Orientation turn_left(Orientation o) {
  return static_cast<Orientation>((static_cast<int>(o) + 3) % 4);
}

enum class AtomicAction : uint8_t {
  StepForward,
  StepBackward,
  StepLeft,
  StepRight,
  TurnLeft,
  TurnRight,
  FireBeam,
  Noop,
};

const char* action_name(AtomicAction a);

using JointAction = std::vector<AtomicAction>;

enum class EventKind : uint8_t {
  Interaction,
  Collect,
  Respawn,
  PickedTomato,
  PutTomatoInPot,
  PickedDish,
  PutDownItem,
  PlatedSoup,
  DeliveredSoup,
  Blocked,
};

const char* event_name(EventKind k);

struct GameEvent {
  EventKind kind;
  int step = 0;
  PlayerId player = -1;
  PlayerId other = -1;   // duel opponent / unused
  GridPos pos{};
  double reward_a = 0.0; // shooter / acting player's reward
  double reward_b = 0.0; // target's reward
  int detail = 0;        // resource kind index, pot id, etc.
};

struct StepResult {
  std::vector<double> rewards;
  std::vector<GameEvent> events;
  bool done = false;
};

struct EpisodeConfig {
  std::string substrate;
  int scenario = 0;
  int max_steps = 1200;
  uint64_t seed = 0;
};

// All in-episode randomness flows from one of these, seeded from the
// episode seed. Distributions are hand-rolled so streams are identical
// across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed), base_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, n).
  int uniform_int(int n) {
    if (n <= 0) throw ContractViolation("uniform_int: n must be positive");
    return static_cast<int>(next_u64() % static_cast<uint64_t>(n));
  }

  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  uint64_t derive_subseed(uint64_t stream) {
    // splitmix-style mix of the base seed and a stream tag
    uint64_t z = base_ ^ (stream + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
  uint64_t base_ = 0;
};

}  // namespace hm
