#include "hm/core.hpp"

namespace hm {

const char* action_name(AtomicAction a) {
  switch (a) {
    case AtomicAction::StepForward: return "step_forward";
    case AtomicAction::StepBackward: return "step_backward";
    case AtomicAction::StepLeft: return "step_left";
    case AtomicAction::StepRight: return "step_right";
    case AtomicAction::TurnLeft: return "turn_left";
    case AtomicAction::TurnRight: return "turn_right";
    case AtomicAction::FireBeam: return "fire_beam";
    case AtomicAction::Noop: return "noop";
  }
  return "?";
}

const char* event_name(EventKind k) {
  switch (k) {
    case EventKind::Interaction: return "interaction";
    case EventKind::Collect: return "collect";
    case EventKind::Respawn: return "respawn";
    case EventKind::PickedTomato: return "picked_tomato";
    case EventKind::PutTomatoInPot: return "put_tomato_in_pot";
    case EventKind::PickedDish: return "picked_dish";
    case EventKind::PutDownItem: return "put_down_item";
    case EventKind::PlatedSoup: return "plated_soup";
    case EventKind::DeliveredSoup: return "delivered_soup";
    case EventKind::Blocked: return "blocked";
  }
  return "?";
}

}  // namespace hm
