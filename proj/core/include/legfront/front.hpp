#pragma once

// Plat-style event words for closed Legendrian fronts.
//
// A front is read left to right as a sequence of events. Strands at any
// vertical slice are numbered 1..s from the top. A left cusp at position i
// opens two new strands at i and i+1; a right cusp at i joins strands i and
// i+1; a crossing at i exchanges them. Over/under information is never
// stored: in a front the strand descending left-to-right is always in front.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "legfront/error.hpp"

namespace legfront {

enum class EventKind : std::uint8_t { LeftCusp, RightCusp, Crossing };

struct FrontEvent {
  EventKind kind;
  int position;  // upper of the two strands involved, counted from 1

  friend bool operator==(const FrontEvent&, const FrontEvent&) = default;
};

constexpr FrontEvent left_cusp(int i) { return {EventKind::LeftCusp, i}; }
constexpr FrontEvent right_cusp(int i) { return {EventKind::RightCusp, i}; }
constexpr FrontEvent crossing(int i) { return {EventKind::Crossing, i}; }

// Change in strand count produced by an event.
constexpr int strand_delta(EventKind kind) {
  switch (kind) {
    case EventKind::LeftCusp: return 2;
    case EventKind::RightCusp: return -2;
    case EventKind::Crossing: return 0;
  }
  return 0;
}

std::string to_string(const FrontEvent& e);

// A strand segment lives in a gap (gap g sits between events g-1 and g;
// gap 0 and gap N are empty) at a 1-based position.
struct Segment {
  int gap;
  int position;

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Validated event word. Immutable once constructed.
class FrontDiagram {
 public:
  // Throws Error{EmptyWord | PositionOutOfRange | UnbalancedClosure}.
  static FrontDiagram validate(std::vector<FrontEvent> events);

  const std::vector<FrontEvent>& events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }
  const FrontEvent& operator[](std::size_t k) const { return events_[k]; }

  // Strand count in gap g, for g in [0, size()].
  int strands(std::size_t gap) const { return profile_[gap]; }
  const std::vector<int>& profile() const noexcept { return profile_; }
  int max_strands() const noexcept { return max_strands_; }

  std::size_t segment_count() const noexcept { return offsets_.back(); }
  std::size_t segment_id(Segment s) const {
    return offsets_[static_cast<std::size_t>(s.gap)] +
           static_cast<std::size_t>(s.position - 1);
  }
  Segment segment_at(std::size_t id) const;

  std::size_t cusp_count(EventKind kind) const;

  friend bool operator==(const FrontDiagram& a, const FrontDiagram& b) {
    return a.events_ == b.events_;
  }

 private:
  explicit FrontDiagram(std::vector<FrontEvent> events);

  std::vector<FrontEvent> events_;
  std::vector<int> profile_;
  std::vector<std::size_t> offsets_;
  int max_strands_ = 0;
};

inline FrontDiagram validate(std::vector<FrontEvent> events) {
  return FrontDiagram::validate(std::move(events));
}

enum class Direction : std::uint8_t { Rightward, Leftward };

constexpr Direction reversed(Direction d) {
  return d == Direction::Rightward ? Direction::Leftward : Direction::Rightward;
}

// One closed curve of the front. `segments` is the cyclic visit order in the
// component's canonical direction, starting at the upper branch of its first
// left cusp (travelling rightward).
struct Component {
  std::size_t first_event = 0;
  std::vector<Segment> segments;
};

// Partition of the segments into components, ordered by first event index.
std::vector<Component> trace_components(const FrontDiagram& d);

// Where a segment leads when followed in a given direction.
struct Step {
  Segment next;
  Direction direction;
  bool through_crossing;
};
Step follow(const FrontDiagram& d, Segment s, Direction dir);

// A front together with a coherent direction on every segment.
class OrientedFront {
 public:
  const FrontDiagram& diagram() const noexcept { return diagram_; }
  const std::vector<Component>& components() const noexcept {
    return components_;
  }
  std::size_t component_count() const noexcept { return components_.size(); }

  std::size_t component_of(Segment s) const {
    return component_of_[diagram_.segment_id(s)];
  }
  Direction direction(Segment s) const;
  bool flipped(std::size_t k) const { return flips_.at(k) != 0; }
  std::vector<bool> flips() const { return {flips_.begin(), flips_.end()}; }

  // Same diagram with the given per-component reversal bits.
  OrientedFront with_flips(const std::vector<bool>& flips) const;
  OrientedFront reversed_component(std::size_t k) const;

  // Throws UnknownComponent when k is out of range.
  void check_component(std::size_t k) const;

  // Segments of component k in oriented traversal order.
  std::vector<Segment> traversal(std::size_t k) const;

 private:
  friend OrientedFront orient(const FrontDiagram&, const std::vector<bool>&);
  explicit OrientedFront(FrontDiagram d) : diagram_(std::move(d)) {}

  FrontDiagram diagram_;
  std::vector<Component> components_;
  std::vector<std::size_t> component_of_;
  std::vector<std::uint8_t> canonical_leftward_;
  std::vector<std::uint8_t> flips_;
};

// Missing bits default to unset: the upper strand at each component's first
// left cusp travels rightward. A set bit reverses that component.
OrientedFront orient(const FrontDiagram& d, const std::vector<bool>& flips = {});

// Orients each component so that the given segments carry the given
// directions. Components without a hint keep the default.
struct DirectionHint {
  Segment segment;
  Direction direction;
};
OrientedFront orient_with(const FrontDiagram& d,
                          std::span<const DirectionHint> hints);

// The sub-front traced by component k alone: events touching only other
// components are dropped and positions renumbered.
FrontDiagram project_component(const OrientedFront& of, std::size_t k);

// Annotated diagram code. Edge labels are 1-based, consecutive along each
// oriented component; a component without crossings has no edges.
struct CodeCrossing {
  // PD-style slots, counter-clockwise starting at the incoming under edge.
  std::array<int, 4> pd;
  int over_in;  // label of the over edge entering the crossing
  std::size_t event;
  std::size_t over_component;
  std::size_t under_component;
  int sign;
};

struct GenericCode {
  std::vector<CodeCrossing> crossings;
  std::vector<std::vector<int>> components;  // edge labels in order
};

GenericCode to_generic_code(const OrientedFront& of);

// KnotTheory-style text, e.g. "PD[X[1,5,2,4],...]".
std::string to_pd_string(const GenericCode& code);

}  // namespace legfront
