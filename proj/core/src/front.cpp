#include "legfront/front.hpp"

#include <algorithm>
#include <sstream>

namespace legfront {

std::string to_string(const FrontEvent& e) {
  const char tag = e.kind == EventKind::LeftCusp    ? 'L'
                   : e.kind == EventKind::RightCusp ? 'R'
                                                    : 'X';
  return tag + std::to_string(e.position);
}

FrontDiagram::FrontDiagram(std::vector<FrontEvent> events)
    : events_(std::move(events)) {
  profile_.reserve(events_.size() + 1);
  offsets_.reserve(events_.size() + 2);
  int s = 0;
  std::size_t offset = 0;
  profile_.push_back(0);
  offsets_.push_back(0);
  for (const FrontEvent& e : events_) {
    s += strand_delta(e.kind);
    profile_.push_back(s);
    offsets_.push_back(offset);
    offset += static_cast<std::size_t>(s);
    max_strands_ = std::max(max_strands_, s);
  }
  // offsets_[g] is the first id in gap g; gap 0 is empty so offsets_[0]
  // and offsets_[1] coincide. The trailing entry is the total.
  offsets_.push_back(offset);
}

FrontDiagram FrontDiagram::validate(std::vector<FrontEvent> events) {
  if (events.empty()) {
    throw Error(ErrorCode::EmptyWord, "a front needs at least one event");
  }
  int s = 0;
  for (std::size_t k = 0; k < events.size(); ++k) {
    const FrontEvent& e = events[k];
    const int i = e.position;
    bool ok = false;
    switch (e.kind) {
      case EventKind::LeftCusp: ok = i >= 1 && i <= s + 1; break;
      case EventKind::RightCusp:
      case EventKind::Crossing: ok = i >= 1 && i <= s - 1; break;
    }
    if (!ok) {
      throw Error(ErrorCode::PositionOutOfRange,
                  "event " + std::to_string(k + 1) + " (" + to_string(e) +
                      ") with " + std::to_string(s) + " strands",
                  k + 1);
    }
    s += strand_delta(e.kind);
  }
  if (s != 0) {
    throw Error(ErrorCode::UnbalancedClosure,
                std::to_string(s) + " strands left open at the end");
  }
  return FrontDiagram(std::move(events));
}

Segment FrontDiagram::segment_at(std::size_t id) const {
  // offsets_ is non-decreasing; find the last gap whose offset is <= id
  // among gaps that actually hold strands.
  auto it = std::upper_bound(offsets_.begin(), offsets_.end() - 1, id);
  auto gap = static_cast<std::size_t>(std::distance(offsets_.begin(), it)) - 1;
  while (profile_[gap] == 0 ||
         id >= offsets_[gap] + static_cast<std::size_t>(profile_[gap])) {
    ++gap;
  }
  return {static_cast<int>(gap), static_cast<int>(id - offsets_[gap]) + 1};
}

std::size_t FrontDiagram::cusp_count(EventKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(events_.begin(), events_.end(),
                     [kind](const FrontEvent& e) { return e.kind == kind; }));
}

Step follow(const FrontDiagram& d, Segment s, Direction dir) {
  const int p = s.position;
  if (dir == Direction::Rightward) {
    const int g = s.gap;
    const FrontEvent& e = d[static_cast<std::size_t>(g)];
    const int i = e.position;
    switch (e.kind) {
      case EventKind::Crossing:
        if (p == i) return {{g + 1, i + 1}, dir, true};
        if (p == i + 1) return {{g + 1, i}, dir, true};
        return {{g + 1, p}, dir, false};
      case EventKind::LeftCusp:
        return {{g + 1, p < i ? p : p + 2}, dir, false};
      case EventKind::RightCusp:
        if (p == i) return {{g, i + 1}, Direction::Leftward, false};
        if (p == i + 1) return {{g, i}, Direction::Leftward, false};
        return {{g + 1, p < i ? p : p - 2}, dir, false};
    }
  } else {
    const int g = s.gap;
    const FrontEvent& e = d[static_cast<std::size_t>(g - 1)];
    const int i = e.position;
    switch (e.kind) {
      case EventKind::Crossing:
        if (p == i) return {{g - 1, i + 1}, dir, true};
        if (p == i + 1) return {{g - 1, i}, dir, true};
        return {{g - 1, p}, dir, false};
      case EventKind::LeftCusp:
        if (p == i) return {{g, i + 1}, Direction::Rightward, false};
        if (p == i + 1) return {{g, i}, Direction::Rightward, false};
        return {{g - 1, p < i ? p : p - 2}, dir, false};
      case EventKind::RightCusp:
        return {{g - 1, p < i ? p : p + 2}, dir, false};
    }
  }
  throw Error(ErrorCode::InternalConsistency, "unknown event kind");
}

namespace {

struct Tracing {
  std::vector<Component> components;
  std::vector<std::size_t> component_of;
  std::vector<std::uint8_t> leftward;
};

Tracing trace(const FrontDiagram& d) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  Tracing t;
  t.component_of.assign(d.segment_count(), kUnset);
  t.leftward.assign(d.segment_count(), 0);
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k].kind != EventKind::LeftCusp) continue;
    const Segment start{static_cast<int>(k) + 1, d[k].position};
    if (t.component_of[d.segment_id(start)] != kUnset) continue;
    Component c;
    c.first_event = k;
    const std::size_t index = t.components.size();
    Segment cur = start;
    Direction dir = Direction::Rightward;
    do {
      const std::size_t id = d.segment_id(cur);
      if (t.component_of[id] != kUnset) {
        throw Error(ErrorCode::InternalConsistency,
                    "segment visited twice while tracing");
      }
      t.component_of[id] = index;
      t.leftward[id] = dir == Direction::Leftward;
      c.segments.push_back(cur);
      const Step step = follow(d, cur, dir);
      cur = step.next;
      dir = step.direction;
    } while (!(cur == start && dir == Direction::Rightward));
    t.components.push_back(std::move(c));
  }
  return t;
}

}  // namespace

std::vector<Component> trace_components(const FrontDiagram& d) {
  return trace(d).components;
}

OrientedFront orient(const FrontDiagram& d, const std::vector<bool>& flips) {
  Tracing t = trace(d);
  OrientedFront of(d);
  of.flips_.assign(t.components.size(), 0);
  for (std::size_t k = 0; k < flips.size() && k < t.components.size(); ++k) {
    of.flips_[k] = flips[k] ? 1 : 0;
  }
  of.components_ = std::move(t.components);
  of.component_of_ = std::move(t.component_of);
  of.canonical_leftward_ = std::move(t.leftward);
  return of;
}

OrientedFront orient_with(const FrontDiagram& d,
                          std::span<const DirectionHint> hints) {
  const OrientedFront base = orient(d);
  std::vector<int> want(base.component_count(), -1);
  for (const DirectionHint& h : hints) {
    const std::size_t k = base.component_of(h.segment);
    const int flip = base.direction(h.segment) != h.direction ? 1 : 0;
    if (want[k] != -1 && want[k] != flip) {
      throw Error(ErrorCode::InternalConsistency,
                  "contradictory orientation hints on component " +
                      std::to_string(k));
    }
    want[k] = flip;
  }
  std::vector<bool> flips(want.size());
  for (std::size_t k = 0; k < want.size(); ++k) flips[k] = want[k] == 1;
  return base.with_flips(flips);
}

Direction OrientedFront::direction(Segment s) const {
  const std::size_t id = diagram_.segment_id(s);
  const bool left = (canonical_leftward_[id] != 0) !=
                    (flips_[component_of_[id]] != 0);
  return left ? Direction::Leftward : Direction::Rightward;
}

OrientedFront OrientedFront::with_flips(const std::vector<bool>& flips) const {
  OrientedFront of = *this;
  for (std::size_t k = 0; k < of.flips_.size(); ++k) {
    of.flips_[k] = k < flips.size() && flips[k] ? 1 : 0;
  }
  return of;
}

OrientedFront OrientedFront::reversed_component(std::size_t k) const {
  check_component(k);
  OrientedFront of = *this;
  of.flips_[k] ^= 1;
  return of;
}

void OrientedFront::check_component(std::size_t k) const {
  if (k >= components_.size()) {
    throw Error(ErrorCode::UnknownComponent,
                "component " + std::to_string(k) + " of " +
                    std::to_string(components_.size()));
  }
}

std::vector<Segment> OrientedFront::traversal(std::size_t k) const {
  check_component(k);
  const auto& segs = components_[k].segments;
  if (!flipped(k)) return segs;
  std::vector<Segment> out;
  out.reserve(segs.size());
  out.push_back(segs.front());
  for (std::size_t j = segs.size() - 1; j >= 1; --j) out.push_back(segs[j]);
  return out;
}

FrontDiagram project_component(const OrientedFront& of, std::size_t k) {
  of.check_component(k);
  const FrontDiagram& d = of.diagram();
  auto rank = [&](int gap, int pos) {
    int r = 0;
    for (int p = 1; p <= pos; ++p) {
      if (of.component_of({gap, p}) == k) ++r;
    }
    return r;
  };
  std::vector<FrontEvent> out;
  for (std::size_t e = 0; e < d.size(); ++e) {
    const int g = static_cast<int>(e);
    const int i = d[e].position;
    switch (d[e].kind) {
      case EventKind::LeftCusp:
        if (of.component_of({g + 1, i}) == k) {
          out.push_back(left_cusp(rank(g + 1, i)));
        }
        break;
      case EventKind::RightCusp:
        if (of.component_of({g, i}) == k) {
          out.push_back(right_cusp(rank(g, i)));
        }
        break;
      case EventKind::Crossing:
        if (of.component_of({g, i}) == k && of.component_of({g, i + 1}) == k) {
          out.push_back(crossing(rank(g, i)));
        }
        break;
    }
  }
  return FrontDiagram::validate(std::move(out));
}

GenericCode to_generic_code(const OrientedFront& of) {
  const FrontDiagram& d = of.diagram();
  GenericCode code;
  std::vector<int> label(d.segment_count(), 0);
  int next_label = 1;
  for (std::size_t k = 0; k < of.component_count(); ++k) {
    const std::vector<Segment> segs = of.traversal(k);
    const std::size_t n = segs.size();
    // entered[j]: the step from segs[j-1] into segs[j] passes a crossing.
    std::vector<bool> entered(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const Step step = follow(d, segs[j], of.direction(segs[j]));
      entered[(j + 1) % n] = step.through_crossing;
    }
    const auto first = std::find(entered.begin(), entered.end(), true);
    std::vector<int> edges;
    if (first != entered.end()) {
      const auto start = static_cast<std::size_t>(first - entered.begin());
      int current = 0;
      for (std::size_t m = 0; m < n; ++m) {
        const std::size_t j = (start + m) % n;
        if (entered[j]) {
          current = next_label++;
          edges.push_back(current);
        }
        label[d.segment_id(segs[j])] = current;
      }
    }
    code.components.push_back(std::move(edges));
  }

  for (std::size_t e = 0; e < d.size(); ++e) {
    if (d[e].kind != EventKind::Crossing) continue;
    const int g = static_cast<int>(e);
    const int i = d[e].position;
    const Segment nw{g, i}, sw{g, i + 1}, ne{g + 1, i}, se{g + 1, i + 1};
    auto lab = [&](Segment s) { return label[d.segment_id(s)]; };
    CodeCrossing c{};
    c.event = e;
    // The ascending strand (sw-ne) passes under.
    if (of.direction(sw) == Direction::Rightward) {
      c.pd = {lab(sw), lab(se), lab(ne), lab(nw)};
    } else {
      c.pd = {lab(ne), lab(nw), lab(sw), lab(se)};
    }
    c.over_in = of.direction(nw) == Direction::Rightward ? lab(nw) : lab(se);
    c.over_component = of.component_of(nw);
    c.under_component = of.component_of(sw);
    c.sign = of.direction(nw) == of.direction(sw) ? 1 : -1;
    code.crossings.push_back(c);
  }
  return code;
}

std::string to_pd_string(const GenericCode& code) {
  std::ostringstream out;
  out << "PD[";
  bool first = true;
  for (const CodeCrossing& c : code.crossings) {
    if (!first) out << ", ";
    first = false;
    out << "X[" << c.pd[0] << ',' << c.pd[1] << ',' << c.pd[2] << ','
        << c.pd[3] << ']';
  }
  for (const auto& comp : code.components) {
    if (!comp.empty()) continue;
    if (!first) out << ", ";
    first = false;
    out << "Loop[]";
  }
  out << ']';
  return out.str();
}

}  // namespace legfront
