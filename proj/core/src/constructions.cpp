#include "legfront/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "legfront/invariants.hpp"

namespace legfront {

namespace {

using Word = std::vector<FrontEvent>;

// A grid edge seen in the rotated plane: z = slope * x + intercept over
// [xmin, xmax].
struct Edge {
  int xmin, xmax;
  int slope, intercept;
  bool rightward;
  int z(int x) const { return slope * x + intercept; }
};

enum class GridEventKind { Corner, Crossing };

struct GridEvent {
  int x, z;
  GridEventKind kind;
  int vertical;    // edge id of the column edge
  int horizontal;  // edge id of the row edge
};

void require_knot(const OrientedFront& of) {
  if (of.component_count() != 1) {
    throw Error(ErrorCode::NotAKnot,
                "expected one component, got " +
                    std::to_string(of.component_count()));
  }
}

}  // namespace

OrientedFront legendrianize(const GridDiagram& g) {
  const int n = g.size();
  // Column c sits at x = -c, row r at x = r: (c, r) -> (r - c, r + c).
  std::vector<Edge> edges(static_cast<std::size_t>(2 * n));
  for (int c = 1; c <= n; ++c) {
    const int lo = std::min(g.x_row(c), g.o_row(c));
    const int hi = std::max(g.x_row(c), g.o_row(c));
    edges[static_cast<std::size_t>(c - 1)] = {lo - c, hi - c, 1, 2 * c,
                                              g.o_row(c) > g.x_row(c)};
  }
  for (int r = 1; r <= n; ++r) {
    const int lo = std::min(g.x_column(r), g.o_column(r));
    const int hi = std::max(g.x_column(r), g.o_column(r));
    edges[static_cast<std::size_t>(n + r - 1)] = {r - hi, r - lo, -1, 2 * r,
                                                  g.x_column(r) < g.o_column(r)};
  }
  auto edge = [&](int id) -> const Edge& {
    return edges[static_cast<std::size_t>(id)];
  };

  std::vector<GridEvent> events;
  for (int c = 1; c <= n; ++c) {
    for (int r : {g.x_row(c), g.o_row(c)}) {
      events.push_back({r - c, r + c, GridEventKind::Corner, c - 1, n + r - 1});
    }
  }
  for (int c = 1; c <= n; ++c) {
    const int rlo = std::min(g.x_row(c), g.o_row(c));
    const int rhi = std::max(g.x_row(c), g.o_row(c));
    for (int r = rlo + 1; r < rhi; ++r) {
      const int clo = std::min(g.x_column(r), g.o_column(r));
      const int chi = std::max(g.x_column(r), g.o_column(r));
      if (c > clo && c < chi) {
        events.push_back({r - c, r + c, GridEventKind::Crossing, c - 1, n + r - 1});
      }
    }
  }
  std::sort(events.begin(), events.end(), [](const GridEvent& a, const GridEvent& b) {
    return a.x != b.x ? a.x < b.x : a.z > b.z;
  });

  Word word;
  std::vector<DirectionHint> hints;
  std::vector<int> active;  // edge ids, top to bottom
  auto index_of = [&](int id) {
    const auto it = std::find(active.begin(), active.end(), id);
    if (it == active.end()) {
      throw Error(ErrorCode::InternalConsistency, "grid edge not active");
    }
    return static_cast<int>(it - active.begin());
  };
  for (const GridEvent& e : events) {
    const Edge& v = edge(e.vertical);
    const Edge& h = edge(e.horizontal);
    if (e.kind == GridEventKind::Crossing) {
      // Left of the crossing the row edge (slope -1) is the upper one.
      const int i = index_of(e.horizontal);
      if (i + 1 >= static_cast<int>(active.size()) ||
          active[static_cast<std::size_t>(i + 1)] != e.vertical) {
        throw Error(ErrorCode::InternalConsistency, "crossing strands not adjacent");
      }
      std::swap(active[static_cast<std::size_t>(i)],
                active[static_cast<std::size_t>(i + 1)]);
      word.push_back(crossing(i + 1));
      continue;
    }
    const bool v_right = v.xmin == e.x;
    const bool h_right = h.xmin == e.x;
    if (v_right && h_right) {
      const auto above = std::count_if(active.begin(), active.end(), [&](int id) {
        return edge(id).z(e.x) > e.z;
      });
      const auto i = static_cast<int>(above);
      active.insert(active.begin() + i, {e.vertical, e.horizontal});
      word.push_back(left_cusp(i + 1));
      hints.push_back({{static_cast<int>(word.size()), i + 1},
                       v.rightward ? Direction::Rightward : Direction::Leftward});
    } else if (!v_right && !h_right) {
      const int i = index_of(e.horizontal);
      if (i + 1 >= static_cast<int>(active.size()) ||
          active[static_cast<std::size_t>(i + 1)] != e.vertical) {
        throw Error(ErrorCode::InternalConsistency, "cusp branches not adjacent");
      }
      active.erase(active.begin() + i, active.begin() + i + 2);
      word.push_back(right_cusp(i + 1));
    } else {
      const int ending = v_right ? e.horizontal : e.vertical;
      const int starting = v_right ? e.vertical : e.horizontal;
      active[static_cast<std::size_t>(index_of(ending))] = starting;
    }
  }
  return orient_with(FrontDiagram::validate(std::move(word)), hints);
}

PushOffResult push_off(const OrientedFront& knot, int framing) {
  require_knot(knot);
  const FrontDiagram& d = knot.diagram();
  const InvariantReport report = invariant_report(knot);
  const int bb = report.components[0].writhe;
  const int c = report.components[0].right_cusps;
  const int t = report.components[0].tb;
  const int r = framing;

  PushOffResult result{knot, 0, 1, r};
  int stacked = 0;
  int zigzags = 0;
  if (r >= bb) {
    result.positive_twists = 2 * (r - bb);
  } else if (r >= t) {
    stacked = 2 * (bb - r);
  } else {
    stacked = 2 * c;
    zigzags = 2 * (t - r);
  }
  result.cusp_twists = stacked;
  result.kinks = zigzags;
  result.stab_count = zigzags / 2;

  Word word;
  word.reserve(4 * d.size() + static_cast<std::size_t>(zigzags * 3 + result.positive_twists));
  int cusps_seen = 0;
  std::size_t closing = 0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const int i = d[k].position;
    switch (d[k].kind) {
      case EventKind::LeftCusp:
        if (cusps_seen++ < stacked) {
          word.insert(word.end(), {left_cusp(2 * i - 1), left_cusp(2 * i + 1),
                                   crossing(2 * i)});
        } else {
          word.insert(word.end(), {left_cusp(2 * i - 1), left_cusp(2 * i)});
        }
        if (k == 0) result.opening_gap = word.size();
        break;
      case EventKind::RightCusp:
        if (k + 1 == d.size()) closing = word.size();
        if (cusps_seen++ < stacked) {
          word.insert(word.end(), {crossing(2 * i), right_cusp(2 * i + 1),
                                   right_cusp(2 * i - 1)});
        } else {
          word.insert(word.end(), {right_cusp(2 * i), right_cusp(2 * i - 1)});
        }
        break;
      case EventKind::Crossing:
        word.insert(word.end(), {crossing(2 * i), crossing(2 * i - 1),
                                 crossing(2 * i + 1), crossing(2 * i)});
        break;
    }
  }

  // The last event of a closed front is R1, so at `closing` positions 1 and
  // 2 are the two copies of the top strand: one per component, since the
  // number of half twists added so far is even.
  Word correction(static_cast<std::size_t>(result.positive_twists), crossing(1));
  if (zigzags > 0) {
    // The zigzag goes on whichever copy is at position 2 here; that copy
    // becomes the companion.
    for (int z = 0; z < zigzags; ++z) {
      if (z % 2 == 0) {
        // companion at the bottom climbs over
        correction.insert(correction.end(), {left_cusp(1), crossing(2), right_cusp(3)});
      } else {
        // companion at the top drops back under
        correction.insert(correction.end(), {left_cusp(3), crossing(2), right_cusp(1)});
      }
    }
  }
  word.insert(word.begin() + static_cast<std::ptrdiff_t>(closing),
              correction.begin(), correction.end());
  result.closing_gap = closing + correction.size();

  const Direction top = knot.direction({1, 1});
  const DirectionHint hints[] = {
      {{static_cast<int>(result.opening_gap), 1}, top},
      {{static_cast<int>(result.opening_gap), 2}, top},
  };
  result.front = orient_with(FrontDiagram::validate(std::move(word)), hints);
  if (result.front.component_count() != 2) {
    throw Error(ErrorCode::InternalConsistency, "push-off is not a two-component link");
  }
  const Segment original{static_cast<int>(closing), 1};
  result.original_index = result.front.component_of(original);
  result.companion_index = 1 - result.original_index;
  return result;
}

OrientedFront whitehead_double(const OrientedFront& knot, int n) {
  require_knot(knot);
  if (n < 1) {
    throw Error(ErrorCode::InternalConsistency, "whitehead_double needs n >= 1");
  }
  OrientedFront current = knot;
  for (int step = 0; step < n; ++step) {
    const PushOffResult po = push_off(current, 0);
    Word word = po.front.diagram().events();
    // Cut both strands at closing_gap and hook the ends through each other.
    const Word clasp = {left_cusp(2), crossing(1), crossing(3), right_cusp(2)};
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(po.closing_gap),
                clasp.begin(), clasp.end());
    const int gap = static_cast<int>(po.opening_gap);
    const int pos =
        po.front.component_of({gap, 1}) == po.original_index ? 1 : 2;
    const DirectionHint hint[] = {{{gap, pos}, current.direction({1, 1})}};
    current = orient_with(FrontDiagram::validate(std::move(word)), hint);
    if (current.component_count() != 1) {
      throw Error(ErrorCode::InternalConsistency, "Whitehead double is not a knot");
    }
  }
  return current;
}

}  // namespace legfront
