#include "legfront/moves.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <utility>

namespace legfront {

namespace {

using Word = std::vector<FrontEvent>;

Word r1_pattern(int variant, int p) {
  if (variant == 0) return {left_cusp(p + 1), crossing(p), right_cusp(p + 1)};
  return {left_cusp(p), crossing(p + 1), right_cusp(p)};
}

Word stabilize_pattern(int variant, int p) {
  if (variant == 0) return {left_cusp(p + 1), right_cusp(p)};
  return {left_cusp(p), right_cusp(p + 1)};
}

Word r2_lhs(int variant, int i) {
  return {variant < 2 ? left_cusp(i) : right_cusp(i)};
}

Word r2_rhs(int variant, int i) {
  switch (variant) {
    case 0: return {left_cusp(i - 1), crossing(i), crossing(i - 1)};
    case 1: return {left_cusp(i + 1), crossing(i), crossing(i + 1)};
    case 2: return {crossing(i - 1), crossing(i), right_cusp(i - 1)};
    default: return {crossing(i + 1), crossing(i), right_cusp(i + 1)};
  }
}

// Whether the single-event side of an R2 variant fits with s strands before.
bool r2_lhs_fits(int variant, int i, int s) {
  switch (variant) {
    case 0: return i >= 2 && i <= s + 1;
    case 1: return i >= 1 && i <= s;
    case 2: return i >= 2 && i <= s - 1;
    default: return i >= 1 && i + 2 <= s;
  }
}

Word r3_pattern(int variant, int i) {
  if (variant == 0) return {crossing(i), crossing(i + 1), crossing(i)};
  return {crossing(i + 1), crossing(i), crossing(i + 1)};
}

// Footprint of an event on the gap between two adjacent events, in doubled
// coordinates: strand p sits at 2p, the slot between p-1 and p at 2p-1.
struct Span {
  int lo, hi;
};

Span after_footprint(const FrontEvent& e) {
  if (e.kind == EventKind::RightCusp) return {2 * e.position - 1, 2 * e.position - 1};
  return {2 * e.position, 2 * e.position + 2};
}

Span before_footprint(const FrontEvent& e) {
  if (e.kind == EventKind::LeftCusp) return {2 * e.position - 1, 2 * e.position - 1};
  return {2 * e.position, 2 * e.position + 2};
}

std::optional<std::pair<FrontEvent, FrontEvent>> commute_raw(FrontEvent a,
                                                             FrontEvent b) {
  const Span fa = after_footprint(a);
  const Span fb = before_footprint(b);
  if (fb.hi < fa.lo) {
    // b acts strictly above a.
    return std::pair{b, FrontEvent{a.kind, a.position + strand_delta(b.kind)}};
  }
  if (fb.lo > fa.hi) {
    return std::pair{FrontEvent{b.kind, b.position - strand_delta(a.kind)}, a};
  }
  return std::nullopt;
}

// Commutation restricted to pairs where it is an involution; the only
// exclusions are the R-then-L pairs whose slots coincide.
std::optional<std::pair<FrontEvent, FrontEvent>> commute_pair(FrontEvent a,
                                                              FrontEvent b) {
  auto swapped = commute_raw(a, b);
  if (!swapped) return std::nullopt;
  auto back = commute_raw(swapped->first, swapped->second);
  if (!back || back->first != a || back->second != b) return std::nullopt;
  return swapped;
}

bool window_matches(const FrontDiagram& d, std::size_t site, const Word& w) {
  if (site + w.size() > d.size()) return false;
  return std::equal(w.begin(), w.end(), d.events().begin() +
                                            static_cast<std::ptrdiff_t>(site));
}

[[noreturn]] void inapplicable(const MoveInstance& m, const std::string& why) {
  throw Error(ErrorCode::InapplicableMove,
              std::string(to_string(m.kind)) + " at site " +
                  std::to_string(m.site) + ": " + why);
}

// Old and new window contents for m on d; throws when m does not fit.
std::pair<Word, Word> rewrite(const FrontDiagram& d, const MoveInstance& m) {
  const bool apply = m.direction == MoveDirection::Apply;
  switch (m.kind) {
    case MoveKind::Commute: {
      if (m.site + 1 >= d.size()) inapplicable(m, "needs two events");
      const FrontEvent a = d[m.site], b = d[m.site + 1];
      auto swapped = commute_pair(a, b);
      if (!swapped) inapplicable(m, "events share strands");
      return {{a, b}, {swapped->first, swapped->second}};
    }
    case MoveKind::FrontR3: {
      if (m.variant < 0 || m.variant > 1) inapplicable(m, "bad variant");
      const Word from = r3_pattern(m.variant, m.strand);
      if (!window_matches(d, m.site, from)) inapplicable(m, "no triple point");
      return {from, r3_pattern(1 - m.variant, m.strand)};
    }
    case MoveKind::FrontR1:
    case MoveKind::Stabilize: {
      if (m.variant < 0 || m.variant > 1) inapplicable(m, "bad variant");
      const Word pattern = m.kind == MoveKind::FrontR1
                               ? r1_pattern(m.variant, m.strand)
                               : stabilize_pattern(m.variant, m.strand);
      if (m.site > d.size()) inapplicable(m, "site past the end");
      if (m.strand < 1 || m.strand > d.strands(m.site)) {
        inapplicable(m, "no strand " + std::to_string(m.strand));
      }
      if (apply) return {{}, pattern};
      if (!window_matches(d, m.site, pattern)) inapplicable(m, "no match");
      return {pattern, {}};
    }
    case MoveKind::FrontR2: {
      if (m.variant < 0 || m.variant > 3) inapplicable(m, "bad variant");
      if (m.site >= d.size()) inapplicable(m, "site past the end");
      if (!r2_lhs_fits(m.variant, m.strand, d.strands(m.site))) {
        inapplicable(m, "no neighbouring strand");
      }
      const Word lhs = r2_lhs(m.variant, m.strand);
      const Word rhs = r2_rhs(m.variant, m.strand);
      const Word& from = apply ? lhs : rhs;
      if (!window_matches(d, m.site, from)) inapplicable(m, "no match");
      return apply ? std::pair{lhs, rhs} : std::pair{rhs, lhs};
    }
  }
  inapplicable(m, "unknown kind");
}

}  // namespace

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Commute: return "Commute";
    case MoveKind::FrontR1: return "FrontR1";
    case MoveKind::FrontR2: return "FrontR2";
    case MoveKind::FrontR3: return "FrontR3";
    case MoveKind::Stabilize: return "Stabilize";
  }
  return "?";
}

MoveWindow window(const MoveInstance& m) {
  const bool apply = m.direction == MoveDirection::Apply;
  switch (m.kind) {
    case MoveKind::Commute: return {m.site, 2, 2};
    case MoveKind::FrontR3: return {m.site, 3, 3};
    case MoveKind::FrontR1: return apply ? MoveWindow{m.site, 0, 3} : MoveWindow{m.site, 3, 0};
    case MoveKind::Stabilize: return apply ? MoveWindow{m.site, 0, 2} : MoveWindow{m.site, 2, 0};
    case MoveKind::FrontR2: return apply ? MoveWindow{m.site, 1, 3} : MoveWindow{m.site, 3, 1};
  }
  return {m.site, 0, 0};
}

MoveInstance inverse(const MoveInstance& m) {
  MoveInstance inv = m;
  switch (m.kind) {
    case MoveKind::Commute: break;
    case MoveKind::FrontR3: inv.variant = 1 - m.variant; break;
    default:
      inv.direction = m.direction == MoveDirection::Apply ? MoveDirection::Undo
                                                          : MoveDirection::Apply;
  }
  return inv;
}

std::vector<MoveInstance> applicable_moves(const FrontDiagram& d) {
  std::vector<MoveInstance> out;
  const std::size_t n = d.size();
  const auto& ev = d.events();
  for (std::size_t k = 0; k <= n; ++k) {
    const int s = d.strands(k);
    for (int p = 1; p <= s; ++p) {
      for (int v = 0; v < 2; ++v) {
        out.push_back({MoveKind::FrontR1, k, v, p, MoveDirection::Apply});
      }
    }
    for (int p = 1; p <= s; ++p) {
      for (int v = 0; v < 2; ++v) {
        out.push_back({MoveKind::Stabilize, k, v, p, MoveDirection::Apply});
      }
    }
    if (k == n) break;

    if (k + 1 < n && commute_pair(ev[k], ev[k + 1])) {
      out.push_back({MoveKind::Commute, k, 0, 0, MoveDirection::Apply});
    }

    const FrontEvent e = ev[k];
    if (e.kind != EventKind::Crossing) {
      const int base = e.kind == EventKind::LeftCusp ? 0 : 2;
      for (int v = base; v < base + 2; ++v) {
        if (r2_lhs_fits(v, e.position, s)) {
          out.push_back({MoveKind::FrontR2, k, v, e.position, MoveDirection::Apply});
        }
      }
    }

    if (k + 3 <= n) {
      // R1 undo: the window starts with its left cusp.
      if (e.kind == EventKind::LeftCusp) {
        const int p0 = e.position - 1;
        if (p0 >= 1 && window_matches(d, k, r1_pattern(0, p0))) {
          out.push_back({MoveKind::FrontR1, k, 0, p0, MoveDirection::Undo});
        }
        if (window_matches(d, k, r1_pattern(1, e.position))) {
          out.push_back({MoveKind::FrontR1, k, 1, e.position, MoveDirection::Undo});
        }
      }
      // R2 undo: recover the cusp position from the window.
      for (int v = 0; v < 4; ++v) {
        int i = 0;
        switch (v) {
          case 0: i = ev[k].position + 1; break;
          case 1: i = ev[k].position - 1; break;
          case 2: i = ev[k + 2].position + 1; break;
          default: i = ev[k + 2].position - 1; break;
        }
        if (i < 1 || !r2_lhs_fits(v, i, s)) continue;
        if (window_matches(d, k, r2_rhs(v, i))) {
          out.push_back({MoveKind::FrontR2, k, v, i, MoveDirection::Undo});
        }
      }
      if (e.kind == EventKind::Crossing) {
        const int a = e.position;
        if (window_matches(d, k, r3_pattern(0, a))) {
          out.push_back({MoveKind::FrontR3, k, 0, a, MoveDirection::Apply});
        }
        if (a >= 2 && window_matches(d, k, r3_pattern(1, a - 1))) {
          out.push_back({MoveKind::FrontR3, k, 1, a - 1, MoveDirection::Apply});
        }
      }
    }

    if (k + 2 <= n && e.kind == EventKind::LeftCusp &&
        ev[k + 1].kind == EventKind::RightCusp) {
      const int a = e.position, b = ev[k + 1].position;
      if (b == a - 1) {
        out.push_back({MoveKind::Stabilize, k, 0, b, MoveDirection::Undo});
      } else if (b == a + 1) {
        out.push_back({MoveKind::Stabilize, k, 1, a, MoveDirection::Undo});
      }
    }
  }
  return out;
}

FrontDiagram apply_move(const FrontDiagram& d, const MoveInstance& m) {
  auto [from, to] = rewrite(d, m);
  Word events;
  events.reserve(d.size() - from.size() + to.size());
  const auto& ev = d.events();
  const auto site = static_cast<std::ptrdiff_t>(m.site);
  events.insert(events.end(), ev.begin(), ev.begin() + site);
  events.insert(events.end(), to.begin(), to.end());
  events.insert(events.end(),
                ev.begin() + site + static_cast<std::ptrdiff_t>(from.size()),
                ev.end());
  return FrontDiagram::validate(std::move(events));
}

TrackedFront apply_move_tracked(const OrientedFront& of, const MoveInstance& m) {
  FrontDiagram next = apply_move(of.diagram(), m);
  const MoveWindow w = window(m);
  OrientedFront base = orient(next);
  const std::size_t count = base.component_count();
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> old(count, kNone);
  std::vector<bool> flips(count, false);
  const auto left = static_cast<int>(w.site);
  const auto right = static_cast<int>(w.site + w.new_length);
  const int shift = static_cast<int>(w.old_length) - static_cast<int>(w.new_length);
  for (std::size_t c = 0; c < count; ++c) {
    for (const Segment& s : base.components()[c].segments) {
      if (s.gap > left && s.gap < right) continue;
      const Segment before{s.gap <= left ? s.gap : s.gap + shift, s.position};
      old[c] = of.component_of(before);
      flips[c] = of.direction(before) != base.direction(s);
      break;
    }
    if (old[c] == kNone) {
      throw Error(ErrorCode::InternalConsistency,
                  "component lies entirely inside the rewritten window");
    }
  }
  return {base.with_flips(flips), std::move(old)};
}

void check_move_postconditions(const InvariantReport& before,
                               const InvariantReport& after,
                               const std::vector<std::size_t>& old_component,
                               const MoveInstance& m) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::InternalConsistency,
                std::string(to_string(m.kind)) + " at site " +
                    std::to_string(m.site) + ": " + what);
  };
  const std::size_t n = after.components.size();
  if (n != before.components.size() || old_component.size() != n) {
    fail("component count changed");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t o : old_component) {
    if (o >= n || seen[o]) fail("components do not correspond");
    seen[o] = true;
  }
  int changed = 0;
  for (std::size_t c = 0; c < n; ++c) {
    const ComponentInvariants& a = after.components[c];
    const ComponentInvariants& b = before.components[old_component[c]];
    const int dtb = a.tb - b.tb;
    const int drot = a.rot - b.rot;
    if (dtb == 0 && drot == 0) continue;
    if (m.kind != MoveKind::Stabilize) fail("tb/rot changed");
    const int expected = m.direction == MoveDirection::Apply ? -1 : 1;
    if (dtb != expected || (drot != 1 && drot != -1)) {
      fail("stabilization changed tb by " + std::to_string(dtb) +
           " and rot by " + std::to_string(drot));
    }
    ++changed;
  }
  if (m.kind == MoveKind::Stabilize && changed != 1) {
    fail("stabilization must change exactly one component");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (after.linking[a][b] !=
          before.linking[old_component[a]][old_component[b]]) {
        fail("linking changed");
      }
    }
  }
}

OrientedFront apply_move(const OrientedFront& of, const MoveInstance& m) {
  TrackedFront t = apply_move_tracked(of, m);
#ifndef NDEBUG
  check_move_postconditions(invariant_report(of), invariant_report(t.front),
                            t.old_component, m);
#endif
  return std::move(t.front);
}

FuzzResult fuzz(const OrientedFront& of, std::size_t steps, std::uint64_t seed,
                FuzzOptions options) {
  std::mt19937_64 rng(seed);
  FuzzResult result{of, {}, 0, 0, std::vector<int>(of.component_count(), 0)};
  result.old_component.resize(of.component_count());
  for (std::size_t c = 0; c < of.component_count(); ++c) {
    result.old_component[c] = c;
  }
  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<MoveInstance> moves = applicable_moves(result.front.diagram());
    if (!options.allow_stabilize) {
      std::erase_if(moves, [](const MoveInstance& m) {
        return m.kind == MoveKind::Stabilize;
      });
    }
    if (moves.empty()) {
      ++result.skipped;
      continue;
    }
    // Pick a (kind, direction) class first, then a site within it. A flat
    // pick is dominated by insertion sites and the front keeps growing.
    std::vector<std::vector<std::size_t>> classes(10);
    for (std::size_t k = 0; k < moves.size(); ++k) {
      const auto cls = 2 * static_cast<std::size_t>(moves[k].kind) +
                       (moves[k].direction == MoveDirection::Undo ? 1 : 0);
      classes[cls].push_back(k);
    }
    std::erase_if(classes, [](const auto& c) { return c.empty(); });
    std::uniform_int_distribution<std::size_t> pick_class(0, classes.size() - 1);
    const auto& cls = classes[pick_class(rng)];
    std::uniform_int_distribution<std::size_t> pick(0, cls.size() - 1);
    const MoveInstance m = moves[cls[pick(rng)]];
    if (m.kind == MoveKind::Stabilize) {
      const Segment touched =
          m.direction == MoveDirection::Apply
              ? Segment{static_cast<int>(m.site), m.strand}
              : Segment{static_cast<int>(m.site) + 1,
                        result.front.diagram()[m.site].position};
      const std::size_t c = result.front.component_of(touched);
      result.net_stabilizations[result.old_component[c]] +=
          m.direction == MoveDirection::Apply ? 1 : -1;
    }
    TrackedFront t = apply_move_tracked(result.front, m);
    std::vector<std::size_t> composed(t.old_component.size());
    for (std::size_t c = 0; c < composed.size(); ++c) {
      composed[c] = result.old_component[t.old_component[c]];
    }
    result.front = std::move(t.front);
    result.old_component = std::move(composed);
    ++result.applied;
  }
  return result;
}

}  // namespace legfront
