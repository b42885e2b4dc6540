#include <gtest/gtest.h>

#include <cstdlib>

#include "corpus.hpp"
#include "legfront/invariants.hpp"
#include "legfront/io.hpp"
#include "legfront/moves.hpp"

using namespace legfront;
using testing_support::front_names;
using testing_support::load_front;

namespace {

OrientedFront W(const char* text) { return orient(parse_front(text)); }

std::vector<std::string> small_fronts() {
  std::vector<std::string> out;
  for (const std::string& name : front_names()) {
    if (load_front(name).diagram().size() <= 40) out.push_back(name);
  }
  return out;
}

ErrorCode code_of_apply(const FrontDiagram& d, const MoveInstance& m) {
  try {
    apply_move(d, m);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalConsistency;
}

}  // namespace

TEST(Moves, CorpusHasSmallFronts) { EXPECT_GE(small_fronts().size(), 15u); }

TEST(Moves, EveryApplicableMoveIsUndoneByItsInverse) {
  for (const std::string& name : small_fronts()) {
    const FrontDiagram d = load_front(name).diagram();
    for (const MoveInstance& m : applicable_moves(d)) {
      const FrontDiagram after = apply_move(d, m);
      EXPECT_EQ(apply_move(after, inverse(m)), d)
          << name << ' ' << to_string(m.kind) << " site " << m.site << " v" << m.variant;
      const MoveWindow w = window(m);
      EXPECT_EQ(after.size() + w.old_length, d.size() + w.new_length);
    }
  }
}

TEST(Moves, CommuteIsAnInvolution) {
  std::size_t checked = 0;
  for (const std::string& name : small_fronts()) {
    const FrontDiagram d = load_front(name).diagram();
    for (const MoveInstance& m : applicable_moves(d)) {
      if (m.kind != MoveKind::Commute) continue;
      const FrontDiagram once = apply_move(d, m);
      EXPECT_NE(once, d);
      EXPECT_EQ(apply_move(once, m), d) << name << " site " << m.site;
      ++checked;
    }
  }
  EXPECT_GT(checked, 20u);
}

TEST(Moves, NonStabilizingMovesPreserveInvariants) {
  for (const std::string& name : small_fronts()) {
    const OrientedFront of = load_front(name);
    const InvariantReport before = invariant_report(of);
    for (const MoveInstance& m : applicable_moves(of.diagram())) {
      if (m.kind == MoveKind::Stabilize) continue;
      const TrackedFront t = apply_move_tracked(of, m);
      const InvariantReport after = invariant_report(t.front);
      ASSERT_EQ(after.components.size(), before.components.size()) << name;
      for (std::size_t c = 0; c < after.components.size(); ++c) {
        const std::size_t o = t.old_component[c];
        EXPECT_EQ(after.components[c].tb, before.components[o].tb) << name;
        EXPECT_EQ(after.components[c].rot, before.components[o].rot) << name;
        for (std::size_t c2 = 0; c2 < after.components.size(); ++c2) {
          if (c2 == c) continue;
          EXPECT_EQ(after.linking[c][c2], before.linking[o][t.old_component[c2]]) << name;
        }
      }
      EXPECT_NO_THROW(check_move_postconditions(before, after, t.old_component, m));
    }
  }
}

TEST(Moves, StabilizationLaw) {
  for (const std::string& name : small_fronts()) {
    const OrientedFront of = load_front(name);
    const InvariantReport before = invariant_report(of);
    for (const MoveInstance& m : applicable_moves(of.diagram())) {
      if (m.kind != MoveKind::Stabilize || m.direction != MoveDirection::Apply) continue;
      const std::size_t touched = of.component_of({static_cast<int>(m.site), m.strand});
      const TrackedFront t = apply_move_tracked(of, m);
      const InvariantReport after = invariant_report(t.front);
      for (std::size_t c = 0; c < after.components.size(); ++c) {
        const std::size_t o = t.old_component[c];
        const int dtb = after.components[c].tb - before.components[o].tb;
        const int drot = after.components[c].rot - before.components[o].rot;
        if (o == touched) {
          EXPECT_EQ(dtb, -1) << name;
          EXPECT_EQ(std::abs(drot), 1) << name;
        } else {
          EXPECT_EQ(dtb, 0) << name;
          EXPECT_EQ(drot, 0) << name;
        }
      }
    }
  }
}

TEST(Moves, StabilizationVariantsHaveOppositeRotation) {
  const OrientedFront of = W("L1 L3 X2 X2 X2 R3 R1");
  for (int gap = 1; gap <= 6; ++gap) {
    for (int p = 1; p <= of.diagram().strands(static_cast<std::size_t>(gap)); ++p) {
      const auto site = static_cast<std::size_t>(gap);
      const int r0 = rot(apply_move(of, {MoveKind::Stabilize, site, 0, p}), 0);
      const int r1 = rot(apply_move(of, {MoveKind::Stabilize, site, 1, p}), 0);
      EXPECT_EQ(r0, -r1);
      EXPECT_EQ(std::abs(r0), 1);
    }
  }
}

TEST(Moves, TripleMoveOnThreeStrands) {
  const OrientedFront of = W("L1 L3 X2 X3 X2 R3 R1");
  bool found = false;
  for (const MoveInstance& m : applicable_moves(of.diagram())) {
    if (m.kind != MoveKind::FrontR3) continue;
    found = true;
    EXPECT_EQ(m.site, 2u);
    const OrientedFront after = apply_move(of, m);
    EXPECT_EQ(after.diagram(), parse_front("L1 L3 X3 X2 X3 R3 R1"));
    EXPECT_EQ(invariant_report(after), invariant_report(of));
  }
  EXPECT_TRUE(found);
}

TEST(Moves, TripleMoveReachedFromTheTrefoil) {
  // Walk the trefoil one random move at a time until a triple point shows up.
  OrientedFront current = W("L1 L3 X2 X2 X2 R3 R1");
  std::size_t r3 = 0;
  for (std::uint64_t step = 0; step < 400 && r3 < 3; ++step) {
    bool applied = false;
    for (const MoveInstance& m : applicable_moves(current.diagram())) {
      if (m.kind == MoveKind::FrontR3) {
        current = apply_move(current, m);
        EXPECT_EQ(tb(current, 0), 1);
        EXPECT_EQ(rot(current, 0), 0);
        ++r3;
        applied = true;
        break;
      }
    }
    if (!applied) current = fuzz(current, 1, step).front;
  }
  EXPECT_GT(r3, 0u);
}

TEST(Moves, InapplicableMovesAreRejected) {
  const FrontDiagram d = parse_front("L1 L3 X2 X2 X2 R3 R1");
  EXPECT_EQ(code_of_apply(d, {MoveKind::FrontR3, 2, 0, 2}), ErrorCode::InapplicableMove);
  EXPECT_EQ(code_of_apply(d, {MoveKind::Commute, 6, 0, 0}), ErrorCode::InapplicableMove);
  EXPECT_EQ(code_of_apply(d, {MoveKind::Commute, 2, 0, 0}), ErrorCode::InapplicableMove);
  EXPECT_EQ(code_of_apply(d, {MoveKind::FrontR1, 0, 0, 1, MoveDirection::Undo}),
            ErrorCode::InapplicableMove);
  EXPECT_EQ(code_of_apply(d, {MoveKind::Stabilize, 1, 0, 3}), ErrorCode::InapplicableMove);
  EXPECT_EQ(code_of_apply(d, {MoveKind::FrontR2, 2, 0, 2}), ErrorCode::InapplicableMove);
}

TEST(Moves, EnumerationIsDeterministicAndOrderedBySite) {
  for (const std::string& name : small_fronts()) {
    const FrontDiagram d = load_front(name).diagram();
    const auto a = applicable_moves(d);
    EXPECT_EQ(a, applicable_moves(d));
    for (std::size_t k = 1; k < a.size(); ++k) EXPECT_LE(a[k - 1].site, a[k].site) << name;
  }
}

TEST(Fuzz, DeterministicInSeed) {
  const OrientedFront tre = load_front("trefoil.front");
  const FuzzResult a = fuzz(tre, 300, 42);
  const FuzzResult b = fuzz(tre, 300, 42);
  const FuzzResult c = fuzz(tre, 300, 43);
  EXPECT_EQ(a.front.diagram(), b.front.diagram());
  EXPECT_NE(a.front.diagram(), c.front.diagram());
  EXPECT_EQ(a.applied, 300u);
}

TEST(Fuzz, LongRunPreservesInvariants) {
  for (const char* name : {"trefoil.front", "hopf.front", "unlink3.front", "figure_eight.front"}) {
    const OrientedFront of = load_front(name);
    const InvariantReport before = invariant_report(of);
    const FuzzResult f = fuzz(of, 2000, 5);
    const InvariantReport after = invariant_report(f.front);
    for (std::size_t c = 0; c < after.components.size(); ++c) {
      const std::size_t o = f.old_component[c];
      EXPECT_EQ(after.components[c].tb, before.components[o].tb) << name;
      EXPECT_EQ(after.components[c].rot, before.components[o].rot) << name;
      for (std::size_t c2 = 0; c2 < after.components.size(); ++c2) {
        if (c2 != c) {
          EXPECT_EQ(after.linking[c][c2], before.linking[o][f.old_component[c2]]) << name;
        }
      }
    }
    for (int s : f.net_stabilizations) EXPECT_EQ(s, 0);
  }
}

TEST(Fuzz, StabilizationsAccountForTbChange) {
  const OrientedFront of = load_front("hopf.front");
  const InvariantReport before = invariant_report(of);
  const FuzzResult f = fuzz(of, 1500, 9, FuzzOptions{true});
  const InvariantReport after = invariant_report(f.front);
  for (std::size_t c = 0; c < after.components.size(); ++c) {
    const std::size_t o = f.old_component[c];
    EXPECT_EQ(after.components[c].tb, before.components[o].tb - f.net_stabilizations[o]);
  }
}

TEST(Fuzz, ZeroStepsAndTheTrefoilExample) {
  const OrientedFront unknot = load_front("unknot.front");
  EXPECT_EQ(fuzz(unknot, 0, 99).front.diagram(), unknot.diagram());
  const FuzzResult f = fuzz(load_front("trefoil.front"), 1000, 7);
  EXPECT_EQ(tb(f.front, 0), 1);
  EXPECT_EQ(rot(f.front, 0), 0);
}
