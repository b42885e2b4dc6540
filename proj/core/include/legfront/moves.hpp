#pragma once

// Local rewrites of event words.
//
//   Commute    two adjacent events on disjoint strands trade places
//   FrontR1    kink insertion on strand p:  (empty) <-> L X R
//                v0: L(p+1) X(p) R(p+1)      v1: L(p) X(p+1) R(p)
//   FrontR2    a strand slides through a cusp
//                v0: L(i) <-> L(i-1) X(i) X(i-1)   (strand above)
//                v1: L(i) <-> L(i+1) X(i) X(i+1)   (strand below)
//                v2: R(i) <-> X(i-1) X(i) R(i-1)
//                v3: R(i) <-> X(i+1) X(i) R(i+1)
//   FrontR3    X(i) X(i+1) X(i) <-> X(i+1) X(i) X(i+1)
//   Stabilize  zigzag on strand p:  (empty) <-> L R
//                v0: L(p+1) R(p)   v1: L(p) R(p+1)
//
// Everything except Stabilize preserves tb, rot and linking exactly.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "legfront/front.hpp"
#include "legfront/invariants.hpp"

namespace legfront {

enum class MoveKind : std::uint8_t {
  Commute,
  FrontR1,
  FrontR2,
  FrontR3,
  Stabilize,
};

enum class MoveDirection : std::uint8_t { Apply, Undo };

struct MoveInstance {
  MoveKind kind = MoveKind::Commute;
  // First event index of the rewritten window. For insertions this is the
  // gap the new events go into.
  std::size_t site = 0;
  int variant = 0;
  // Strand position for FrontR1/Stabilize, cusp position for FrontR2.
  int strand = 0;
  MoveDirection direction = MoveDirection::Apply;

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

const char* to_string(MoveKind kind);

// Events replaced and inserted by a move.
struct MoveWindow {
  std::size_t site;
  std::size_t old_length;
  std::size_t new_length;
};
MoveWindow window(const MoveInstance& m);

// The instance that undoes m when applied to apply_move(d, m).
MoveInstance inverse(const MoveInstance& m);

std::vector<MoveInstance> applicable_moves(const FrontDiagram& d);

// Throws InapplicableMove when m does not match d.
FrontDiagram apply_move(const FrontDiagram& d, const MoveInstance& m);

// Applies m and carries the orientation across. old_component[c] is the
// component of the input that new component c came from.
struct TrackedFront {
  OrientedFront front;
  std::vector<std::size_t> old_component;
};
TrackedFront apply_move_tracked(const OrientedFront& of, const MoveInstance& m);

// Throws InternalConsistency when the invariant changes caused by m are not
// the ones its kind promises.
void check_move_postconditions(const InvariantReport& before,
                               const InvariantReport& after,
                               const std::vector<std::size_t>& old_component,
                               const MoveInstance& m);

// Oriented version; in debug builds every call re-checks the postconditions.
OrientedFront apply_move(const OrientedFront& of, const MoveInstance& m);

struct FuzzOptions {
  bool allow_stabilize = false;
};

struct FuzzResult {
  OrientedFront front;
  std::vector<std::size_t> old_component;  // maps back to the input
  std::size_t applied = 0;
  std::size_t skipped = 0;
  // Stabilizations minus destabilizations, per input component.
  std::vector<int> net_stabilizations;
};

// Applies `steps` uniformly chosen applicable moves; deterministic in seed.
FuzzResult fuzz(const OrientedFront& of, std::size_t steps, std::uint64_t seed,
                FuzzOptions options = {});

}  // namespace legfront
