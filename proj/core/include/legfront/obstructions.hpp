#pragma once

// Computable obstructions from the slice-Bennequin inequality
//
//     -chi(F) >= (tb - f) + |rot|
//
// for a connected oriented surface F with one boundary circle, framed by f,
// and the Stein condition for 2-handles (framing at most tb - 1).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "legfront/front.hpp"
#include "legfront/moves.hpp"

namespace legfront {

enum class SliceVerdict { NotSlice, Inconclusive };

const char* to_string(SliceVerdict v);

struct GenusBound {
  int framing = 0;
  int tb = 0;
  int rot = 0;
  int bound = 0;  // genus lower bound, max(0, ceil((tb - f + |rot| + 1) / 2))
  SliceVerdict slice_verdict = SliceVerdict::Inconclusive;

  friend bool operator==(const GenusBound&, const GenusBound&) = default;
};

// Arithmetic core, exposed for exhaustive checks.
GenusBound genus_bound(int tb, int rot, int framing);
GenusBound genus_bound(const OrientedFront& of, std::size_t k, int framing);

struct SliceCertificate {
  SliceVerdict verdict = SliceVerdict::Inconclusive;
  int tb = 0;
  int rot = 0;
  // The disk instance of the inequality: lhs = -chi(D^2) = -1 against
  // rhs = tb + |rot|. NotSlice exactly when lhs < rhs.
  int lhs = -1;
  int rhs = 0;
};

// One-sided: never claims that a knot is slice. Throws NotAKnot.
SliceCertificate slice_check(const OrientedFront& knot);

enum class SteinStatus { ExactStein, SteinAfterStabilizations, NotCertified };

const char* to_string(SteinStatus s);

struct HandleRequest {
  std::size_t component;
  int framing;
};

struct HandleReport {
  std::size_t component = 0;
  int framing = 0;
  int tb = 0;
  SteinStatus status = SteinStatus::NotCertified;
  int stabilizations = 0;  // k for SteinAfterStabilizations
  int deficit = 0;         // f - (tb - 1) for NotCertified
  // Sequentially applicable Stabilize moves bringing tb - 1 down to f.
  std::vector<MoveInstance> stabilization_sites;
};

struct SteinReport {
  std::vector<HandleReport> handles;
  bool certified = true;
};

SteinStatus stein_status(int tb, int framing);

// Throws DuplicateHandle or UnknownComponent.
SteinReport stein_check(const OrientedFront& of,
                        const std::vector<HandleRequest>& handles);

}  // namespace legfront
