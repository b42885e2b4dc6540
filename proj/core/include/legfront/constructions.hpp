#pragma once

#include <cstddef>

#include "legfront/front.hpp"
#include "legfront/grid.hpp"

namespace legfront {

// Front of the link closed up by a grid diagram: the grid is turned through
// 45 degrees so its edges get slope +-1, corners opening to the right become
// left cusps, corners opening to the left become right cusps, and the rest
// are smoothed. The result carries the grid's orientation.
OrientedFront legendrianize(const GridDiagram& g);

// Two-component front made of the knot K and a Legendrian copy K_r with
// lk(K, K_r) = r and tb(K_r) - r = -|tb(K) - r|.
//
// K is doubled strand by strand (nested cusps, four-crossing blocks at
// crossings). The doubled front links with lk = bb(K); the framing is then
// corrected by:
//   r >= bb:       2(r - bb) positive half twists next to the last right cusp
//   tb <= r < bb:  2(bb - r) cusps replaced by stacked cusps, each a
//                  negative half twist, in event order
//   r < tb:        all 2c cusps stacked, plus 2(tb - r) zigzag half twists
//                  on the companion, each costing one from its tb
struct PushOffResult {
  OrientedFront front;
  std::size_t original_index = 0;
  std::size_t companion_index = 0;
  int framing = 0;
  int stab_count = 0;       // leftover full twists, max(0, tb - r)
  int kinks = 0;            // zigzags on the companion, 2 * stab_count
  int cusp_twists = 0;      // stacked cusp pairs
  int positive_twists = 0;  // half twists made of plain crossings
  // Gap just before the expansion of the final right cusp, after all
  // correction events. Positions 1 and 2 there hold one strand of each
  // component.
  std::size_t closing_gap = 0;
  // Gap after the expansion of the first left cusp.
  std::size_t opening_gap = 0;
};

// Throws NotAKnot for multi-component input.
PushOffResult push_off(const OrientedFront& knot, int framing);

// n-fold positive Whitehead double. Each step takes the 0-push-off, reverses
// the companion and joins the two through a clasp L X X R placed on the
// strand pair at closing_gap, so tb(Wh(K)) = tb(K) + tb(K_0) + 1.
OrientedFront whitehead_double(const OrientedFront& knot, int n = 1);

}  // namespace legfront
