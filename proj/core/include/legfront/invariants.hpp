#pragma once

// Classical invariants of oriented fronts: blackboard writhe, cusp counts,
// Thurston-Bennequin number, rotation number and pairwise linking.

#include <cstddef>
#include <vector>

#include "legfront/front.hpp"

namespace legfront {

struct CuspCounts {
  int right = 0;
  int down = 0;
  int up = 0;

  friend bool operator==(const CuspCounts&, const CuspCounts&) = default;
};

// Sign of the crossing at event index e (which must be a Crossing).
int crossing_sign(const OrientedFront& of, std::size_t e);

int writhe(const OrientedFront& of, std::size_t k);
CuspCounts cusp_counts(const OrientedFront& of, std::size_t k);
int tb(const OrientedFront& of, std::size_t k);
int rot(const OrientedFront& of, std::size_t k);
int linking(const OrientedFront& of, std::size_t j, std::size_t k);

struct ComponentInvariants {
  int writhe = 0;  // bb
  int right_cusps = 0;
  int down_cusps = 0;
  int up_cusps = 0;
  int tb = 0;
  int rot = 0;

  friend bool operator==(const ComponentInvariants&,
                         const ComponentInvariants&) = default;
};

struct InvariantReport {
  std::vector<ComponentInvariants> components;
  std::vector<std::vector<int>> linking;  // symmetric, zero diagonal

  friend bool operator==(const InvariantReport&,
                         const InvariantReport&) = default;
};

// Everything above in a single sweep over the word.
InvariantReport invariant_report(const OrientedFront& of);

}  // namespace legfront
