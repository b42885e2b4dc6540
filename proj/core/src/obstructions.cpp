#include "legfront/obstructions.hpp"

#include <algorithm>
#include <cstdlib>

#include "legfront/invariants.hpp"

namespace legfront {

namespace {

int ceil_half(int v) {
  // floor division rounds toward -inf; ceil(v/2) = -floor(-v/2)
  return v >= 0 ? (v + 1) / 2 : -((-v) / 2);
}

}  // namespace

const char* to_string(SliceVerdict v) {
  return v == SliceVerdict::NotSlice ? "NotSlice" : "Inconclusive";
}

const char* to_string(SteinStatus s) {
  switch (s) {
    case SteinStatus::ExactStein: return "ExactStein";
    case SteinStatus::SteinAfterStabilizations: return "SteinAfterStabilizations";
    case SteinStatus::NotCertified: return "NotCertified";
  }
  return "?";
}

GenusBound genus_bound(int tb, int rot, int framing) {
  GenusBound g;
  g.framing = framing;
  g.tb = tb;
  g.rot = rot;
  // chi(F) = 1 - 2g, so 2g - 1 >= tb - f + |rot|.
  g.bound = std::max(0, ceil_half(tb - framing + std::abs(rot) + 1));
  g.slice_verdict = framing == 0 && tb + std::abs(rot) >= 0
                        ? SliceVerdict::NotSlice
                        : SliceVerdict::Inconclusive;
  return g;
}

GenusBound genus_bound(const OrientedFront& of, std::size_t k, int framing) {
  of.check_component(k);
  return genus_bound(tb(of, k), rot(of, k), framing);
}

SliceCertificate slice_check(const OrientedFront& knot) {
  if (knot.component_count() != 1) {
    throw Error(ErrorCode::NotAKnot,
                "slice_check needs a knot, got " +
                    std::to_string(knot.component_count()) + " components");
  }
  SliceCertificate cert;
  cert.tb = tb(knot, 0);
  cert.rot = rot(knot, 0);
  cert.lhs = -1;
  cert.rhs = cert.tb + std::abs(cert.rot);
  cert.verdict = cert.lhs < cert.rhs ? SliceVerdict::NotSlice
                                     : SliceVerdict::Inconclusive;
  return cert;
}

SteinStatus stein_status(int tb, int framing) {
  const int slack = (tb - 1) - framing;
  if (slack == 0) return SteinStatus::ExactStein;
  return slack > 0 ? SteinStatus::SteinAfterStabilizations
                   : SteinStatus::NotCertified;
}

SteinReport stein_check(const OrientedFront& of,
                        const std::vector<HandleRequest>& handles) {
  std::vector<bool> used(of.component_count(), false);
  for (const HandleRequest& h : handles) {
    of.check_component(h.component);
    if (used[h.component]) {
      throw Error(ErrorCode::DuplicateHandle,
                  "component " + std::to_string(h.component) +
                      " carries more than one handle");
    }
    used[h.component] = true;
  }

  SteinReport report;
  const InvariantReport inv = invariant_report(of);
  for (const HandleRequest& h : handles) {
    HandleReport hr;
    hr.component = h.component;
    hr.framing = h.framing;
    hr.tb = inv.components[h.component].tb;
    hr.status = stein_status(hr.tb, h.framing);
    if (hr.status == SteinStatus::NotCertified) {
      hr.deficit = h.framing - (hr.tb - 1);
      report.certified = false;
    } else if (hr.status == SteinStatus::SteinAfterStabilizations) {
      hr.stabilizations = (hr.tb - 1) - h.framing;
      // Zigzags stacked on the upper branch of the component's first left
      // cusp; inserting at the same gap keeps every later site valid.
      const std::size_t e = of.components()[h.component].first_event;
      const MoveInstance m{MoveKind::Stabilize, e + 1, 0,
                           of.diagram()[e].position, MoveDirection::Apply};
      hr.stabilization_sites.assign(static_cast<std::size_t>(hr.stabilizations), m);

      OrientedFront stabilized = of;
      std::vector<std::size_t> origin(of.component_count());
      for (std::size_t c = 0; c < origin.size(); ++c) origin[c] = c;
      for (const MoveInstance& site : hr.stabilization_sites) {
        TrackedFront t = apply_move_tracked(stabilized, site);
        for (auto& o : t.old_component) o = origin[o];
        origin = t.old_component;
        stabilized = std::move(t.front);
      }
      const auto it = std::find(origin.begin(), origin.end(), h.component);
      const auto k = static_cast<std::size_t>(it - origin.begin());
      if (stein_status(tb(stabilized, k), h.framing) != SteinStatus::ExactStein) {
        throw Error(ErrorCode::InternalConsistency,
                    "stabilization sites do not reach the framing");
      }
    }
    report.handles.push_back(std::move(hr));
  }
  return report;
}

}  // namespace legfront
