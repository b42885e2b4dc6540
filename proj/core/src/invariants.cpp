#include "legfront/invariants.hpp"

#include <string>

namespace legfront {

namespace {

bool is_down(const OrientedFront& of, std::size_t e) {
  const FrontDiagram& d = of.diagram();
  const int g = static_cast<int>(e);
  const int i = d[e].position;
  // A cusp is downward when traversal enters it on the upper branch.
  if (d[e].kind == EventKind::LeftCusp) {
    return of.direction({g + 1, i}) == Direction::Leftward;
  }
  return of.direction({g, i}) == Direction::Rightward;
}

std::size_t cusp_component(const OrientedFront& of, std::size_t e) {
  const FrontDiagram& d = of.diagram();
  const int g = static_cast<int>(e);
  const int i = d[e].position;
  return d[e].kind == EventKind::LeftCusp ? of.component_of({g + 1, i})
                                          : of.component_of({g, i});
}

int halve_rotation(int down, int up, std::size_t k) {
  if ((down - up) % 2 != 0) {
    throw Error(ErrorCode::InternalConsistency,
                "odd cusp imbalance on component " + std::to_string(k));
  }
  return (down - up) / 2;
}

}  // namespace

int crossing_sign(const OrientedFront& of, std::size_t e) {
  const FrontDiagram& d = of.diagram();
  const int g = static_cast<int>(e);
  const int i = d[e].position;
  // Both strands heading the same horizontal way: positive.
  return of.direction({g, i}) == of.direction({g, i + 1}) ? 1 : -1;
}

int writhe(const OrientedFront& of, std::size_t k) {
  of.check_component(k);
  const FrontDiagram& d = of.diagram();
  int w = 0;
  for (std::size_t e = 0; e < d.size(); ++e) {
    if (d[e].kind != EventKind::Crossing) continue;
    const int g = static_cast<int>(e);
    const int i = d[e].position;
    if (of.component_of({g, i}) == k && of.component_of({g, i + 1}) == k) {
      w += crossing_sign(of, e);
    }
  }
  return w;
}

CuspCounts cusp_counts(const OrientedFront& of, std::size_t k) {
  of.check_component(k);
  const FrontDiagram& d = of.diagram();
  CuspCounts c;
  for (std::size_t e = 0; e < d.size(); ++e) {
    if (d[e].kind == EventKind::Crossing) continue;
    if (cusp_component(of, e) != k) continue;
    if (d[e].kind == EventKind::RightCusp) ++c.right;
    if (is_down(of, e)) {
      ++c.down;
    } else {
      ++c.up;
    }
  }
  return c;
}

int tb(const OrientedFront& of, std::size_t k) {
  return writhe(of, k) - cusp_counts(of, k).right;
}

int rot(const OrientedFront& of, std::size_t k) {
  const CuspCounts c = cusp_counts(of, k);
  return halve_rotation(c.down, c.up, k);
}

int linking(const OrientedFront& of, std::size_t j, std::size_t k) {
  of.check_component(j);
  of.check_component(k);
  if (j == k) {
    throw Error(ErrorCode::SameComponent,
                "linking needs two distinct components");
  }
  const FrontDiagram& d = of.diagram();
  int twice = 0;
  for (std::size_t e = 0; e < d.size(); ++e) {
    if (d[e].kind != EventKind::Crossing) continue;
    const int g = static_cast<int>(e);
    const int i = d[e].position;
    const std::size_t a = of.component_of({g, i});
    const std::size_t b = of.component_of({g, i + 1});
    if ((a == j && b == k) || (a == k && b == j)) twice += crossing_sign(of, e);
  }
  if (twice % 2 != 0) {
    throw Error(ErrorCode::InternalConsistency,
                "odd inter-component crossing sum");
  }
  return twice / 2;
}

InvariantReport invariant_report(const OrientedFront& of) {
  const FrontDiagram& d = of.diagram();
  const std::size_t n = of.component_count();
  InvariantReport report;
  report.components.resize(n);
  std::vector<std::vector<int>> twice(n, std::vector<int>(n, 0));
  for (std::size_t e = 0; e < d.size(); ++e) {
    const int g = static_cast<int>(e);
    const int i = d[e].position;
    if (d[e].kind == EventKind::Crossing) {
      const std::size_t a = of.component_of({g, i});
      const std::size_t b = of.component_of({g, i + 1});
      const int s = crossing_sign(of, e);
      if (a == b) {
        report.components[a].writhe += s;
      } else {
        twice[a][b] += s;
        twice[b][a] += s;
      }
      continue;
    }
    ComponentInvariants& c = report.components[cusp_component(of, e)];
    if (d[e].kind == EventKind::RightCusp) ++c.right_cusps;
    if (is_down(of, e)) {
      ++c.down_cusps;
    } else {
      ++c.up_cusps;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    ComponentInvariants& c = report.components[k];
    c.tb = c.writhe - c.right_cusps;
    c.rot = halve_rotation(c.down_cusps, c.up_cusps, k);
  }
  report.linking.assign(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (twice[a][b] % 2 != 0) {
        throw Error(ErrorCode::InternalConsistency,
                    "odd inter-component crossing sum");
      }
      report.linking[a][b] = twice[a][b] / 2;
    }
  }
  return report;
}

}  // namespace legfront
