#include "legfront/grid.hpp"

#include <string>

namespace legfront {

namespace {

std::vector<int> inverse(const std::vector<int>& perm, const char* name) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> inv(perm.size(), 0);
  for (int c = 1; c <= n; ++c) {
    const int r = perm[static_cast<std::size_t>(c - 1)];
    if (r < 1 || r > n) {
      throw Error(ErrorCode::InvalidGrid, std::string(name) + " entry " +
                                              std::to_string(r) +
                                              " outside 1.." + std::to_string(n));
    }
    if (inv[static_cast<std::size_t>(r - 1)] != 0) {
      throw Error(ErrorCode::InvalidGrid, std::string(name) + " repeats row " +
                                              std::to_string(r));
    }
    inv[static_cast<std::size_t>(r - 1)] = c;
  }
  return inv;
}

}  // namespace

GridDiagram GridDiagram::validate(std::vector<int> xs, std::vector<int> os) {
  if (xs.size() != os.size()) {
    throw Error(ErrorCode::InvalidGrid, "X and O rows differ in length");
  }
  if (xs.size() < 2) {
    throw Error(ErrorCode::InvalidGrid, "grid size must be at least 2");
  }
  GridDiagram g;
  g.x_col_ = inverse(xs, "X");
  g.o_col_ = inverse(os, "O");
  for (std::size_t c = 0; c < xs.size(); ++c) {
    if (xs[c] == os[c]) {
      throw Error(ErrorCode::InvalidGrid,
                  "column " + std::to_string(c + 1) + " has X and O in row " +
                      std::to_string(xs[c]));
    }
  }
  g.xs_ = std::move(xs);
  g.os_ = std::move(os);
  return g;
}

}  // namespace legfront
