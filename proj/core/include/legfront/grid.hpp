#pragma once

#include <vector>

#include "legfront/error.hpp"

namespace legfront {

// Rectangular (grid) diagram. Column c (1-based) holds an X marker in row
// xs[c-1] and an O marker in row os[c-1]; rows count upward from the bottom.
// Vertical segments run X to O and cross over horizontal ones, which run
// O to X.
class GridDiagram {
 public:
  // Throws InvalidGrid unless xs and os are permutations of 1..n with
  // n >= 2 and no column holding both markers in the same cell.
  static GridDiagram validate(std::vector<int> xs, std::vector<int> os);

  int size() const noexcept { return static_cast<int>(xs_.size()); }
  int x_row(int column) const { return xs_[static_cast<std::size_t>(column - 1)]; }
  int o_row(int column) const { return os_[static_cast<std::size_t>(column - 1)]; }
  // Columns holding the X and O markers of a row.
  int x_column(int row) const { return x_col_[static_cast<std::size_t>(row - 1)]; }
  int o_column(int row) const { return o_col_[static_cast<std::size_t>(row - 1)]; }

  const std::vector<int>& xs() const noexcept { return xs_; }
  const std::vector<int>& os() const noexcept { return os_; }

  friend bool operator==(const GridDiagram& a, const GridDiagram& b) {
    return a.xs_ == b.xs_ && a.os_ == b.os_;
  }

 private:
  GridDiagram() = default;

  std::vector<int> xs_, os_;
  std::vector<int> x_col_, o_col_;
};

}  // namespace legfront
