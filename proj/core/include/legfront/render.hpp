#pragma once

#include <string>

#include "legfront/front.hpp"

namespace legfront {

enum class RenderFormat { Ascii, Svg };

// Geometry is in character cells for ASCII and in units of 10px for SVG.
// For ASCII, strand_spacing must be even and column_width at least
// strand_spacing + 2.
struct RenderSpec {
  RenderFormat format = RenderFormat::Ascii;
  int column_width = 4;
  int strand_spacing = 2;
  bool show_event_indices = false;
  bool show_components = false;
};

// Deterministic: the same front and spec always give identical bytes.
// Throws InvalidArgument for unusable geometry and InternalConsistency if two
// strands would be drawn into the same cell away from a crossing.
std::string render(const OrientedFront& of, const RenderSpec& spec = {});

}  // namespace legfront
