#pragma once

#include <string>
#include <vector>

#include "darboux/linkage.hpp"

namespace darboux {

enum class ViewAxis { X, Y, Z };

ViewAxis parse_view(std::string_view text);

struct PlotOptions {
  ViewAxis view = ViewAxis::Z;  // orthographic projection parallel to this axis
  std::size_t frames = 9;
  double cell = 260.0;          // frame size in px
  double axis_length = 1.0;     // drawn length of oblique joint axes, model units
};

/// Rotation angles of the sampled frames: n bins over (-pi, pi], centred, so n = 1 gives t = 0.
std::vector<double> plot_angles(std::size_t frames);

/// Multi-frame grid of the linkage: joint axes (points when parallel to the view), links, labels.
std::string plot_linkage_svg(const Linkage& l, const PlotOptions& opt);

}  // namespace darboux
