#pragma once

#include <string>
#include <vector>

#include "bstab/walls.hpp"

namespace bstab {

struct PlotLayer {
  std::string name;
  std::string color;
  WallLocus locus;
  bool guide = false;  ///< clip curves and boundaries: drawn, but not exported as locus data
};

struct PlotDoc {
  std::string title;
  Viewport view;
  std::vector<PlotLayer> layers;
  /// True when every non-guide layer is empty.
  bool empty_locus() const;
};

/// `coord1,coord2,residual` rows for every non-guide layer, in layer order.
std::string emit_csv(const PlotDoc& doc);
/// Standalone SVG 1.1 with axes; points outside the viewport are dropped and split polylines.
std::string emit_svg(const PlotDoc& doc, int width = 640, int height = 480);

/// Parabola q = p^2/4 with the walls of (1, 0, -c) and (1, -1, 1/2).
PlotDoc figure1(const Rational& c = 1, const Viewport& view = {-6, 6, -6, 6});
/// Double-root boundary curve and the lines t_1 = -M, t_3 = -N for given m.
PlotDoc figure4(long long m, const Viewport& view = {4, 14, 5, 35});

}  // namespace bstab
