#pragma once

#include <string>
#include <vector>

namespace dyadlab {

/// Minimal polyline plot writer. Axes may be log-scaled (base 2 on x for
/// level-style data, base 10 on y); emits a self-contained SVG document.
struct SvgSeries {
  std::string label;
  std::string color = "#1f6fb2";
  std::vector<std::pair<double, double>> points;
};

std::string svg_plot(const std::string& title, const std::vector<SvgSeries>& series,
                     bool log_y = false);

}  // namespace dyadlab
