#include "dyadlab/svg.hpp"

#include "dyadlab/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dyadlab {

namespace {

constexpr double kW = 640, kH = 420;
constexpr double kL = 70, kR = 20, kT = 40, kB = 50;

std::string num(double v) { return format_double(std::round(v * 100) / 100); }

}  // namespace

std::string svg_plot(const std::string& title, const std::vector<SvgSeries>& series,
                     bool log_y) {
  double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  auto ty = [&](double y) { return log_y ? std::log10(std::max(y, 1e-300)) : y; };
  for (const auto& s : series)
    for (auto [x, y] : s.points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, ty(y));
      ymax = std::max(ymax, ty(y));
    }
  if (!(xmax > xmin)) xmax = xmin + 1;
  if (!(ymax > ymin)) ymax = ymin + 1;
  auto px = [&](double x) { return kL + (x - xmin) / (xmax - xmin) * (kW - kL - kR); };
  auto py = [&](double y) { return kH - kB - (ty(y) - ymin) / (ymax - ymin) * (kH - kT - kB); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kW) + "\" height=\"" +
         num(kH) + "\" viewBox=\"0 0 " + num(kW) + " " + num(kH) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(kW / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
         title + "</text>\n";
  // axes
  out += "<line x1=\"" + num(kL) + "\" y1=\"" + num(kH - kB) + "\" x2=\"" + num(kW - kR) +
         "\" y2=\"" + num(kH - kB) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + num(kL) + "\" y1=\"" + num(kT) + "\" x2=\"" + num(kL) + "\" y2=\"" +
         num(kH - kB) + "\" stroke=\"black\"/>\n";
  // ticks
  for (int i = 0; i <= 4; ++i) {
    double x = xmin + (xmax - xmin) * i / 4;
    out += "<text x=\"" + num(px(x)) + "\" y=\"" + num(kH - kB + 18) +
           "\" text-anchor=\"middle\" font-size=\"11\">" + format_double(x) + "</text>\n";
    double yv = ymin + (ymax - ymin) * i / 4;
    double yd = log_y ? std::pow(10.0, yv) : yv;
    out += "<text x=\"" + num(kL - 6) + "\" y=\"" +
           num(kH - kB - (kH - kT - kB) * i / 4 + 4) +
           "\" text-anchor=\"end\" font-size=\"11\">" + format_double(yd) + "</text>\n";
  }
  double legend_y = kT + 4;
  for (const auto& s : series) {
    if (s.points.empty()) continue;
    std::string pts;
    for (auto [x, y] : s.points) pts += num(px(x)) + "," + num(py(y)) + " ";
    out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.6\" points=\"" +
           pts + "\"/>\n";
    out += "<text x=\"" + num(kW - kR - 4) + "\" y=\"" + num(legend_y) +
           "\" text-anchor=\"end\" font-size=\"11\" fill=\"" + s.color + "\">" + s.label +
           "</text>\n";
    legend_y += 14;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace dyadlab
