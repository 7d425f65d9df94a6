#pragma once

#include <span>
#include <string>
#include <vector>

namespace cfa::svg {

struct Series {
  std::string label;
  std::vector<double> y;  // x is the 1-based index
  std::string color = "#1f77b4";
};

/// Minimal line chart: axes, y ticks, one polyline per series, legend.
std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label, std::span<const Series> series);

}  // namespace cfa::svg
