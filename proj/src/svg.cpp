#include "cfa/svg.hpp"

#include <algorithm>
#include <charconv>

namespace cfa::svg {

namespace {

std::string num(double v) {
  char buf[48];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
  return std::string(buf, ptr);
}

}  // namespace

std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label, std::span<const Series> series) {
  constexpr double width = 640, height = 400;
  constexpr double left = 70, right = 610, top = 50, bottom = 350;

  std::size_t n = 0;
  double y_min = 0.0, y_max = 1.0;
  bool seen = false;
  for (const Series& s : series) {
    n = std::max(n, s.y.size());
    for (double v : s.y) {
      y_min = seen ? std::min(y_min, v) : v;
      y_max = seen ? std::max(y_max, v) : v;
      seen = true;
    }
  }
  if (!seen || n < 1) n = 1;
  if (y_max == y_min) {
    y_min -= 0.5;
    y_max += 0.5;
  }
  const double pad = 0.05 * (y_max - y_min);
  y_min -= pad;
  y_max += pad;

  const auto x_of = [&](std::size_t i) {
    if (n == 1) return (left + right) / 2.0;
    return left + (right - left) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  const auto y_of = [&](double v) {
    return bottom - (bottom - top) * (v - y_min) / (y_max - y_min);
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
         num(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(width / 2) + "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">" + title + "</text>\n";

  // axes
  out += "<line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) +
         "\" y2=\"" + num(bottom) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + num(left) + "\" y1=\"" + num(bottom) + "\" x2=\"" + num(right) +
         "\" y2=\"" + num(bottom) + "\" stroke=\"black\"/>\n";
  out += "<text x=\"" + num((left + right) / 2) + "\" y=\"" + num(height - 14) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
         x_label + "</text>\n";
  out += "<text x=\"18\" y=\"" + num((top + bottom) / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 18 " + num((top + bottom) / 2) + ")\">" + y_label +
         "</text>\n";

  for (int tick = 0; tick <= 4; ++tick) {
    const double v = y_min + (y_max - y_min) * tick / 4.0;
    const double y = y_of(v);
    out += "<line x1=\"" + num(left - 4) + "\" y1=\"" + num(y) + "\" x2=\"" + num(right) +
           "\" y2=\"" + num(y) + "\" stroke=\"#dddddd\"/>\n";
    out += "<text x=\"" + num(left - 8) + "\" y=\"" + num(y + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(v) +
           "</text>\n";
  }

  for (const Series& s : series) {
    if (s.y.empty()) continue;
    out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.y.size(); ++i) {
      if (i) out += ' ';
      out += num(x_of(i)) + "," + num(y_of(s.y[i]));
    }
    out += "\"/>\n";
  }

  double legend_y = top + 8;
  for (const Series& s : series) {
    out += "<line x1=\"" + num(right - 150) + "\" y1=\"" + num(legend_y) + "\" x2=\"" +
           num(right - 126) + "\" y2=\"" + num(legend_y) + "\" stroke=\"" + s.color +
           "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + num(right - 120) + "\" y=\"" + num(legend_y + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + s.label + "</text>\n";
    legend_y += 16;
  }

  out += "</svg>\n";
  return out;
}

}  // namespace cfa::svg
