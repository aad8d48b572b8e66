#include "septope/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace septope {

namespace {

constexpr double kWidth = 800, kHeight = 600;
constexpr double kLeft = 60, kRight = 780, kTop = 40, kBottom = 550;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void line(std::string& out, double x1, double y1, double x2, double y2, const char* style) {
  out += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) + "\" y2=\"" +
         fmt(y2) + "\" " + style + "/>\n";
}

void text(std::string& out, double x, double y, const char* anchor, const std::string& s) {
  out += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"" +
         anchor + "\">" + s + "</text>\n";
}

}  // namespace

std::string root_scatter_svg(int d, const std::vector<certified_root>& roots) {
  if (roots.empty()) throw std::domain_error("root_scatter_svg: empty root list");
  int D = d - 1;

  double min_re = 0, max_re = 0, max_im = 0;
  bool first = true;
  for (const auto& r : roots) {
    double re = r.re.to_double();
    double im = std::fabs(r.im.to_double());
    if (first || re < min_re) min_re = re;
    if (first || re > max_re) max_re = re;
    if (first || im > max_im) max_im = im;
    first = false;
  }
  double xmin = std::min(static_cast<double>(-D) - 2.0, std::floor(min_re) - 1.0);
  double xmax = std::max(static_cast<double>(D) + 2.0, std::ceil(max_re) + 1.0);
  double ymax = std::max(1.0, 1.1 * max_im);

  auto sx = [&](double v) { return kLeft + (v - xmin) / (xmax - xmin) * (kRight - kLeft); };
  auto sy = [&](double v) { return kTop + (ymax - v) / (2.0 * ymax) * (kBottom - kTop); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" + fmt(kRight - kLeft) +
         "\" height=\"" + fmt(kBottom - kTop) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  std::string title = "Ehrhart roots of Conv(A_" + std::to_string(d) + "), dim " + std::to_string(D) +
                      (d % 2 == 1 ? ", smooth Fano" : ", Gorenstein Fano (not smooth)");
  text(out, (kLeft + kRight) / 2, 24, "middle", title);
  text(out, (kLeft + kRight) / 2, 580, "middle", "Re");
  text(out, 20, (kTop + kBottom) / 2, "middle", "Im");

  // real axis
  line(out, kLeft, sy(0.0), kRight, sy(0.0), "stroke=\"#888888\" stroke-width=\"0.5\"");

  // symmetry line and conjecture guides
  struct guide {
    double x;
    const char* label;
    bool dashed;
  };
  const guide guides[] = {
      {-0.5, "Re=-1/2", false},
      {static_cast<double>(-D), "-D", true},
      {-static_cast<double>(D) / 2.0, "-D/2", true},
      {static_cast<double>(D) / 2.0 - 1.0, "D/2-1", true},
      {static_cast<double>(D) - 1.0, "D-1", true},
      {static_cast<double>(D), "D", true},
  };
  for (const auto& g : guides) {
    if (g.x < xmin || g.x > xmax) continue;
    std::string style = g.dashed
                            ? "stroke=\"#cc4444\" stroke-width=\"1\" stroke-dasharray=\"6,4\""
                            : "stroke=\"#4444cc\" stroke-width=\"1\"";
    line(out, sx(g.x), kTop, sx(g.x), kBottom, style.c_str());
    text(out, sx(g.x), kTop - 6, "middle", g.label);
  }

  // x tick labels at the corners and zero
  text(out, sx(xmin), kBottom + 16, "middle", fmt(xmin));
  text(out, sx(0.0), kBottom + 16, "middle", "0");
  text(out, sx(xmax), kBottom + 16, "middle", fmt(xmax));
  text(out, kLeft - 6, sy(ymax) + 4, "end", fmt(ymax));
  text(out, kLeft - 6, sy(-ymax) + 4, "end", fmt(-ymax));

  for (const auto& r : roots) {
    out += "<circle cx=\"" + fmt(sx(r.re.to_double())) + "\" cy=\"" + fmt(sy(r.im.to_double())) +
           "\" r=\"2.5\" fill=\"#222266\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace septope
