#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "septope/svgplot.hpp"

using namespace septope;

namespace {

std::vector<certified_root> synthetic_roots(std::initializer_list<std::pair<double, double>> pts) {
  std::vector<certified_root> roots;
  for (auto [re, im] : pts) {
    certified_root r{bigfloat::from_double(re, 128), bigfloat::from_double(im, 128),
                     bigfloat::from_double(1e-12, 64)};
    roots.push_back(std::move(r));
  }
  return roots;
}

size_t count_occurrences(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("scatter structure and guides") {
  auto roots = synthetic_roots({{-0.5, 0.3}, {-0.5, -0.3}, {2.0, 0.0}});
  std::string svg = root_scatter_svg(5, roots);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
  CHECK(count_occurrences(svg, "<circle") == 3);
  CHECK(svg.find("Re=-1/2") != std::string::npos);
  CHECK(svg.find(">-D<") != std::string::npos);
  CHECK(svg.find(">-D/2<") != std::string::npos);
  CHECK(svg.find(">D/2-1<") != std::string::npos);
  CHECK(svg.find(">D-1<") != std::string::npos);
  CHECK(svg.find(">D<") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find("smooth Fano") != std::string::npos);
  CHECK(root_scatter_svg(4, roots).find("Gorenstein Fano (not smooth)") != std::string::npos);
}

TEST_CASE("byte determinism for identical inputs") {
  auto roots = synthetic_roots({{-1.25, 0.75}, {-1.25, -0.75}, {0.25, 1.5}, {0.25, -1.5}});
  CHECK(root_scatter_svg(7, roots) == root_scatter_svg(7, roots));
}

TEST_CASE("golden file for the d=3 root scatter") {
  auto roots = all_roots(ehrhart_int_poly(3), 10);
  std::string svg = root_scatter_svg(3, roots);
  std::ifstream golden(std::string(SEPTOPE_TEST_DATA) + "/roots_d3.svg", std::ios::binary);
  REQUIRE(golden.good());
  std::stringstream buf;
  buf << golden.rdbuf();
  CHECK(svg == buf.str());
}

TEST_CASE("d=35 scatter places points beyond the D/2-1 guide") {
  auto roots = all_roots(ehrhart_int_poly(35), 10);
  std::string svg = root_scatter_svg(35, roots);
  // the guide label text shares the x coordinate of its dashed line
  size_t label = svg.find(">D/2-1<");
  REQUIRE(label != std::string::npos);
  size_t tag = svg.rfind("<text x=\"", label);
  REQUIRE(tag != std::string::npos);
  double guide_x = std::stod(svg.substr(tag + 9));
  double max_cx = 0;
  for (size_t pos = svg.find("<circle cx=\""); pos != std::string::npos;
       pos = svg.find("<circle cx=\"", pos + 1)) {
    max_cx = std::max(max_cx, std::stod(svg.substr(pos + 12)));
  }
  CHECK(max_cx > guide_x);
}

TEST_CASE("empty root list rejected") {
  CHECK_THROWS_AS(root_scatter_svg(3, {}), std::domain_error);
}
