#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "capzip/errors.hpp"
#include "capzip/render.hpp"
#include "capzip/search.hpp"
#include "test_support.hpp"

using namespace capzip;
using capzip::testing::standard_params;

namespace {

struct Box {
  double x0, y0, w, h;
};

Box view_box(const std::string& svg) {
  std::smatch m;
  const std::regex re(R"re(viewBox="([-0-9.]+) ([-0-9.]+) ([-0-9.]+) ([-0-9.]+)")re");
  if (!std::regex_search(svg, m, re)) throw std::runtime_error("no viewBox");
  return {std::stod(m[1]), std::stod(m[2]), std::stod(m[3]), std::stod(m[4])};
}

// Every coordinate pair in path data and every circle center.
std::vector<Point2> coordinates(const std::string& svg) {
  std::vector<Point2> out;
  const std::regex path(R"re( d="([^"]*)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), path); it != std::sregex_iterator();
       ++it) {
    const std::string d = (*it)[1];
    const std::regex num(R"(-?[0-9]+\.?[0-9]*)");
    std::vector<double> v;
    for (auto n = std::sregex_iterator(d.begin(), d.end(), num); n != std::sregex_iterator(); ++n) {
      v.push_back(std::stod(n->str()));
    }
    for (std::size_t i = 0; i + 1 < v.size(); i += 2) out.push_back({v[i], v[i + 1]});
  }
  const std::regex rect(R"re(x="([-0-9.]+)" y="([-0-9.]+)" width="([-0-9.]+)" height="([-0-9.]+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect); it != std::sregex_iterator();
       ++it) {
    const double x = std::stod((*it)[1]), y = std::stod((*it)[2]);
    out.push_back({x, y});
    out.push_back({x + std::stod((*it)[3]), y + std::stod((*it)[4])});
  }
  const std::regex circle(R"re(cx="([-0-9.]+)" cy="([-0-9.]+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), circle); it != std::sregex_iterator();
       ++it) {
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2])});
  }
  return out;
}

void expect_inside(const std::string& svg) {
  const Box b = view_box(svg);
  const auto pts = coordinates(svg);
  EXPECT_FALSE(pts.empty());
  for (const auto& p : pts) {
    EXPECT_GE(p.x, b.x0 - 1e-6);
    EXPECT_LE(p.x, b.x0 + b.w + 1e-6);
    EXPECT_GE(p.y, b.y0 - 1e-6);
    EXPECT_LE(p.y, b.y0 + b.h + 1e-6);
  }
}

}  // namespace

TEST(Render, DevelopmentIsDeterministic) {
  const Cap cap = build_cap(standard_params());
  const CutPath p = straight_path(cap.surface, cap.labels, lemma_path_type(1));
  RenderOptions opt;
  opt.stop_names = stop_names(p, cap.labels);
  const std::string a = render_development(develop_on_cap(cap, p), opt);
  const std::string b = render_development(develop_on_cap(cap, p), opt);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("<svg"), std::string::npos);
  EXPECT_NE(a.find("class=\"chain-r\""), std::string::npos);
  EXPECT_NE(a.find("class=\"chain-l\""), std::string::npos);
  // the shared root is labelled once, the other stops twice
  EXPECT_NE(a.find(">a1<"), std::string::npos);
  EXPECT_NE(a.find(">c'<"), std::string::npos);
  EXPECT_NE(a.find(">c''<"), std::string::npos);
  expect_inside(a);
}

TEST(Render, EmptyDevelopment) {
  const std::string svg = render_development(Development{});
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NO_THROW(view_box(svg));
}

TEST(Render, Projection) {
  const Cap cap = build_cap(standard_params());
  const std::string plain = render_projection(cap.surface, cap.labels);
  expect_inside(plain);
  const Development d =
      develop_on_cap(cap, straight_path(cap.surface, cap.labels, lemma_path_type(1)));
  const std::string with_path = render_projection(cap.surface, cap.labels, d.trace_points());
  EXPECT_GT(with_path.size(), plain.size());
  expect_inside(with_path);
}

TEST(Render, StopNames) {
  const Cap cap = build_cap(standard_params());
  const CutPath p = straight_path(cap.surface, cap.labels, lemma_path_type(4));
  const auto names = stop_names(p, cap.labels);
  ASSERT_EQ(names.size(), 5u);
  EXPECT_EQ(names[0], "a1");
  EXPECT_EQ(names[3], "c");
}

TEST(Render, SweepHeatmap) {
  SweepGrid g;
  g.omega_a = {deg2rad(1.0)};
  g.omega_c = {deg2rad(1.0)};
  g.epsilon = {0.05};
  SweepResult r = sweep(g);
  const std::string one = render_sweep(r);
  expect_inside(one);
  EXPECT_EQ(one.find("class=\"unzipping\""), std::string::npos);
  // an injected positive verdict gets its own class and a legend entry
  r.cells[0].entries[0].verdict.unzipping = true;
  r.unzippings = 1;
  const std::string mixed = render_sweep(r);
  EXPECT_NE(mixed.find("class=\"unzipping\""), std::string::npos);
  EXPECT_NE(mixed.find("legend"), std::string::npos);
  EXPECT_THROW(render_sweep(SweepResult{}), ParameterError);
}

TEST(Render, NamedFigures) {
  const auto names = figure_names();
  EXPECT_EQ(names.size(), 14u);
  for (const auto& n : names) {
    const std::string svg = render_figure(n, standard_params());
    EXPECT_EQ(svg, render_figure(n, standard_params())) << n;
    expect_inside(svg);
  }
  EXPECT_THROW(render_figure("nope", standard_params()), ParameterError);
}
