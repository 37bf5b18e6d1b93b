#include <regex>

#include <doctest.h>

#include "darboux/serialize.hpp"
#include "darboux/svg_plot.hpp"
#include "support.hpp"

using namespace darboux;
using namespace darboux::testing;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

Linkage fiv() {
  const auto f = factor_fiv();
  return build_linkage(f.fi_side, f.fiii_side);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/6") == R(-1, 2));
  CHECK(parse_rational("0.25") == R(1, 4));
  CHECK(parse_rational("-1.5") == R(-3, 2));
  CHECK(to_string(parse_rational("-3/6")) == "-1/2");
  CHECK(to_string(R(4)) == "4");
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "1.5/2", "-"}) {
    CHECK_THROWS_AS((void)parse_rational(bad), Error);
  }
}

TEST_CASE("json round trips") {
  Gen g(51);
  for (int n = 0; n < 10; ++n) {
    const auto h = g.dual_quaternion();
    CHECK(io::dual_quaternion_from_json(io::to_json(h)) == h);
    const auto c = g.random_poly(3);
    CHECK(io::motion_poly_from_json(io::to_json(c)) == c);
  }
  const auto p = g.params_xy();
  for (const auto& f : {factor_fi(p), factor_fii(p), factor_fiii(p), factor_fiv().fiii_side}) {
    const auto j = io::to_json(f);
    const auto back = io::factorization_from_json(j);
    CHECK(back.factors == f.factors);
    CHECK(back.cofactor == f.cofactor);
    CHECK(back.label == f.label);
    CHECK(back.names == f.names);
    CHECK(io::to_json(back) == j);
  }
  const auto j = io::to_json(factor_fii(p));
  CHECK(j["identical_adjacent"] == io::json::array({io::json::array({1, 2})}));
  CHECK(j["params"]["a"].is_string());
  CHECK_THROWS_AS((void)io::factorization_from_json(io::json{{"label", "FI"}}), Error);
  CHECK_THROWS_AS((void)io::dual_quaternion_from_json(io::json::array({"1", "2"})), Error);
}

TEST_CASE("linkage json") {
  const auto l = fiv();
  const auto j = io::to_json(l);
  CHECK(j["joint_count"] == 7);
  CHECK(j["joints"].size() == 7);
  CHECK(j["joints"][0]["chain"] == "a");
  CHECK(j["joints"][6]["chain"] == "b");
  CHECK(j["parallel_groups"] == io::json::parse("[[1,2,6,7],[3,4,5]]"));
  CHECK(j["substructure"]["four_bar"] == io::json::parse("[6,7,1,2]"));
  const std::string sha = j["closure_certificate"]["sha256"];
  CHECK(sha.size() == 64);
  CHECK(std::regex_match(sha, std::regex("[0-9a-f]{64}")));
  CHECK(sha == io::closure_certificate(l.closure_poly));
  CHECK(sha != io::closure_certificate(darboux_c(fiv_params())));
  // The joint axes satisfy the Plucker condition exactly.
  for (const auto& joint : j["joints"]) {
    const auto ax = io::axis_from_json(joint["axis"]);
    CHECK(dot(ax.direction, ax.moment) == 0);
  }
}

TEST_CASE("config csv") {
  const auto l = fiv();
  CHECK(io::config_csv_header(7) ==
        "t,theta1,theta2,theta3,theta4,theta5,theta6,theta7,h0,h1,h2,h3,h4,h5,h6,h7,closure_residual");
  const auto row = io::config_csv_row(sample_configuration(l, 0.5));
  CHECK(count(row, ",") == 16);
}

TEST_CASE("svg plot") {
  CHECK(plot_angles(1) == std::vector<double>{0.0});
  const auto nine = plot_angles(9);
  CHECK(nine[4] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(nine.front() > -std::numbers::pi);

  const auto l = fiv();
  PlotOptions opt;
  opt.frames = 11;
  const auto svg = plot_linkage_svg(l, opt);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<g class=\"frame\"") == 11);
  // Three axes parallel to k render as points in every frame, the other four as segments.
  CHECK(count(svg, "<circle") == 33);
  CHECK(count(svg, "<line class=\"axis\"") == 44);

  opt.frames = 1;
  const auto one = plot_linkage_svg(l, opt);
  CHECK(count(one, "<g class=\"frame\"") == 1);
  CHECK(one.find("data-t=\"0\"") != std::string::npos);

  opt.view = ViewAxis::X;
  CHECK(count(plot_linkage_svg(l, opt), "<circle") == 0);
  CHECK(parse_view("y") == ViewAxis::Y);
  CHECK_THROWS_AS((void)parse_view("w"), Error);
}
