#include <algorithm>
#include <cmath>
#include <numbers>

#include <doctest.h>

#include "darboux/linkage.hpp"
#include "support.hpp"

using namespace darboux;
using namespace darboux::testing;
using D = DQ<Rational>;
using Groups = std::vector<std::vector<int>>;

namespace {

DarbouxParams<R> generic() { return {R(3, 2), R(-1), R(2, 5), R(1, 3), R(0)}; }

Linkage fi_fiii(const DarbouxParams<R>& p) { return build_linkage(factor_fi(p), factor_fiii(p)); }
Linkage fi_fii(const DarbouxParams<R>& p) { return build_linkage(factor_fi(p), factor_fii(p)); }
Linkage fiv() {
  const auto f = factor_fiv();
  return build_linkage(f.fi_side, f.fiii_side);
}

}  // namespace

TEST_CASE("build_linkage") {
  const auto p = generic();
  SUBCASE("FI + FIII") {
    const auto l = fi_fiii(p);
    CHECK(l.joint_count() == 7);
    CHECK(l.closure_poly == RealPoly<R>::t2_plus_1() * darboux_c(p));
    CHECK_FALSE(l.degenerate);
    std::vector<std::string> names;
    for (const auto& j : l.joints) names.push_back(j.name);
    CHECK(names == std::vector<std::string>{"Q1", "Q2", "Q3", "Q'4", "Q'5", "Q'6", "Q'7"});
    CHECK(l.joints[3].factor_indices == std::vector<std::size_t>{3, 4});
  }
  SUBCASE("FI + FII") {
    const auto l = fi_fii(p);
    CHECK(l.joint_count() == 7);
    CHECK(l.joints[5].factor_indices == std::vector<std::size_t>{1, 2});
  }
  SUBCASE("self pairing") {
    const auto l = build_linkage(factor_fi(p), factor_fi(p));
    CHECK(l.degenerate);
    CHECK(l.joint_count() == 6);
  }
  SUBCASE("different motions") {
    try {
      (void)build_linkage(factor_fi(p), factor_fi(DarbouxParams<R>{1, 1, 1}));
      FAIL("expected ClosureFailure");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ClosureFailure);
    }
  }
  SUBCASE("non-rotational factor") {
    auto f = factor_fi(p);
    f.factors.push_back(MotionPoly<R>::linear(D::one() + D::eps_i()));
    try {
      (void)build_linkage(f, f);
      FAIL("expected NotRotational");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotRotational);
    }
  }
  SUBCASE("home axes are transported by the chain poses at t = 0") {
    const auto l = fi_fiii(p);
    const auto f = factor_fi(p);
    // Joint 2 sits after link 1, whose pose is Q1(0).
    const auto expected = transform_axis(f.factors[0](R(0)), axis_of(f.factors[1].root()));
    CHECK(l.joints[1].home == expected);
    CHECK(l.joints[0].home == axis_of(f.factors[0].root()));
  }
}

TEST_CASE("chain_poses") {
  const auto p = generic();
  const auto f = factor_fi(p);
  const auto poses = chain_poses<R>(f, R(0));
  CHECK(poses.front() == D::one());
  CHECK(projectively_equal(poses.back(), darboux_c(p)(R(0))));
  CHECK(projectively_equal(poses.back(), -D::k() + D::eps() * RDQ::real(p.c)));

  Gen g(41);
  const auto f3 = factor_fiii(p);
  for (int n = 0; n < 20; ++n) {
    const R t = g.rational();
    CHECK(projectively_equal(chain_poses<R>(f, t).back(), chain_poses<R>(f3, t).back()));
  }
  CHECK_FALSE(projectively_equal(D::one(), D::k()));
  CHECK(projectively_equal(D::k() * RDQ::real(R(-3)), D::k()));
}

TEST_CASE("chain_poses_at_angle matches t = tan(phi / 2)") {
  const auto f = factor_fiii(generic());
  for (double phi : {-2.5, -1.0, 0.0, 0.7, 2.9}) {
    const auto a = chain_poses_at_angle(f, phi).back();
    const auto b = chain_poses<double>(f, std::tan(phi / 2)).back();
    CHECK(projective_distance(a, b) < 1e-12);
  }
  // Finite at phi = pi, where t is infinite: the leading coefficient.
  CHECK(projective_distance(chain_poses_at_angle(f, std::numbers::pi).back(), D::one().cast<double>()) < 1e-12);
}

TEST_CASE("joint_angle") {
  const auto q = MotionPoly<R>::linear(D::k());
  CHECK(joint_angle(q, 0.0) == doctest::Approx(std::numbers::pi));
  CHECK(joint_angle(q, 1.0) == doctest::Approx(std::numbers::pi / 2));
  CHECK(joint_angle(q, 1e9) < 1e-8);
  CHECK(joint_angle(q, -1e9) > 2 * std::numbers::pi - 1e-8);
  try {
    (void)joint_angle(MotionPoly<R>::linear(D::one() + D::eps_i()), 0.0);
    FAIL("expected NotARotation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotARotation);
  }
  SUBCASE("strictly decreasing in t") {
    Gen g(42);
    for (int n = 0; n < 10; ++n) {
      const auto f = g.rotation_factor();
      double prev = joint_angle(f, -50.0);
      for (double t = -49.5; t <= 50.0; t += 0.5) {
        const double cur = joint_angle(f, t);
        CHECK(cur < prev);
        prev = cur;
      }
    }
  }
  SUBCASE("scaled rotation angle") {
    // t - (h0 + v): cot(theta / 2) = (t - h0) / |v|.
    const auto f = MotionPoly<R>::linear(RDQ::real(R(1)) + D::k() * RDQ::real(R(2)));
    CHECK(joint_angle(f, 3.0) == doctest::Approx(std::numbers::pi / 2));
  }
}

TEST_CASE("sample_configuration closes the loop") {
  for (const auto& l : {fi_fiii(generic()), fi_fii(generic()), fiv()}) {
    for (double t : {-7.0, -1.0, -0.2, 0.0, 0.4, 3.0, 40.0}) {
      const auto cs = sample_configuration(l, t);
      CHECK(cs.closure_residual < 1e-12);
      CHECK(cs.joint_angles.size() == 7);
      CHECK(cs.axes_now.size() == 7);
      CHECK(cs.poses_a.front() == DualQuaternion<double>::real(1.0));
      for (double a : cs.joint_angles) {
        CHECK(a >= 0.0);
        CHECK(a < 2 * std::numbers::pi);
      }
    }
  }
  SUBCASE("axes at t = 0 are the home axes") {
    const auto l = fi_fiii(generic());
    const auto axes = joint_axes_at(l, 0.0);
    for (std::size_t j = 0; j < 7; ++j) {
      const auto home = l.joints[j].home.cast<double>();
      CHECK(parallel(axes[j].direction, home.direction, 1e-12));
      const auto fa = axes[j].foot(), fh = home.foot();
      CHECK(std::abs(fa.x - fh.x) + std::abs(fa.y - fh.y) + std::abs(fa.z - fh.z) < 1e-12);
    }
  }
  SUBCASE("at-angle sampling") {
    const auto l = fiv();
    const auto cs = sample_configuration_at_angle(l, std::numbers::pi);
    CHECK(cs.closure_residual < 1e-12);
    const auto cs2 = sample_configuration_at_angle(l, 1.0);
    CHECK(cs2.t == doctest::Approx(std::tan(0.5)));
  }
}

TEST_CASE("mobility") {
  CHECK(mobility_at(fi_fiii(generic()), 1.0 / 3.0).dof == 1);
  CHECK(mobility_at(fiv(), 1.0 / 3.0).dof == 2);
  CHECK(mobility_at(fi_fii(generic()), 1.0 / 3.0).dof == 1);

  SUBCASE("open 3R chain with skew axes has rank 3") {
    const std::vector<AxisLine<double>> axes{AxisLine<double>::through({0, 0, 0}, {0, 0, 1}),
                                             AxisLine<double>::through({1, 0, 0}, {0, 1, 0}),
                                             AxisLine<double>::through({0, 2, 1}, {1, 0, 0})};
    const auto rep = screw_rank(axes);
    CHECK(rep.numeric_rank == 3);
    CHECK(rep.dof == 0);
    CHECK(rep.singular_values.size() == 3);
  }
  SUBCASE("four parallel axes span three screws") {
    std::vector<AxisLine<double>> axes;
    for (double x : {0.0, 1.0, 2.5, -1.0}) axes.push_back(AxisLine<double>::through({x, x * x, 0}, {0, 0, 1}));
    CHECK(screw_rank(axes).numeric_rank == 3);
  }
  SUBCASE("dof is constant along the branch") {
    const auto l = fi_fiii(generic());
    for (double t : {-4.1, -2.3, -0.9, 0.35, 1.7, 5.2}) CHECK(mobility_at(l, t).dof == 1);
  }
}

TEST_CASE("parallel_groups") {
  CHECK(parallel_groups(fiv()) == Groups{{1, 2, 6, 7}, {3, 4, 5}});
  CHECK(parallel_groups(fi_fii(generic())) == Groups{{1, 2}, {3, 4}, {5, 6, 7}});
  CHECK(parallel_groups(fi_fiii(generic())) == Groups{{1, 2}, {3, 4, 5}, {6, 7}});

  SUBCASE("groups persist along the motion") {
    const auto l = fi_fiii(generic());
    for (double t : {-3.0, 0.5, 2.0}) {
      const auto axes = joint_axes_at(l, t);
      CHECK(parallel_groups<double>(axes) == parallel_groups(l));
    }
  }
  SUBCASE("invariant under a change of the fixed frame") {
    Gen g(43);
    const auto l = fiv();
    for (int n = 0; n < 5; ++n) {
      const auto frame = g.rotation();
      std::vector<AxisLine<R>> moved;
      for (const auto& j : l.joints) moved.push_back(transform_axis(frame, j.home));
      CHECK(parallel_groups<R>(moved) == parallel_groups(l));
    }
  }
}

TEST_CASE("substructure_report") {
  const auto rep = substructure_report(fiv());
  REQUIRE(rep.four_bar.has_value());
  CHECK(*rep.four_bar == std::vector<int>{6, 7, 1, 2});
  REQUIRE(rep.sarrus.size() == 2);
  std::vector<int> locked;
  for (const auto& s : rep.sarrus) {
    REQUIRE(s.locked_joint.has_value());
    locked.push_back(*s.locked_joint);
    CHECK(s.first.size() == 3);
    CHECK(s.second.size() == 3);
  }
  std::sort(locked.begin(), locked.end());
  CHECK(locked == std::vector<int>{2, 6});

  CHECK_FALSE(substructure_report(fi_fiii(generic())).four_bar.has_value());
  CHECK(substructure_report(fi_fiii(generic())).sarrus.empty());
  CHECK(substructure_report(fi_fii(generic())).empty());

  const Groups skew{{1}, {2}, {3}, {4}, {5}, {6}, {7}};
  CHECK(substructure_report(skew, 7).empty());
  const Groups planar{{1, 2, 3, 4}};
  CHECK(substructure_report(planar, 4).four_bar == std::vector<int>{1, 2, 3, 4});
  // Classic Sarrus 6R: two triples, nothing locked.
  const Groups sarrus{{1, 2, 3}, {4, 5, 6}};
  const auto s6 = substructure_report(sarrus, 6);
  REQUIRE(s6.sarrus.size() == 1);
  CHECK_FALSE(s6.sarrus[0].locked_joint.has_value());
}

TEST_CASE("trace_point") {
  const auto l = fi_fiii(generic());
  const auto ts = linspace(-5, 5, 20);
  Gen g(44);
  for (int n = 0; n < 10; ++n) {
    const Vec3<double> pt{g.uniform(-2, 2), g.uniform(-2, 2), g.uniform(-2, 2)};
    const auto rep = trace_point(l, pt, ts);
    CHECK(rep.plane_residual < 1e-9 * rep.diameter);
    CHECK(rep.conic_class == ConicClass::Ellipse);
    CHECK(rep.semi_axes.first >= rep.semi_axes.second);
  }
  SUBCASE("point on a rotation axis stays fixed") {
    const auto q = MotionPoly<R>::linear(D::k() - D::eps_j()).cast<double>();
    const auto rep = trace_point(q, {-1.0, 0.0, 5.0}, ts);
    CHECK(rep.conic_class == ConicClass::Degenerate);
    CHECK(rep.diameter < 1e-12);
  }
  SUBCASE("single rotation gives a circle") {
    const auto q = MotionPoly<R>::linear(D::k() - D::eps_j()).cast<double>();
    const auto rep = trace_point(q, {2.0, 1.0, 5.0}, ts);
    CHECK(rep.conic_class == ConicClass::Circle);
    CHECK(rep.semi_axes.first == doctest::Approx(std::sqrt(10.0)));
  }
  SUBCASE("too few samples") {
    try {
      (void)trace_point(l, {0, 0, 0}, linspace(0, 1, 5));
      FAIL("expected InsufficientSamples");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InsufficientSamples);
    }
  }
  SUBCASE("non-planar samples are degenerate") {
    std::vector<Vec3<double>> helix;
    for (int k = 0; k < 12; ++k) helix.push_back({std::cos(k * 0.5), std::sin(k * 0.5), 0.3 * k});
    CHECK(classify_orbit({0, 0, 0}, helix).conic_class == ConicClass::Degenerate);
  }
  SUBCASE("collinear samples are degenerate") {
    std::vector<Vec3<double>> line;
    for (int k = 0; k < 12; ++k) line.push_back({1.0 * k, 2.0 * k, 0});
    CHECK(classify_orbit({0, 0, 0}, line).conic_class == ConicClass::Degenerate);
  }
}
