#include "darboux/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace darboux {

ViewAxis parse_view(std::string_view text) {
  if (text == "x" || text == "X") return ViewAxis::X;
  if (text == "y" || text == "Y") return ViewAxis::Y;
  if (text == "z" || text == "Z" || text == "k") return ViewAxis::Z;
  throw Error(ErrorCode::InvalidInput, "view must be one of x, y, z");
}

std::vector<double> plot_angles(std::size_t frames) {
  std::vector<double> out;
  const double n = static_cast<double>(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    out.push_back(-std::numbers::pi + std::numbers::pi / n + 2.0 * std::numbers::pi * static_cast<double>(i) / n);
  }
  return out;
}

namespace {

using V = Vec3<double>;

struct P2 {
  double u = 0.0, v = 0.0;
};

P2 project(const V& p, ViewAxis view) {
  switch (view) {
    case ViewAxis::X: return {p.y, p.z};
    case ViewAxis::Y: return {p.z, p.x};
    case ViewAxis::Z: return {p.x, p.y};
  }
  return {p.x, p.y};
}

V view_dir(ViewAxis view) {
  switch (view) {
    case ViewAxis::X: return {1, 0, 0};
    case ViewAxis::Y: return {0, 1, 0};
    case ViewAxis::Z: return {0, 0, 1};
  }
  return {0, 0, 1};
}

V unit(const V& v) { return v * (1.0 / std::sqrt(dot(v, v))); }

// Closest points of two lines; for parallel lines the foot of `ref` on a and its projection on b.
std::pair<V, V> common_perpendicular(const AxisLine<double>& a, const AxisLine<double>& b, const V& ref) {
  const V da = unit(a.direction), db = unit(b.direction);
  const V pa = a.foot(), pb = b.foot();
  const V n = cross(da, db);
  if (dot(n, n) < 1e-18) {
    const V qa = pa + da * dot(ref - pa, da);
    return {qa, pb + db * dot(qa - pb, db)};
  }
  const V r = pb - pa;
  const double nn = dot(n, n);
  const double sa = dot(cross(r, db), n) / nn;
  const double sb = dot(cross(r, da), n) / nn;
  return {pa + da * sa, pb + db * sb};
}

struct FrameGeometry {
  double t = 0.0;
  std::vector<AxisLine<double>> axes;
  std::vector<std::pair<V, V>> links;  // link i joins axis i and axis i+1
};

FrameGeometry frame_geometry(const Linkage& l, double phi) {
  FrameGeometry g;
  const auto cs = sample_configuration_at_angle(l, phi);
  g.t = cs.t;
  g.axes = cs.axes_now;
  const std::size_t n = g.axes.size();
  V ref{0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    auto link = common_perpendicular(g.axes[i], g.axes[(i + 1) % n], ref);
    ref = link.second;
    g.links.push_back(link);
  }
  return g;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << (std::abs(x) < 1e-12 ? 0.0 : x);
  return os.str();
}

}  // namespace

std::string plot_linkage_svg(const Linkage& l, const PlotOptions& opt) {
  if (opt.frames == 0) throw Error(ErrorCode::InvalidInput, "at least one frame is required");
  std::vector<FrameGeometry> frames;
  for (double phi : plot_angles(opt.frames)) frames.push_back(frame_geometry(l, phi));

  const V vd = view_dir(opt.view);
  const double half = opt.axis_length / 2.0;
  double umin = std::numeric_limits<double>::max(), vmin = umin;
  double umax = std::numeric_limits<double>::lowest(), vmax = umax;
  auto grow = [&](const V& p) {
    const P2 q = project(p, opt.view);
    umin = std::min(umin, q.u);
    umax = std::max(umax, q.u);
    vmin = std::min(vmin, q.v);
    vmax = std::max(vmax, q.v);
  };
  for (const auto& f : frames) {
    for (const auto& [a, b] : f.links) {
      grow(a);
      grow(b);
    }
  }
  const double span = std::max({umax - umin, vmax - vmin, 1e-6}) + 2.0 * half;
  const double margin = 24.0;
  const double scale = (opt.cell - 2.0 * margin) / span;
  const double uc = (umin + umax) / 2.0, vc = (vmin + vmax) / 2.0;

  const std::size_t cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(frames.size()))));
  const std::size_t rows = (frames.size() + cols - 1) / cols;
  const double width = opt.cell * static_cast<double>(cols);
  const double height = opt.cell * static_cast<double>(rows);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  os << "<style>.link{fill:none;stroke:#333;stroke-width:1.5}.axis{stroke:#c33;stroke-width:1.2}"
        ".pt{fill:#c33}.lbl{font:10px sans-serif;fill:#126}.cap{font:11px sans-serif;fill:#000}</style>\n";

  for (std::size_t fi = 0; fi < frames.size(); ++fi) {
    const auto& f = frames[fi];
    const double ox = opt.cell * static_cast<double>(fi % cols);
    const double oy = opt.cell * static_cast<double>(fi / cols);
    auto to_px = [&](const V& p) {
      const P2 q = project(p, opt.view);
      return P2{ox + opt.cell / 2.0 + (q.u - uc) * scale, oy + opt.cell / 2.0 - (q.v - vc) * scale};
    };

    os << "<g class=\"frame\" data-t=\"" << fmt(f.t) << "\">\n";
    os << "<rect x=\"" << fmt(ox) << "\" y=\"" << fmt(oy) << "\" width=\"" << fmt(opt.cell) << "\" height=\""
       << fmt(opt.cell) << "\" fill=\"none\" stroke=\"#ddd\"/>\n";
    os << "<text class=\"cap\" x=\"" << fmt(ox + 6) << "\" y=\"" << fmt(oy + 14) << "\">t = " << fmt(f.t)
       << "</text>\n";

    // Links as one closed polyline: along each axis from the incoming to the outgoing foot.
    const std::size_t n = f.axes.size();
    os << "<polyline class=\"link\" points=\"";
    for (std::size_t i = 0; i <= n; ++i) {
      const auto& link = f.links[i % n];
      const P2 a = to_px(link.first), b = to_px(link.second);
      os << fmt(a.u) << ',' << fmt(a.v) << ' ' << fmt(b.u) << ',' << fmt(b.v) << ' ';
    }
    os << "\"/>\n";

    for (std::size_t j = 0; j < n; ++j) {
      const auto& ax = f.axes[j];
      const V d = unit(ax.direction);
      const V in = f.links[(j + n - 1) % n].second;
      const V out = f.links[j].first;
      const V mid = (in + out) * 0.5;
      const V along = d - vd * dot(d, vd);
      P2 at = to_px(mid);
      if (dot(along, along) < 1e-12) {
        os << "<circle class=\"pt\" cx=\"" << fmt(at.u) << "\" cy=\"" << fmt(at.v) << "\" r=\"3\"/>\n";
      } else {
        const P2 a = to_px(mid - d * half), b = to_px(mid + d * half);
        os << "<line class=\"axis\" x1=\"" << fmt(a.u) << "\" y1=\"" << fmt(a.v) << "\" x2=\"" << fmt(b.u)
           << "\" y2=\"" << fmt(b.v) << "\"/>\n";
      }
      os << "<text class=\"lbl\" x=\"" << fmt(at.u + 4) << "\" y=\"" << fmt(at.v - 4) << "\">" << j + 1
         << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace darboux
