// darboux7r: factor, verify, simulate and plot the Darboux 7R linkages.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "darboux/serialize.hpp"
#include "darboux/svg_plot.hpp"

namespace {

using namespace darboux;
using io::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Flags {
  std::string a = "1", b = "2", c = "1";
  std::optional<std::string> x, y;
  std::string type;
  std::string out;
  std::string format;
  std::size_t samples = 0;
  std::optional<double> t_min, t_max, tol;
  std::vector<std::string> points;
  std::size_t random_points = 0;
  unsigned seed = 1;
  std::string view = "z";
  std::string from_file;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DarbouxParams<Rational> params_of(const Flags& f) {
  DarbouxParams<Rational> p{parse_rational(f.a), parse_rational(f.b), parse_rational(f.c), std::nullopt,
                            std::nullopt};
  if (f.x) p.x = parse_rational(*f.x);
  if (f.y) p.y = parse_rational(*f.y);
  return p;
}

// The chain(s) selected by --type. Two chains mean a closed linkage.
std::vector<Factorization<Rational>> chains_of(const Flags& f, const std::string& type) {
  if (type == "FIV") {
    auto fiv = factor_fiv();
    return {fiv.fi_side, fiv.fiii_side};
  }
  const auto p = params_of(f);
  if (type == "FI+FII") return {factor_fi(p), factor_fii(p)};
  if (type == "FI+FIII") return {factor_fi(p), factor_fiii(p)};
  return {make_factorization(parse_label(type), p)};
}

Linkage linkage_of(const Flags& f) {
  const std::string type = f.type.empty() ? "FI+FIII" : f.type;
  const auto chains = chains_of(f, type);
  if (chains.size() != 2) throw UsageError("--type " + type + " is a single chain; use FI+FII, FI+FIII or FIV");
  return build_linkage(chains[0], chains[1]);
}

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty() || f.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(f.out);
  if (!os) throw UsageError("cannot write " + f.out);
  os << text;
}

std::vector<double> t_grid(const Flags& f, std::size_t default_samples, double lo, double hi) {
  const std::size_t n = f.samples ? f.samples : default_samples;
  return linspace(f.t_min.value_or(lo), f.t_max.value_or(hi), n);
}

Vec3<double> parse_point(const std::string& text) {
  std::stringstream ss(text);
  std::vector<double> v;
  for (std::string item; std::getline(ss, item, ',');) v.push_back(scalar_cast<double>(parse_rational(item)));
  if (v.size() != 3) throw UsageError("--point expects x,y,z");
  return {v[0], v[1], v[2]};
}

// Coefficient-wise residual product - cofactor * C.
struct Residual {
  MotionPoly<Rational> poly;
  bool zero() const { return poly.is_zero(); }
};

Residual residual_of(const Factorization<Rational>& fac) {
  return {fac.product() - darboux_c(fac.params) * fac.cofactor};
}

int report_verification(const std::vector<Factorization<Rational>>& chains, const Flags& f) {
  bool ok = true;
  json report = json::array();
  for (const auto& fac : chains) {
    const Residual r = residual_of(fac);
    ok = ok && r.zero();
    report.push_back({{"label", std::string(to_string(fac.label))},
                      {"names", fac.names},
                      {"residual", io::to_json(r.poly)},
                      {"pass", r.zero()}});
  }
  std::ostringstream os;
  os << (ok ? "PASS" : "FAIL") << '\n' << report.dump(2) << '\n';
  emit(f, os.str());
  return ok ? kOk : kVerifyFailed;
}

int cmd_factor(const Flags& f) {
  const std::string type = f.type.empty() ? "FI" : f.type;
  const auto chains = chains_of(f, type);
  json out;
  if (chains.size() == 1) {
    out = io::to_json(chains.front());
  } else {
    out = {{"label", type}, {"chains", json::array()}};
    for (const auto& c : chains) out["chains"].push_back(io::to_json(c));
  }
  emit(f, out.dump(2) + "\n");
  return kOk;
}

int cmd_verify(const Flags& f) {
  std::vector<Factorization<Rational>> chains;
  if (!f.from_file.empty()) {
    std::ifstream is(f.from_file);
    if (!is) throw UsageError("cannot read " + f.from_file);
    json j;
    try {
      j = json::parse(is);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::InvalidInput, std::string("not JSON: ") + e.what());
    }
    if (j.contains("chains")) {
      for (const auto& c : j["chains"]) chains.push_back(io::factorization_from_json(c));
    } else {
      chains.push_back(io::factorization_from_json(j));
    }
  } else {
    chains = chains_of(f, f.type.empty() ? "FI" : f.type);
  }
  return report_verification(chains, f);
}

int cmd_linkage(const Flags& f) {
  emit(f, io::to_json(linkage_of(f)).dump(2) + "\n");
  return kOk;
}

int cmd_simulate(const Flags& f) {
  const Linkage l = linkage_of(f);
  const double tol = f.tol.value_or(1e-12);
  bool closed = true;
  std::vector<ConfigSample> rows;
  for (double t : t_grid(f, 9, -5.0, 5.0)) {
    rows.push_back(sample_configuration(l, t));
    closed = closed && rows.back().closure_residual < tol;
  }
  std::ostringstream os;
  if (f.format == "json") {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"t", r.t},
                     {"joint_angles", r.joint_angles},
                     {"coupler", io::to_json(r.coupler)},
                     {"closure_residual", r.closure_residual}});
    }
    os << out.dump(2) << '\n';
  } else {
    os << io::config_csv_header(l.joint_count()) << '\n';
    for (const auto& r : rows) os << io::config_csv_row(r) << '\n';
  }
  emit(f, os.str());
  if (!closed) std::cerr << "closure residual above " << tol << '\n';
  return closed ? kOk : kVerifyFailed;
}

int cmd_trace(const Flags& f) {
  std::vector<Vec3<double>> points;
  for (const auto& p : f.points) points.push_back(parse_point(p));
  std::mt19937_64 rng(f.seed);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (std::size_t i = 0; i < f.random_points; ++i) points.push_back({unif(rng), unif(rng), unif(rng)});
  if (points.empty()) points.push_back({0.0, 0.0, 0.0});

  MotionPoly<double> motion;
  if (f.type == "FI+FII" || f.type == "FI+FIII" || f.type == "FIV") {
    motion = linkage_of(f).chain_a.product().cast<double>();
  } else {
    motion = darboux_c(params_of(f)).cast<double>();
  }
  TrajectoryTolerances tol;
  if (f.tol) tol.plane_rel = *f.tol;
  const auto ts = t_grid(f, 20, -5.0, 5.0);
  json out = json::array();
  for (const auto& p : points) out.push_back(io::to_json(trace_point(motion, p, ts, tol)));
  emit(f, out.dump(2) + "\n");
  return kOk;
}

int cmd_mobility(const Flags& f) {
  const Linkage l = linkage_of(f);
  const double tol = f.tol.value_or(1e-8);
  std::ostringstream os;
  json out = json::array();
  if (f.format != "json") os << "t,rank,dof,smallest_nonzero_sv,largest_null_sv\n";
  os.precision(17);
  for (double t : t_grid(f, 10, -4.5, 4.5)) {
    const auto rep = mobility_at(l, t, tol);
    if (f.format == "json") {
      out.push_back(io::to_json(rep));
      continue;
    }
    const auto& sv = rep.singular_values;
    const double kept = rep.numeric_rank > 0 ? sv[static_cast<std::size_t>(rep.numeric_rank) - 1] : 0.0;
    const double dropped =
        static_cast<std::size_t>(rep.numeric_rank) < sv.size() ? sv[static_cast<std::size_t>(rep.numeric_rank)] : 0.0;
    os << t << ',' << rep.numeric_rank << ',' << rep.dof << ',' << kept << ',' << dropped << '\n';
  }
  if (f.format == "json") os << out.dump(2) << '\n';
  emit(f, os.str());
  return kOk;
}

int cmd_plot(const Flags& f) {
  PlotOptions opt;
  opt.view = parse_view(f.view);
  opt.frames = f.samples ? f.samples : 9;
  emit(f, plot_linkage_svg(linkage_of(f), opt));
  return kOk;
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--a", f.a, "Darboux constant a (p/q), a != 0");
  cmd->add_option("--b", f.b, "Darboux constant b (p/q)");
  cmd->add_option("--c", f.c, "Darboux constant c (p/q)");
  cmd->add_option("--x", f.x, "free FIII parameter x (p/q)");
  cmd->add_option("--y", f.y, "free FIII parameter y (p/q)");
  cmd->add_option("--type", f.type, "FI, FII, FIII, FIV, FI+FII or FI+FIII")
      ->check(CLI::IsMember({"FI", "FII", "FIII", "FIV", "FI+FII", "FI+FIII"}));
  cmd->add_option("--out", f.out, "output path (default stdout)");
  cmd->add_option("--tol", f.tol, "tolerance");
}

void add_sampling(CLI::App* cmd, Flags& f) {
  cmd->add_option("--samples", f.samples, "number of samples")->check(CLI::PositiveNumber);
  cmd->add_option("--t-min", f.t_min, "first parameter value");
  cmd->add_option("--t-max", f.t_max, "last parameter value");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Darboux motion factorizations and 7R linkages"};
  app.require_subcommand(1);
  Flags f;

  auto* factor = app.add_subcommand("factor", "print a factorization as JSON");
  add_common(factor, f);

  auto* verify = app.add_subcommand("verify", "check a factorization exactly");
  add_common(verify, f);
  verify->add_option("--from-file", f.from_file, "factorization JSON written by 'factor'");

  auto* linkage = app.add_subcommand("linkage", "assemble the closed 7R linkage");
  add_common(linkage, f);

  auto* simulate = app.add_subcommand("simulate", "joint angles and coupler pose along the motion");
  add_common(simulate, f);
  add_sampling(simulate, f);
  simulate->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* trace = app.add_subcommand("trace", "classify point trajectories");
  add_common(trace, f);
  add_sampling(trace, f);
  trace->add_option("--point", f.points, "moving point x,y,z (repeatable)");
  trace->add_option("--random-points", f.random_points, "additional random points");
  trace->add_option("--seed", f.seed, "seed for --random-points");

  auto* mobility = app.add_subcommand("mobility", "instantaneous mobility from the joint screws");
  add_common(mobility, f);
  add_sampling(mobility, f);
  mobility->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* plot = app.add_subcommand("plot", "SVG grid of configurations");
  add_common(plot, f);
  plot->add_option("--samples", f.samples, "number of frames")->check(CLI::PositiveNumber);
  plot->add_option("--view", f.view, "projection direction x, y or z")->check(CLI::IsMember({"x", "y", "z"}));
  plot->add_option("--format", f.format, "svg")->check(CLI::IsMember({"svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*factor) return cmd_factor(f);
    if (*verify) return cmd_verify(f);
    if (*linkage) return cmd_linkage(f);
    if (*simulate) return cmd_simulate(f);
    if (*trace) return cmd_trace(f);
    if (*mobility) return cmd_mobility(f);
    if (*plot) return cmd_plot(f);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ClosureFailure ? kVerifyFailed : kUsage;
  }
  return kUsage;
}
