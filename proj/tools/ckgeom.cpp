// Command line front end: evaluate closed forms, sample curves and
// embeddings to JSON/CSV, draw SVG diagrams, and run the verification
// suites.  Exit codes: 0 ok, 1 verification failure, 2 usage, 3 I/O.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ckgeom/compact.hpp"
#include "ckgeom/conformal.hpp"
#include "ckgeom/cycles.hpp"
#include "ckgeom/motion.hpp"
#include "ckgeom/space.hpp"
#include "ckgeom/trig.hpp"
#include "ckgeom/verify.hpp"
#include "json.hpp"

using namespace ckgeom;
using nlohmann::json;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Common space/chart flags shared by several subcommands.
struct SpaceOpts {
  std::string space;
  std::optional<double> k1, k2;
  std::string chart = "parallel1";
  double ell = 1.0;

  void attach(CLI::App* cmd, bool with_chart = true) {
    cmd->add_option("--space", space,
                    "space name (S2, E2, H2, NH+, G, NH-, AdS, M, dS)");
    cmd->add_option("--k1", k1, "first curvature coefficient");
    cmd->add_option("--k2", k2, "second (signature) coefficient");
    cmd->add_option("--ell", ell, "compactification scale (default 1)");
    if (with_chart)
      cmd->add_option("--chart", chart, "parallel1 | parallel2 | polar");
  }

  KappaPair resolve() const {
    if (!space.empty()) return the_nine(space);
    if (k1 && k2) return KappaPair(*k1, *k2);
    throw DomainError("specify --space or both --k1 and --k2");
  }

  Chart resolve_chart() const {
    if (chart == "parallel1") return Chart::ParallelI;
    if (chart == "parallel2") return Chart::ParallelII;
    if (chart == "polar") return Chart::Polar;
    throw DomainError("unknown chart: " + chart);
  }
};

void write_output(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw IoError("cannot open output file: " + out);
  f << text;
  if (!f) throw IoError("write failed: " + out);
}

std::string render_table(const json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  if (format != "csv") throw DomainError("unknown format: " + format);
  std::ostringstream os;
  bool first = true;
  for (const auto& c : doc["columns"]) {
    os << (first ? "" : ",") << c.get<std::string>();
    first = false;
  }
  os << "\n";
  for (const auto& row : doc["rows"]) {
    first = true;
    for (const auto& v : row) {
      os << (first ? "" : ",");
      if (v.is_number()) os << fmt17(v.get<double>());
      else os << v.dump();
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

json table_header(const KappaPair& kp, double ell, const std::string& chart) {
  json doc;
  doc["schema"] = "ckgeom.v1";
  doc["space"] = {{"k1", kp.k1}, {"k2", kp.k2}};
  doc["ell"] = ell;
  doc["chart"] = chart;
  return doc;
}

// ---------------------------------------------------------------------------
// eval

int run_eval(const std::string& what, const SpaceOpts& so, double kappa,
             double x, double a, double k1l2, const std::vector<double>& pt,
             const std::vector<double>& qt, double rho) {
  if (what == "ck" || what == "sk" || what == "tk" || what == "vk" ||
      what == "lambda") {
    double v;
    if (what == "ck") v = ck(kappa, x);
    else if (what == "sk") v = sk(kappa, x);
    else if (what == "tk") v = tk(kappa, x);
    else if (what == "vk") v = vk(kappa, x);
    else v = lambda_fn(kappa, x);
    std::cout << what << "(" << fmt17(kappa) << ", " << fmt17(x)
              << ") = " << fmt17(v) << "\n";
    return 0;
  }
  if (what == "lambda-ext") {
    const auto [v, b] = lambda_extended(kappa, x);
    std::cout << "lambda(" << fmt17(kappa) << ", " << fmt17(x)
              << ") = " << fmt17(v) << " branch="
              << (b == LambdaBranch::principal ? "principal" : "second_copy")
              << "\n";
    return 0;
  }
  if (what == "embed1d") {
    const Eigen::Vector2d st = embed_1d(k1l2, 1.0, a);
    std::cout << "stilde = (" << fmt17(st(0)) << ", " << fmt17(st(1))
              << ")\n";
    return 0;
  }
  if (what == "embed") {
    const KappaPair kp = so.resolve();
    const ChartPoint p{so.resolve_chart(), pt.at(0), pt.at(1)};
    const Eigen::Vector3d st =
        stereographic(kp, so.ell, to_weierstrass(kp, p));
    std::cout << "stilde = (" << fmt17(st(0)) << ", " << fmt17(st(1)) << ", "
              << fmt17(st(2)) << ")\n";
    return 0;
  }
  if (what == "distance") {
    const KappaPair kp = so.resolve();
    const Chart ch = so.resolve_chart();
    const double d = distance(kp, {ch, pt.at(0), pt.at(1)},
                              {ch, qt.at(0), qt.at(1)});
    std::cout << "distance = " << fmt17(d) << "\n";
    return 0;
  }
  if (what == "kg") {
    const KappaPair kp = so.resolve();
    const Cycle cy =
        circle(kp, {so.resolve_chart(), pt.at(0), pt.at(1)}, rho);
    std::cout << "kg = " << fmt17(geodesic_curvature(kp, cy)) << "\n";
    return 0;
  }
  throw DomainError("unknown eval target: " + what);
}

// ---------------------------------------------------------------------------
// sample

json sample_cycle_doc(const KappaPair& kp, double ell, double c1, double c2,
                      double rho, int n) {
  const Cycle cy = circle(kp, {Chart::ParallelI, c1, c2}, rho);
  json doc = table_header(kp, ell, "polar");
  doc["columns"] = {"r", "phi", "x0", "x1", "x2"};
  json rows = json::array();
  for (const auto& p : sample_cycle(cy, kp, n)) {
    const WeierstrassPoint w = to_weierstrass(kp, p);
    rows.push_back({p.u1, p.u2, w(0), w(1), w(2)});
  }
  doc["rows"] = rows;
  return doc;
}

json sample_embedding_doc(const KappaPair& kp, double ell, int n) {
  json doc = table_header(kp, ell, "parallel1");
  doc["columns"] = {"a", "y", "splus", "sminus", "s1", "s2",
                    "stplus", "st1", "st2", "at_infinity"};
  json rows = json::array();
  const double half_pi = std::asin(1.0);
  auto coord = [&](double label, double frac) {
    if (label > 0.0)
      return 2.0 * half_pi * (2.0 * frac - 1.0) / std::sqrt(label);
    return std::tan(half_pi * (2.0 * frac - 1.0) * 0.98);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double aa = coord(kp.k1, (i + 0.5) / n);
      double y = coord(kp.k12(), (j + 0.5) / n);
      if (kp.k12() > 0.0) y /= 2.0;
      const ChartPoint p{Chart::ParallelI, aa, y};
      const ConePoint s = embed_cone(kp, ell, p);
      const bool inf = at_infinity(s);
      Eigen::Vector3d st = Eigen::Vector3d::Zero();
      if (!inf) st = to_section(s);
      rows.push_back({aa, y, s(0), s(1), s(2), s(3), st(0), st(1), st(2),
                      inf ? 1 : 0});
    }
  doc["rows"] = rows;
  return doc;
}

json sample_flow_doc(const KappaPair& kp, double ell, double u1, double u2,
                     double par, int n) {
  json doc = table_header(kp, ell, "polar");
  doc["columns"] = {"lambda", "r", "phi"};
  json rows = json::array();
  for (int i = 0; i <= n; ++i) {
    const double t = par * i / n;
    const ChartPoint q = dilation_flow(kp, t, {Chart::Polar, u1, u2});
    rows.push_back({t, q.u1, q.u2});
  }
  doc["rows"] = rows;
  return doc;
}

// ---------------------------------------------------------------------------
// plot

std::string svg_path(const std::vector<std::pair<double, double>>& pts,
                     double cx, double cy, double scale) {
  std::ostringstream os;
  for (size_t i = 0; i < pts.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%c%.3f %.3f", i == 0 ? 'M' : 'L',
                  cx + scale * pts[i].first, cy - scale * pts[i].second);
    os << buf;
  }
  return os.str();
}

std::string plot_cycle_svg(const KappaPair& kp, double c1, double c2,
                           double rho, int n) {
  const Cycle cy = circle(kp, {Chart::ParallelI, c1, c2}, rho);
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : sample_cycle(cy, kp, n)) {
    const WeierstrassPoint w = to_weierstrass(kp, p);
    pts.push_back({w(1), w(2)});
  }
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        "viewBox=\"0 0 400 400\">\n";
  os << "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
  os << "<path d=\"" << svg_path(pts, 200, 200, 120)
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  os << "<circle cx=\"200\" cy=\"200\" r=\"2\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

// Three panels: the compactified line (a circle), the image of the 1D space
// of curvature k1 l^2 in {1, 0, -1}, the projection pole, and sample rays.
std::string plot_embed1d_svg(int n) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        "viewBox=\"0 0 720 240\">\n";
  os << "<rect width=\"720\" height=\"240\" fill=\"white\"/>\n";
  const double k1l2v[3] = {1.0, 0.0, -1.0};
  const char* names[3] = {"k1l2=1", "k1l2=0", "k1l2=-1"};
  for (int panel = 0; panel < 3; ++panel) {
    const double cx = 120 + 240 * panel, cy = 120, R = 80;
    // the full circle
    std::vector<std::pair<double, double>> circ;
    for (int i = 0; i <= 128; ++i) {
      const double th = 2.0 * M_PI * i / 128;
      circ.push_back({std::cos(th), std::sin(th)});
    }
    os << "<path d=\"" << svg_path(circ, cx, cy, R)
       << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    // image of the line, with a few projection rays from the pole
    std::vector<std::pair<double, double>> img;
    for (int i = 0; i <= n; ++i) {
      const double f = (2.0 * i / n - 1.0) * 0.98;
      const double aa = k1l2v[panel] > 0 ? f * M_PI
                                         : std::tan(f * M_PI / 2.0);
      try {
        const Eigen::Vector2d st = embed_1d(k1l2v[panel], 1.0, aa);
        img.push_back({st(0), st(1)});
        if (i % (n / 4) == 0) {
          char buf[160];
          std::snprintf(buf, sizeof buf,
                        "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" "
                        "y2=\"%.3f\" stroke=\"#88aadd\" "
                        "stroke-width=\"0.7\"/>\n",
                        cx - R, cy, cx + R * st(0), cy - R * st(1));
          os << buf;
        }
      } catch (const PoleProjectionError&) {
      }
    }
    os << "<path d=\"" << svg_path(img, cx, cy, R)
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    // projection pole
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"3\" fill=\"red\"/>\n"
                  "<text x=\"%.3f\" y=\"%.3f\" font-size=\"12\" "
                  "font-family=\"monospace\">%s</text>\n",
                  cx - R, cy, cx - 30.0, cy + R + 25.0, names[panel]);
    os << buf;
  }
  os << "</svg>\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& suite, uint64_t seed, double tol_scale) {
  std::vector<verify::CheckResult> results;
  if (suite == "all") {
    results = verify::run_all(seed);
  } else {
    results = verify::run_suite(suite, seed);
  }
  bool ok = true;
  std::ostringstream os;
  for (const auto& r : results) {
    const double tol = r.tol * tol_scale;
    const bool pass = r.worst <= tol;
    ok = ok && pass;
    os << (pass ? "PASS" : "FAIL") << " " << r.name
       << " trials=" << r.trials << " worst=" << fmt17(r.worst)
       << " tol=" << fmt17(tol) << "\n";
  }
  os << (ok ? "OK" : "FAILED") << " checks=" << results.size()
     << " seed=" << seed << "\n";
  std::cout << os.str();
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nine two-dimensional constant-curvature geometries: "
               "trigonometry, motions, cycles, conformal maps"};
  app.require_subcommand(1);

  // eval
  auto* ev = app.add_subcommand("eval", "evaluate a closed-form quantity");
  std::string ev_what;
  SpaceOpts ev_so;
  double ev_kappa = 0.0, ev_x = 0.0, ev_a = 0.0, ev_k1l2 = 0.0, ev_rho = 1.0;
  std::vector<double> ev_p, ev_q;
  
  ev->add_option("what", ev_what,
                 "ck | sk | tk | vk | lambda | lambda-ext | embed1d | embed "
                 "| distance | kg")
      ->required();
  ev_so.attach(ev);
  ev->add_option("--kappa", ev_kappa, "curvature label for trig evaluations");
  ev->add_option("--x", ev_x, "trig argument");
  ev->add_option("--a", ev_a, "1d coordinate for embed1d");
  ev->add_option("--k1l2", ev_k1l2, "rescaled curvature for embed1d");
  ev->add_option("--p", ev_p, "point coordinates u1 u2")->expected(2);
  ev->add_option("--q", ev_q, "second point coordinates")->expected(2);
  ev->add_option("--rho", ev_rho, "circle radius for kg");

  // sample
  auto* sa = app.add_subcommand("sample", "sample a curve or embedding");
  std::string sa_what, sa_out, sa_format = "json";
  SpaceOpts sa_so;
  double sa_c1 = 0.0, sa_c2 = 0.0, sa_rho = 0.5, sa_par = 1.0;
  int sa_n = 64;
  sa->add_option("what", sa_what, "cycle | embedding | dilation")->required();
  sa_so.attach(sa, false);
  sa->add_option("--c1", sa_c1, "center / start first coordinate");
  sa->add_option("--c2", sa_c2, "center / start second coordinate");
  sa->add_option("--rho", sa_rho, "circle radius");
  sa->add_option("--par", sa_par, "flow parameter end value");
  sa->add_option("--n", sa_n, "sample count (per axis for grids)");
  sa->add_option("--format", sa_format, "json | csv");
  sa->add_option("--out", sa_out, "output file (default stdout)");

  // plot
  auto* pl = app.add_subcommand("plot", "deterministic SVG diagrams");
  std::string pl_what, pl_out;
  SpaceOpts pl_so;
  double pl_c1 = 0.0, pl_c2 = 0.0, pl_rho = 0.5;
  int pl_n = 64;
  pl->add_option("what", pl_what, "cycle | embed1d")->required();
  pl_so.attach(pl, false);
  pl->add_option("--c1", pl_c1, "circle center first coordinate");
  pl->add_option("--c2", pl_c2, "circle center second coordinate");
  pl->add_option("--rho", pl_rho, "circle radius");
  pl->add_option("--n", pl_n, "sample count");
  pl->add_option("--out", pl_out, "output file (default stdout)");

  // verify
  auto* vf = app.add_subcommand("verify", "run the property-check suites");
  std::string vf_suite = "all";
  uint64_t vf_seed = 1;
  double vf_tol = 1.0;
  vf->add_option("suite", vf_suite, "all or a suite name");
  vf->add_option("--seed", vf_seed, "random seed");
  vf->add_option("--tol", vf_tol, "tolerance scale factor (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ev)
      return run_eval(ev_what, ev_so, ev_kappa, ev_x, ev_a, ev_k1l2, ev_p,
                      ev_q, ev_rho);
    if (*sa) {
      const KappaPair kp = sa_so.resolve();
      json doc;
      if (sa_what == "cycle")
        doc = sample_cycle_doc(kp, sa_so.ell, sa_c1, sa_c2, sa_rho, sa_n);
      else if (sa_what == "embedding")
        doc = sample_embedding_doc(kp, sa_so.ell, sa_n);
      else if (sa_what == "dilation")
        doc = sample_flow_doc(kp, sa_so.ell, sa_c1, sa_c2, sa_par, sa_n);
      else
        throw DomainError("unknown sample target: " + sa_what);
      write_output(sa_out, render_table(doc, sa_format));
      return 0;
    }
    if (*pl) {
      std::string svg;
      if (pl_what == "cycle")
        svg = plot_cycle_svg(pl_so.resolve(), pl_c1, pl_c2, pl_rho, pl_n);
      else if (pl_what == "embed1d")
        svg = plot_embed1d_svg(pl_n);
      else
        throw DomainError("unknown plot target: " + pl_what);
      write_output(pl_out, svg);
      return 0;
    }
    if (*vf) return run_verify(vf_suite, vf_seed, vf_tol);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::out_of_range&) {
    std::cerr << "error: missing point coordinates (--p / --q)\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
