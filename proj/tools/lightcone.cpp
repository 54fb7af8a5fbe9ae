// lightcone: command-line front end for the envelope library.
//
// Exit codes: 0 ok, 1 check failure, 2 usage or schema error, 3 unsupported.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <lightcone/continuation.hpp>
#include <lightcone/envelopes.hpp>
#include <lightcone/oracles.hpp>
#include <lightcone/parallel.hpp>
#include <lightcone/region_json.hpp>
#include <lightcone/spectral.hpp>
#include <lightcone/transforms.hpp>

using namespace lightcone;

namespace {

constexpr int exit_ok = 0, exit_check = 1, exit_usage = 2, exit_unsupported = 3;

struct Globals {
  std::uint64_t seed = default_seed;
  std::optional<double> tol;
  int budget = SearchBudget{}.grid;
  std::string format = "json";
  bool format_given = false;
  std::string out;
};

// ---------------------------------------------------------------------------
// parsing helpers

std::vector<double> parse_numbers(const std::string& s, char sep) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    double d;
    try {
      d = std::stod(item, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "not a number: '" + item + "'");
    }
    require(item.find_first_not_of(" \t", used) == std::string::npos, ErrorCode::InvalidArgument,
            "trailing characters in '" + item + "'");
    v.push_back(d);
  }
  return v;
}

RealPoint2 parse_real(const std::string& s) {
  auto v = parse_numbers(s, ',');
  require(v.size() == 2, ErrorCode::InvalidArgument, "expected a point 'a,b', got '" + s + "'");
  return {v[0], v[1]};
}

// "re0,re1;im0,im1" or "re0,re1" for a real point
ComplexPoint2 parse_complex(const std::string& s) {
  const auto semi = s.find(';');
  if (semi == std::string::npos) return ComplexPoint2(parse_real(s));
  return make_complex(parse_real(s.substr(0, semi)), parse_real(s.substr(semi + 1)));
}

double parse_mass(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "infinity") return inf;
  auto v = parse_numbers(s, ',');
  require(v.size() == 1, ErrorCode::InvalidArgument, "expected a number or 'inf', got '" + s + "'");
  return v[0];
}

std::pair<double, double> parse_range(const std::string& s) {
  auto v = parse_numbers(s, ',');
  require(v.size() == 2 && v[0] < v[1], ErrorCode::InvalidArgument, "expected a range 'lo,hi' with lo < hi");
  return {v[0], v[1]};
}

// inline JSON, or @path to read it from a file
Region parse_region(const std::string& s) {
  if (!s.empty() && s[0] == '@') {
    std::ifstream in(s.substr(1));
    require(bool(in), ErrorCode::InvalidArgument, "cannot read region file '" + s.substr(1) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return region_from_json(buf.str());
  }
  return region_from_json(s);
}

json point_json(const RealPoint2& p) { return json::array({p.t, p.x}); }
json complex_json(const ComplexPoint2& z) { return {{"re", point_json(z.re())}, {"im", point_json(z.im())}}; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// FNV-1a over the canonical config text; stable across platforms
std::string digest(const json& config) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : config.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// output

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      require(bool(file_), ErrorCode::InvalidArgument, "cannot open output file '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string csv_cell(const json& v) {
  if (v.is_number()) return num(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "";
  std::string s = v.dump();
  for (auto& c : s)
    if (c == ',') c = ' ';
  return s;
}

// Flat objects in CSV come out as a header line plus one row.
void emit_record(const Globals& g, const json& rec) {
  Sink sink(g.out);
  if (g.format == "csv") {
    std::string head, row;
    for (auto it = rec.begin(); it != rec.end(); ++it) {
      head += (head.empty() ? "" : ",") + it.key();
      row += (it == rec.begin() ? "" : ",") + csv_cell(it.value());
    }
    sink.os() << head << "\n" << row << "\n";
  } else {
    sink.os() << rec.dump(2) << "\n";
  }
}

json verdict_json(const EnvelopeVerdict& v) { return {{"verdict", to_string(v.kind)}, {"margin", v.margin}}; }

// ---------------------------------------------------------------------------
// envelopes by name

struct EnvelopeSpec {
  std::string name;  // mu-cone | shell | shell-band | empty for region
  double mu = 0, m = 1, m1 = 1, m2 = 3;
  std::string region;
};

std::function<EnvelopeVerdict(const ComplexPoint2&)> make_evaluator(const EnvelopeSpec& e, const Globals& g) {
  if (!e.name.empty()) {
    const double tol = g.tol.value_or(tol_env_closed);
    if (e.name == "mu-cone") return [=](const ComplexPoint2& z) { return envelope_mu_cone(z, e.mu, tol); };
    if (e.name == "shell") return [=](const ComplexPoint2& z) { return envelope_shell_complement(z, e.m, tol); };
    if (e.name == "shell-band")
      return [=](const ComplexPoint2& z) { return envelope_g1(z, e.m1, e.m2, tol); };
    fail(ErrorCode::InvalidArgument, "unknown envelope '" + e.name + "' (mu-cone, shell, shell-band)");
  }
  require(!e.region.empty(), ErrorCode::InvalidArgument, "give --envelope or --region");
  const Region r = parse_region(e.region);
  SearchBudget b;
  b.grid = g.budget;
  b.tol = g.tol.value_or(tol_env_search);
  const double real_tol = g.tol.value_or(tau_class);
  return [r, b, real_tol](const ComplexPoint2& z) {
    if (norm(z.im()) == 0) {
      const RealPoint2 x = z.re();
      const double d = boundary_distance(r, x);
      return decide(contains(r, x) ? d : -d, real_tol);
    }
    return jld_excluded(z, r, b);
  };
}

void add_envelope_options(CLI::App* c, EnvelopeSpec& e) {
  c->add_option("--envelope", e.name, "closed-form envelope: mu-cone, shell, shell-band");
  c->add_option("--region", e.region, "region JSON (or @file); complex points use the admissible-quadric search");
  c->add_option("--mu", e.mu, "mu for mu-cone");
  c->add_option("--m", e.m, "m for shell (complement of {0 <= z^2 <= m^2})");
  c->add_option("--m1", e.m1, "inner mass for shell-band");
  c->add_option("--m2", e.m2, "outer mass for shell-band");
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_member(const Globals& g, const EnvelopeSpec& e, const std::string& z_text, const std::string& p_text) {
  require(z_text.empty() != p_text.empty(), ErrorCode::InvalidArgument, "give exactly one of --z or --p");
  const ComplexPoint2 z = z_text.empty() ? ComplexPoint2(parse_real(p_text)) : parse_complex(z_text);
  const auto eval = make_evaluator(e, g);
  json rec = verdict_json(eval(z));
  emit_record(g, rec);
  return exit_ok;
}

struct SliceArgs {
  std::string y = "0,0", x0 = "-3,3", x1 = "-3,3";
  int n0 = 61, n1 = 61;
};

int cmd_slice(const Globals& g, const EnvelopeSpec& e, const SliceArgs& a) {
  require(a.n0 >= 2 && a.n1 >= 2, ErrorCode::InvalidArgument, "resolution must be >= 2 per axis");
  const RealPoint2 y = parse_real(a.y);
  const auto [lo0, hi0] = parse_range(a.x0);
  const auto [lo1, hi1] = parse_range(a.x1);
  const auto eval = make_evaluator(e, g);
  const std::size_t n0 = a.n0, n1 = a.n1;
  std::vector<EnvelopeVerdict> cells(n0 * n1);
  parallel_for(n0, [&](std::size_t i) {
    const double x0 = lo0 + (hi0 - lo0) * double(i) / (n0 - 1);
    for (std::size_t j = 0; j < n1; ++j) {
      const double x1 = lo1 + (hi1 - lo1) * double(j) / (n1 - 1);
      cells[i * n1 + j] = eval(make_complex({x0, x1}, y));
    }
  });
  Sink sink(g.out);
  const bool as_json = g.format_given && g.format == "json";
  if (as_json) {
    json rows = json::array();
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t j = 0; j < n1; ++j) {
        const auto& c = cells[i * n1 + j];
        rows.push_back({{"x0", lo0 + (hi0 - lo0) * double(i) / (n0 - 1)},
                        {"x1", lo1 + (hi1 - lo1) * double(j) / (n1 - 1)},
                        {"verdict", to_string(c.kind)},
                        {"margin", c.margin}});
      }
    sink.os() << json{{"y", point_json(y)}, {"rows", rows}}.dump(2) << "\n";
  } else {
    sink.os() << "x0,x1,verdict,margin\n";
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t j = 0; j < n1; ++j) {
        const auto& c = cells[i * n1 + j];
        sink.os() << num(lo0 + (hi0 - lo0) * double(i) / (n0 - 1)) << ","
                  << num(lo1 + (hi1 - lo1) * double(j) / (n1 - 1)) << "," << to_string(c.kind) << ","
                  << num(c.margin) << "\n";
      }
  }
  return exit_ok;
}

struct TransformArgs {
  std::string map = "phi", z;
  double mu = 1, sigma = 0, c = 0;
};

int cmd_transform(const Globals& g, const TransformArgs& a) {
  json rec{{"map", a.map}};
  if (a.map == "line-image") {
    const HyperbolaParams h = line_image(a.sigma, a.c, a.mu);
    rec["center"] = point_json(h.center);
    rec["lambda"] = h.lam;
    emit_record(g, rec);
    return exit_ok;
  }
  require(!a.z.empty(), ErrorCode::InvalidArgument, "--z is required");
  const ComplexPoint2 z = parse_complex(a.z);
  ComplexPoint2 w;
  if (a.map == "phi") w = phi(z);
  else if (a.map == "psi") w = psi(z, a.mu);
  else if (a.map == "psi-inverse") w = psi_inverse(z, a.mu);
  else if (a.map == "psi-phi") w = psi_phi(z, a.mu);
  else if (a.map == "psi-phi-inverse") w = psi_phi_inverse(z, a.mu);
  else fail(ErrorCode::InvalidArgument, "unknown map '" + a.map + "'");
  rec["input"] = complex_json(z);
  rec["output"] = complex_json(w);
  emit_record(g, rec);
  return exit_ok;
}

struct OracleArgs {
  std::string suite;
  std::optional<std::size_t> n;
  std::optional<int> grid;
};

oracle::SuiteReport run_suite(const std::string& name, const OracleArgs& a, std::uint64_t seed) {
  using namespace oracle;
  if (name == "phi-properties") return phi_properties(a.n.value_or(100000), seed);
  if (name == "mu-cone-planes") return mu_cone_planes(a.n.value_or(1000), seed);
  if (name == "shell-bounds") return shell_bounds(a.grid.value_or(50));
  if (name == "shell-complement") return shell_complement(a.n.value_or(10000), a.grid.value_or(200), 1.0, seed);
  if (name == "pflug") return pflug(a.n.value_or(10000), seed);
  if (name == "spacelike-complement") return spacelike_complement(a.n.value_or(10000), 1000, seed);
  if (name == "cauchy") return cauchy(seed);
  if (name == "max-principle") return max_principle(seed);
  if (name == "massgap") return massgap(seed);
  fail(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

int cmd_oracle(const Globals& g, const OracleArgs& a) {
  std::vector<std::string> names;
  if (a.suite == "all") names = oracle::suite_names();
  else names = {a.suite};
  json config{{"suite", a.suite}, {"seed", g.seed}};
  if (a.n) config["n"] = *a.n;
  if (a.grid) config["grid"] = *a.grid;
  json checks = json::array();
  bool all_pass = true;
  for (const auto& name : names) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = run_suite(name, a, g.seed);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << name << ": " << (r.pass ? "pass" : "FAIL") << " (" << num(secs) << " s)\n";
    json metrics = json::object();
    for (const auto& [k, v] : r.metrics) metrics[k] = v;
    checks.push_back({{"suite", r.suite},
                      {"pass", r.pass},
                      {"checked", r.checked},
                      {"violations", r.violations},
                      {"metrics", metrics}});
    all_pass = all_pass && r.pass;
  }
  json rec{{"command", "oracle"}, {"config_digest", digest(config)}, {"seed", g.seed}, {"pass", all_pass}};
  Sink sink(g.out);
  if (g.format == "csv") {
    sink.os() << "suite,pass,checked,violations\n";
    for (const auto& c : checks)
      sink.os() << c["suite"].get<std::string>() << "," << (c["pass"].get<bool>() ? "true" : "false") << ","
                << c["checked"].get<std::size_t>() << "," << c["violations"].get<std::size_t>() << "\n";
  } else {
    rec["checks"] = checks;
    sink.os() << rec.dump(2) << "\n";
  }
  return all_pass ? exit_ok : exit_check;
}

struct MassgapArgs {
  double m = 1, epsilon = 0.1;
  std::string m1 = "2", s = "1,0";
  std::optional<double> theta;
};

int cmd_massgap(const Globals& g, const MassgapArgs& a) {
  using namespace spectral;
  const SpectrumHypothesis h{a.m, parse_mass(a.m1), parse_real(a.s), a.epsilon};
  h.validate();
  json rec;
  if (a.theta) {
    // evaluate the candidate at a chosen rapidity instead of searching
    const RealPoint2 q = massgap_q(h, *a.theta);
    const double q2 = mink_square(q);
    const bool in_n = q2 < 0 || q2 > h.m1 * h.m1;
    rec = {{"theta", *a.theta}, {"q", point_json(q)}, {"q_square", q2}, {"witness", in_n ? point_json(q) : json()}};
  } else {
    const MassgapResult r = massgap_contradiction(h);
    rec = {{"witness", r.witness ? point_json(*r.witness) : json()}, {"reason", r.reason}};
    if (r.witness) {
      rec["theta"] = r.theta;
      rec["q_square"] = r.q_square;
      rec["theta_threshold"] = r.theta_threshold;
    } else {
      rec["q_square"] = nullptr;
    }
  }
  emit_record(g, rec);
  return exit_ok;
}

struct ContinueArgs {
  std::string p = "0,1", s = "1,0", u = "1,0.3", alpha = "0";
  double slope = -0.8, mu = 1, c = 6;
  int nodes = 256, targets = 9;
};

int cmd_continue(const Globals& g, const ContinueArgs& a) {
  const CurveFamily fam = build_hyperbola_family(parse_real(a.p), a.slope, parse_real(a.s), a.mu);
  const RealPoint2 u = parse_real(a.u);
  const double c = a.c;
  // test function 1/(z.u - c); the continuation only sees it on the contour
  HoloFn f = [u, c](const ComplexPoint2& z) { return 1.0 / (mink_dot(z, u) - c); };
  ContinuationOptions opt;
  opt.nodes = a.nodes;
  opt.targets = a.targets;
  const auto pts = continue_along_family(f, fam, parse_numbers(a.alpha, ','), opt);
  const double tol = g.tol.value_or(1e-6);
  double maxerr = 0;
  std::vector<double> errs;
  for (const auto& p : pts) {
    errs.push_back(std::abs(p.value - f(ComplexPoint2(p.point))));
    maxerr = std::max(maxerr, errs.back());
  }
  Sink sink(g.out);
  if (g.format_given && g.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < pts.size(); ++i)
      rows.push_back({{"alpha", pts[i].alpha},
                      {"t", pts[i].t},
                      {"point", point_json(pts[i].point)},
                      {"value", {pts[i].value.real(), pts[i].value.imag()}},
                      {"abs_error", errs[i]},
                      {"error_estimate", pts[i].error_estimate}});
    sink.os() << json{{"rho", fam.rho},
                      {"window", {fam.t_lo, fam.t_hi}},
                      {"alpha_star", fam.alpha_star},
                      {"max_abs_error", maxerr},
                      {"pass", maxerr <= tol},
                      {"rows", rows}}
                     .dump(2)
              << "\n";
  } else {
    sink.os() << "alpha,t,x0,x1,re,im,abs_error,error_estimate\n";
    for (std::size_t i = 0; i < pts.size(); ++i)
      sink.os() << num(pts[i].alpha) << "," << num(pts[i].t) << "," << num(pts[i].point.t) << ","
                << num(pts[i].point.x) << "," << num(pts[i].value.real()) << "," << num(pts[i].value.imag()) << ","
                << num(errs[i]) << "," << num(pts[i].error_estimate) << "\n";
  }
  return maxerr <= tol ? exit_ok : exit_check;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnsupportedRegion:
    case ErrorCode::UnsupportedConfiguration:
      return exit_unsupported;
    default:
      return exit_usage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Envelopes of holomorphy for tube-plus-coincidence-region domains in 1+1 dimensions"};
  app.fallthrough();
  app.require_subcommand(1);
  app.footer(
      "Points: real 'a,b'; complex 're0,re1;im0,im1'. Regions: JSON (see docs/regions.md) or @file.\n"
      "LIGHTCONE_ENV_THREADS caps worker threads. Exit: 0 ok, 1 check failure, 2 usage, 3 unsupported.");

  Globals g;
  app.add_option("--seed", g.seed, "RNG / low-discrepancy seed");
  app.add_option("--tol", g.tol, "verdict tolerance (defaults: 1e-9 closed forms, 1e-6 searches)");
  app.add_option("--budget", g.budget, "coarse grid size per axis for quadric searches")->check(CLI::Range(4, 4096));
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "write output to FILE instead of stdout");

  EnvelopeSpec member_env, slice_env;
  std::string z_text, p_text;
  auto* member = app.add_subcommand("member", "membership verdict for one point");
  add_envelope_options(member, member_env);
  member->add_option("--z", z_text, "complex point 're0,re1;im0,im1'");
  member->add_option("--p", p_text, "real point 'a,b'");

  SliceArgs slice_args;
  auto* slice = app.add_subcommand("slice", "verdict grid over the real plane at fixed Im z (CSV x0,x1,verdict,margin)");
  add_envelope_options(slice, slice_env);
  slice->add_option("--y", slice_args.y, "imaginary part 'y0,y1'");
  slice->add_option("--x0", slice_args.x0, "x0 range 'lo,hi'");
  slice->add_option("--x1", slice_args.x1, "x1 range 'lo,hi'");
  slice->add_option("--n0", slice_args.n0, "grid points along x0 (>= 2)");
  slice->add_option("--n1", slice_args.n1, "grid points along x1 (>= 2)");

  TransformArgs tr;
  auto* transform = app.add_subcommand("transform", "apply phi, psi, psi o phi or their inverses");
  transform->add_option("--map", tr.map, "phi | psi | psi-inverse | psi-phi | psi-phi-inverse | line-image");
  transform->add_option("--z", tr.z, "complex point 're0,re1;im0,im1'");
  transform->add_option("--mu", tr.mu, "mu > 0 for the psi maps");
  transform->add_option("--sigma", tr.sigma, "line-image: slope of x0 = sigma x1 + c");
  transform->add_option("--c", tr.c, "line-image: intercept");

  OracleArgs orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "run a cross-check suite; exit 1 on failure");
  std::string suites = "all";
  for (const auto& n : oracle::suite_names()) suites += ", " + n;
  oracle_cmd->add_option("suite", orc.suite, "suite: " + suites)->required();
  oracle_cmd->add_option("--n", orc.n, "sample count");
  oracle_cmd->add_option("--grid", orc.grid, "grid size per axis");

  MassgapArgs mg;
  auto* massgap = app.add_subcommand("massgap", "search 2ms - {p^2 = m^2} for points outside 0 <= p^2 <= m1^2");
  massgap->add_option("--m", mg.m, "shell mass m > 0");
  massgap->add_option("--m1", mg.m1, "band edge m1 >= m, or inf");
  massgap->add_option("--s", mg.s, "unit forward timelike direction 's0,s1'");
  massgap->add_option("--epsilon", mg.epsilon, "neighbourhood size (reported only)");
  massgap->add_option("--theta", mg.theta, "evaluate the candidate at this rapidity instead of searching");

  ContinueArgs ca;
  auto* cont = app.add_subcommand("continue", "Cauchy continuation of 1/(z.u - c) along a hyperbola family");
  cont->add_option("--p", ca.p, "start point on the boundary of (D_{0,s})'");
  cont->add_option("--slope", ca.slope, "slope of the asymptote through p, |slope| < 1");
  cont->add_option("--s", ca.s, "forward timelike s");
  cont->add_option("--mu", ca.mu, "mu >= 0");
  cont->add_option("--alpha", ca.alpha, "comma-separated shifts");
  cont->add_option("--u", ca.u, "test function direction 'u0,u1'");
  cont->add_option("--c", ca.c, "test function pole offset");
  cont->add_option("--nodes", ca.nodes, "contour nodes")->check(CLI::Range(8, 1 << 16));
  cont->add_option("--targets", ca.targets, "targets per alpha")->check(CLI::Range(1, 10000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }
  g.format_given = app.get_option("--format")->count() > 0;

  const auto t0 = std::chrono::steady_clock::now();
  int rc = exit_ok;
  try {
    if (*member) rc = cmd_member(g, member_env, z_text, p_text);
    else if (*slice) rc = cmd_slice(g, slice_env, slice_args);
    else if (*transform) rc = cmd_transform(g, tr);
    else if (*oracle_cmd) rc = cmd_oracle(g, orc);
    else if (*massgap) rc = cmd_massgap(g, mg);
    else if (*cont) rc = cmd_continue(g, ca);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cerr << "wall time " << num(secs) << " s\n";
  return rc;
}
