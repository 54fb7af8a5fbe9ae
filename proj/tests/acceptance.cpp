// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <lightcone/oracles.hpp>

using namespace lightcone;
using namespace lightcone::oracle;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = budget_s <= 0 || secs < budget_s;
  const bool ok = o.ok && in_time;
  if (!ok) ++failures;
  std::string timing = std::to_string(secs).substr(0, 6) + " s";
  if (budget_s > 0) timing += " (limit " + std::to_string(int(budget_s)) + " s)";
  std::printf("%s criterion %d: %s; %s; %s\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), timing.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "reciprocal radii properties on 1e5 samples", 5, [] {
    const auto r = phi_properties(100000, default_seed);
    const bool ok = r.pass && r.get("double_cone_samples") >= 10000;
    return Outcome{ok, fmt("involution dev %.2e, violations %.0f, double-cone samples %.0f",
                           r.get("max_involution_dev"), double(r.violations), r.get("double_cone_samples"))};
  });

  criterion(2, "mu-cone closed form vs plane witness search", 30, [] {
    const auto r = mu_cone_planes(1000, default_seed);
    return Outcome{r.pass, fmt("agreement %.4f, disagreements %.0f, outside band %.0f", r.get("agreement_rate"),
                               r.get("disagreements"), r.get("disagreements_outside_band"))};
  });

  criterion(3, "shell boundary F+- vs constrained minimization, 50x50 grid", 60, [] {
    const auto r = shell_bounds(50, 1, 3);
    return Outcome{r.pass && r.get("max_dev") <= 1e-6 && r.checked >= 2500,
                   fmt("max dev %.2e over %.0f grid points, both bounds", r.get("max_dev"), double(r.checked))};
  });

  criterion(4, "shell complement consistency (real grid, subset, phi image)", 0, [] {
    const auto r = shell_complement(10000, 200, 1, default_seed);
    return Outcome{r.pass, fmt("grid violations %.0f, subset violations %.0f, phi violations %.0f",
                               r.get("real_grid_violations"), r.get("subset_violations"), r.get("phi_violations"))};
  });

  criterion(5, "Cauchy continuation of rational test functions", 10, [] {
    const auto r = cauchy(default_seed, 20, 5);
    const bool ok = r.pass && r.get("max_err_256") <= 1e-6 && r.get("min_doubling_ratio") >= 4;
    return Outcome{ok, fmt("max err %.2e at 256 nodes, min doubling ratio %.1f, family err %.2e",
                           r.get("max_err_256"), r.get("min_doubling_ratio"), r.get("family_max_err"))};
  });

  criterion(6, "maximum principle on analytic disc patches", 0, [] {
    const auto r = max_principle(default_seed, 50, 20);
    return Outcome{r.pass && r.violations == 0,
                   fmt("%.0f checks, violations %.0f, worst interior-boundary %.2e", double(r.checked),
                       double(r.violations), r.get("max_interior_minus_boundary"))};
  });

  criterion(7, "Pflug growth inequality", 0, [] {
    const auto r = pflug(10000, default_seed);
    return Outcome{r.pass && r.violations == 0, fmt("%.0f samples, violations %.0f", double(r.checked),
                                                    double(r.violations))};
  });

  criterion(8, "spacelike complement closed form vs sampling", 0, [] {
    const auto r = spacelike_complement(10000, 1000, default_seed);
    return Outcome{r.pass && r.get("disagreements") == 0,
                   fmt("%.0f points, disagreements outside band %.0f, inside band %.0f", double(r.checked),
                       r.get("disagreements"), r.get("disagreements_in_band"))};
  });

  criterion(9, "mass-gap detector", 1, [] {
    const auto r = massgap(default_seed, 20);
    const bool ok = r.pass && r.get("canonical_closed_form_dev") <= 1e-9 && r.get("sentinel_witness") == 0 &&
                    r.get("random_found") == 20;
    return Outcome{ok, fmt("theta %.6f, q^2 %.6f, random witnesses %.0f/20", r.get("canonical_theta"),
                           r.get("canonical_q_square"), r.get("random_found"))};
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
