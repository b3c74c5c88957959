#include "wedge/harness.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "wedge/core.hpp"
#include "wedge/gtd.hpp"
#include "wedge/quad.hpp"
#include "wedge/randomwalk.hpp"
#include "wedge/series.hpp"
#include "wedge/smirnov.hpp"
#include "wedge/sommerfeld.hpp"

namespace wedge::harness {

namespace {

const complex I{0.0, 1.0};

double pair_threshold(const std::string& a, const std::string& b,
                      bool* informational) {
  *informational = false;
  auto is = [&](const std::string& m) { return a == m || b == m; };
  if (is("utd") || is("gtd")) {
    *informational = true;
    return 0.0;
  }
  if (is("mc")) return 0.05;
  if (is("smirnov")) return 5e-3;
  if (is("kl")) return 1e-3;
  if (is("halfplane")) return 1e-9;
  return 1e-6;  // exact-exact
}

}  // namespace

complex evaluate_method(const std::string& method, const PolarPoint& pt,
                        const WedgeProblem& prob, std::uint64_t seed) {
  if (method == "sdc") return sommerfeld::phi_total(pt, prob).total;
  if (method == "series") return series::phi_series(pt, prob);
  if (method == "halfplane") return sommerfeld::phi_halfplane_fresnel(pt, prob);
  if (method == "gtd") return gtd::phi_gtd(pt, prob);
  if (method == "utd") return gtd::phi_utd(pt, prob);
  if (method == "kl") return series::kl_inverse_numeric(pt, prob);
  if (method == "smirnov") return smirnov::phi_from_time(pt, prob);
  if (method == "mc") {
    randomwalk::McConfig cfg;
    cfg.seed = seed;
    randomwalk::McEstimate est = randomwalk::estimate_crossing(pt, prob, cfg);
    return core::go_field(pt, prob) +
           est.mean * std::exp(I * prob.k * pt.r);
  }
  throw DomainError("evaluate_method: unknown method " + method);
}

Report cross_compare(const std::vector<PolarPoint>& points,
                     const WedgeProblem& prob,
                     const std::set<std::string>& methods) {
  if (methods.size() < 2)
    throw DomainError("cross_compare: need at least two methods");
  std::vector<std::string> names(methods.begin(), methods.end());
  std::vector<std::vector<complex>> values(names.size());
  for (std::size_t m = 0; m < names.size(); ++m) {
    values[m].reserve(points.size());
    for (const PolarPoint& pt : points)
      values[m].push_back(evaluate_method(names[m], pt, prob));
  }

  Report report;
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t b = a + 1; b < names.size(); ++b) {
      PairReport pr;
      pr.method_a = names[a];
      pr.method_b = names[b];
      double sum = 0.0;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const double d = std::abs(values[a][i] - values[b][i]);
        pr.max_abs_diff = std::max(pr.max_abs_diff, d);
        sum += d;
      }
      pr.mean_abs_diff = points.empty() ? 0.0 : sum / double(points.size());
      pr.threshold = pair_threshold(names[a], names[b], &pr.informational);
      pr.pass = pr.informational || pr.max_abs_diff < pr.threshold;
      report.pairs.push_back(pr);
    }
  }
  return report;
}

std::string report_to_json(const Report& report) {
  nlohmann::json j = nlohmann::json::array();
  for (const PairReport& p : report.pairs) {
    j.push_back({{"method_a", p.method_a},
                 {"method_b", p.method_b},
                 {"max_abs_diff", p.max_abs_diff},
                 {"mean_abs_diff", p.mean_abs_diff},
                 {"threshold", p.threshold},
                 {"informational", p.informational},
                 {"pass", p.pass}});
  }
  return j.dump(2);
}

complex green_operator_s0(complex z, const WedgeProblem& prob, double r_max,
                          int nodes_per_panel) {
  const double decay = std::imag(std::cos(z));
  if (decay < 0.1)
    throw SlowDecay("green_operator_s0: need Im cos(z) >= 0.1");
  const double k = prob.k;
  if (r_max <= 0.0) r_max = 23.0 / (k * decay);

  sommerfeld::QuadratureSpec q;
  q.base_nodes = 128;

  // [Phi d(w_z)/dtheta - dPhi/dtheta w_z] / r on the theta = 0 ray, with
  // w_z = exp(i k r cos(z - theta)); dPhi/dtheta by 5-point differences.
  const double h = 1e-4;
  auto integrand = [&](double r) -> complex {
    auto phi = [&](double th) {
      return sommerfeld::phi_total({r, th}, prob, q).total;
    };
    const complex p0 = phi(0.0);
    const complex dphi =
        (-phi(2.0 * h) + 8.0 * phi(h) - 8.0 * phi(-h) + phi(-2.0 * h)) /
        (12.0 * h);
    const complex w = std::exp(I * k * r * std::cos(z));
    return (p0 * I * k * std::sin(z) - dphi / r) * w;
  };

  // Near-origin panel: r = r0 u^(1/delta) turns the r^(delta-1) edge
  // behavior of the integrand into a smooth one.
  const double d = prob.delta();
  const double r0 = std::min(0.5 / k, 0.1 * r_max);
  auto near_origin = [&](double u) -> complex {
    const double r = r0 * std::pow(u, 1.0 / d);
    return integrand(r) * (r0 / d) * std::pow(u, 1.0 / d - 1.0);
  };
  complex total = quad::gl_integrate(near_origin, 1e-12, 1.0, 16);

  // The rest: oscillation rate |k Re cos z| bounds the panel width.
  const double osc = std::max(1.0, k * std::abs(std::real(std::cos(z))));
  const int n_panels =
      std::max(8, int(std::ceil((r_max - r0) * osc / (0.5 * pi))));
  std::vector<double> breaks;
  for (int i = 0; i <= n_panels; ++i)
    breaks.push_back(r0 + (r_max - r0) * double(i) / n_panels);
  total += quad::gl_panels(integrand, breaks, nodes_per_panel);

  return 0.5 * total;
}

}  // namespace wedge::harness
