#include "wedge/randomwalk.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace wedge::randomwalk {

namespace {

const complex I{0.0, 1.0};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-based per-path generator: the stream depends only on (seed, index),
// so results are independent of thread scheduling.
struct PathRng {
  std::uint64_t state;
  bool have_spare = false;
  double spare = 0.0;

  PathRng(std::uint64_t seed, std::uint64_t index)
      : state(splitmix64(seed ^ splitmix64(index + 0x1234567887654321ULL))) {}

  double uniform() {
    state = splitmix64(state);
    return double(state >> 11) * 0x1.0p-53;
  }

  double normal() {  // Box-Muller
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare = mag * std::sin(2.0 * pi * u2);
    have_spare = true;
    return mag * std::cos(2.0 * pi * u2);
  }
};

complex pairwise_sum(const std::vector<complex>& v, std::size_t lo,
                     std::size_t hi) {
  if (hi - lo <= 8) {
    complex s{0.0, 0.0};
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// Evaluate per-path values in parallel (deterministic per index), then reduce
// with pairwise summation in index order.
McEstimate reduce_paths(
    const PolarPoint& start, const WedgeProblem& prob, const McConfig& cfg,
    const std::function<complex(const PathRecord&)>& value_of) {
  std::vector<complex> vals(cfg.n_paths);
  std::vector<char> capped(cfg.n_paths, 0);

  const int hw = int(std::thread::hardware_concurrency());
  const int n_threads = std::clamp(hw > 0 ? hw : 4, 1, 16);
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(64);
      if (i >= cfg.n_paths) return;
      int end = std::min(i + 64, cfg.n_paths);
      for (; i < end; ++i) {
        PathRecord rec = simulate_path(start, prob, cfg, std::uint64_t(i));
        if (rec.capped) {
          capped[i] = 1;
        } else {
          vals[i] = value_of(rec);
        }
      }
    }
  };
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::vector<complex> used;
  used.reserve(cfg.n_paths);
  McEstimate est;
  for (int i = 0; i < cfg.n_paths; ++i) {
    if (capped[i])
      ++est.n_capped;
    else
      used.push_back(vals[i]);
  }
  est.n_used = int(used.size());
  if (est.n_used == 0) return est;

  est.mean = pairwise_sum(used, 0, used.size()) / double(est.n_used);
  if (est.n_used > 1) {
    double ss = 0.0;
    for (const complex& v : used) ss += std::norm(v - est.mean);
    est.std_error = std::sqrt(ss / double(est.n_used - 1) / double(est.n_used));
  }
  return est;
}

}  // namespace

PathRecord simulate_path(const PolarPoint& start, const WedgeProblem& prob,
                         const McConfig& cfg, std::uint64_t path_index) {
  if (!(std::abs(start.theta) < prob.theta_w))
    throw DomainError("simulate_path: start angle must be interior");
  PathRng rng(cfg.seed, path_index);

  const double tw = prob.theta_w;
  const double disc_angles[2] = {2.0 * tw - prob.theta_i - pi,
                                 -2.0 * tw - prob.theta_i + pi};
  const int disc_m[2] = {2, 1};

  PathRecord rec;
  complex x1 = start.r;
  double x2 = start.theta;
  double w1 = 0.0;
  complex ixi{0.0, 0.0};
  double t = 0.0;
  const double sqrt_dt = std::sqrt(cfg.dt);

  while (t < cfg.t_max) {
    const double dw1 = sqrt_dt * rng.normal();
    const double dw2 = sqrt_dt * rng.normal();
    const complex x1n =
        x1 + x1 * (I * prob.k * x1 + 0.5) * cfg.dt + x1 * dw1;
    const double x2n = x2 + dw2;

    double exit_frac = 2.0;
    int face = 0;
    if (x2n >= tw) {
      exit_frac = (tw - x2) / (x2n - x2);
      face = +1;
    } else if (x2n <= -tw) {
      exit_frac = (-tw - x2) / (x2n - x2);
      face = -1;
    }

    // Crossings of the GO discontinuity lines inside this step, in order.
    struct Event {
      double frac;
      int idx;
    };
    Event events[2];
    int n_events = 0;
    for (int j = 0; j < 2; ++j) {
      const double a = x2 - disc_angles[j], b = x2n - disc_angles[j];
      if ((a > 0.0 && b <= 0.0) || (a < 0.0 && b >= 0.0)) {
        const double frac = a / (a - b);
        if (frac < exit_frac) events[n_events++] = {frac, j};
      }
    }
    std::sort(events, events + n_events,
              [](const Event& u, const Event& v) { return u.frac < v.frac; });
    for (int e = 0; e < n_events; ++e) {
      const double frac = events[e].frac;
      const int j = events[e].idx;
      const complex x1_at = x1 + frac * (x1n - x1);
      Crossing c;
      c.tau = t + frac * cfg.dt;
      c.m = disc_m[j];
      c.delta = (x2 > disc_angles[j]) ? +1 : -1;  // from above: +1
      c.int_xi1 = ixi + 0.5 * (x1 + x1_at) * (frac * cfg.dt);
      rec.crossings.push_back(c);
    }

    if (face != 0) {
      const double frac = exit_frac;
      rec.tau = t + frac * cfg.dt;
      rec.face = face;
      rec.xi1_tau = x1 + frac * (x1n - x1);
      rec.xi2_tau = (face > 0) ? tw : -tw;
      rec.w1_tau = w1 + frac * dw1;
      rec.int_xi1 = ixi + 0.5 * (x1 + rec.xi1_tau) * (frac * cfg.dt);
      return rec;
    }

    ixi += 0.5 * (x1 + x1n) * cfg.dt;
    x1 = x1n;
    x2 = x2n;
    w1 += dw1;
    t += cfg.dt;
  }

  rec.capped = true;
  rec.tau = t;
  rec.xi1_tau = x1;
  rec.xi2_tau = x2;
  rec.w1_tau = w1;
  rec.int_xi1 = ixi;
  return rec;
}

McEstimate estimate_continuous(
    const PolarPoint& start, const WedgeProblem& prob, const McConfig& cfg,
    const std::function<complex(complex, int)>& f) {
  const bool variant_b = (cfg.estimator == Estimator::ContinuousB);
  const double inv_sqrt_r = 1.0 / std::sqrt(start.r);
  auto value_of = [&, variant_b, inv_sqrt_r](const PathRecord& rec) -> complex {
    if (variant_b)
      return inv_sqrt_r * f(rec.xi1_tau, rec.face) * std::sqrt(rec.xi1_tau) *
             std::exp(-0.5 * rec.w1_tau);
    return f(rec.xi1_tau, rec.face) *
           std::exp(0.5 * I * prob.k * rec.int_xi1);
  };
  return reduce_paths(start, prob, cfg, value_of);
}

McEstimate estimate_crossing(const PolarPoint& start, const WedgeProblem& prob,
                             const McConfig& cfg) {
  if (prob.bc != Bc::Dirichlet)
    throw NotApplicable("estimate_crossing: Dirichlet only");
  const double th1 = 2.0 * prob.theta_w - prob.theta_i - pi;
  const double th2 = -2.0 * prob.theta_w - prob.theta_i + pi;
  if (!(std::abs(th1) < prob.theta_w && std::abs(th2) < prob.theta_w))
    throw NotApplicable(
        "estimate_crossing: both GO discontinuities must lie inside the wedge");

  auto value_of = [&](const PathRecord& rec) -> complex {
    complex sum{0.0, 0.0};
    for (const Crossing& c : rec.crossings) {
      const double sign = (c.m % 2 == 0) ? 1.0 : -1.0;  // (-1)^m
      sum += sign * double(c.delta) *
             std::exp(0.5 * I * prob.k * c.int_xi1);
    }
    return sum;
  };
  return reduce_paths(start, prob, cfg, value_of);
}

}  // namespace wedge::randomwalk
