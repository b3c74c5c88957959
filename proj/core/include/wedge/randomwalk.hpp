#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wedge/types.hpp"

namespace wedge::randomwalk {

enum class Estimator { ContinuousA, ContinuousB, Crossing };

struct McConfig {
  double dt = 0.01;
  int n_paths = 2000;
  std::uint64_t seed = 0;
  double t_max = 200.0;
  Estimator estimator = Estimator::ContinuousA;
};

struct McEstimate {
  complex mean{0.0, 0.0};
  double std_error = 0.0;
  int n_used = 0;
  int n_capped = 0;
};

struct Crossing {
  double tau;          // interpolated crossing time
  int m;               // discontinuity index weight
  int delta;           // +1 from above, -1 from below
  complex int_xi1;     // running integral of xi1 at tau
};

struct PathRecord {
  bool capped = false;
  double tau = 0.0;          // exit time through xi2 = +-theta_w
  int face = 0;              // +1 top, -1 bottom
  complex xi1_tau{0.0, 0.0};
  double xi2_tau = 0.0;  // exit angle (+-theta_w) or last angle if capped
  double w1_tau = 0.0;
  complex int_xi1{0.0, 0.0};  // int_0^tau xi1 ds (trapezoid)
  std::vector<Crossing> crossings;
};

// Euler-Maruyama realization of the radial/angular SDE pair from (r, theta).
PathRecord simulate_path(const PolarPoint& start, const WedgeProblem& prob,
                         const McConfig& cfg, std::uint64_t path_index);

// Feynman-Kac mean of the boundary data f(radial exit value, face) propagated
// by the ContinuousA or ContinuousB weight.
McEstimate estimate_continuous(
    const PolarPoint& start, const WedgeProblem& prob, const McConfig& cfg,
    const std::function<complex(complex, int)>& f);

// Discontinuity-crossing estimator of the scaled diffracted field u, with
// Phi_diff = u * exp(i k r). Dirichlet only; requires both GO discontinuities
// strictly inside the wedge.
McEstimate estimate_crossing(const PolarPoint& start, const WedgeProblem& prob,
                             const McConfig& cfg);

}  // namespace wedge::randomwalk
