#pragma once

#include <string>

#include "wedge/types.hpp"

namespace wedge::sommerfeld {

enum class QuadRule { GaussLegendrePanels, TanhSinh };

struct QuadratureSpec {
  int base_nodes = 256;
  int refine_factor = 8;
  double pole_distance_threshold = 0.05;
  QuadRule rule = QuadRule::GaussLegendrePanels;
};

struct FieldResult {
  complex total;
  complex go;
  complex diffracted;
  std::string method;
  double est_error = 0.0;
};

// Diffracted field from the steepest-descent-contour integral through the
// saddle, with Gudermannian contour parametrization.
complex phi_diff_sdc(const PolarPoint& pt, const WedgeProblem& prob,
                     const QuadratureSpec& q = {}, double* est_error = nullptr);

// Total field: GO window sum plus the SDC diffracted integral.
FieldResult phi_total(const PolarPoint& pt, const WedgeProblem& prob,
                      const QuadratureSpec& q = {});

// Direct quadrature over the truncated loop contours in the decay strips;
// diagnostic cross-check for small kr.
complex phi_gamma_plus_direct(const PolarPoint& pt, const WedgeProblem& prob,
                              const QuadratureSpec& q = {});

// Closed-form half-plane (theta_w = pi) solution in Fresnel integrals.
complex phi_halfplane_fresnel(const PolarPoint& pt, const WedgeProblem& prob);

// Fresnel building block: e^{-ikr cos(lambda)} [1/2 + pi^{-1/2} e^{-i pi/4}
// F(sqrt(2kr) cos(lambda/2))].
complex phi_f(double r, double lambda, double k);

}  // namespace wedge::sommerfeld
