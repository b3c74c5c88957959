#pragma once

#include "wedge/types.hpp"

namespace wedge::smirnov {

struct TimePoint {
  double r;
  double theta;
  double t;
  double c;  // wave speed > 0
};

// Endpoints of the Riemann-Hilbert boundary arcs on the unit circle.
struct RhData {
  complex a;
  complex b;
};

RhData make_rh_data(const WedgeProblem& prob);

// Self-similar map of (r, theta, t) into the closed unit disc.
complex z_map(const TimePoint& tp);

// Disc solution of the Riemann-Hilbert problem with prescribed boundary
// values on the circular arcs; log branch cut along the positive real axis.
complex v_tilde(complex xi, const WedgeProblem& prob);

// Time-domain step-wave solution: Riemann-Hilbert value inside the growing
// diffraction disc, geometrical-optics steps outside.
double u_time(const TimePoint& tp, const WedgeProblem& prob);

// Fourier synthesis of the harmonic field from the time-domain solution,
// with damped frequency and Richardson extrapolation in the damping.
complex phi_from_time(const PolarPoint& pt, const WedgeProblem& prob,
                      double c = 1.0, double eps_damping = 0.0);

}  // namespace wedge::smirnov
