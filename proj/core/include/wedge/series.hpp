#pragma once

#include <vector>

#include "wedge/types.hpp"

namespace wedge::series {

struct SeriesSpec {
  int n_terms = 100;
  double underflow_cutoff = 1e-290;
};

struct LineSource {
  double r_i;
  double theta_i;
  complex amplitude;
};

enum class Face { Top, Bottom };

// Plane-wave eigenfunction series for the total field.
complex phi_series(const PolarPoint& pt, const WedgeProblem& prob,
                   const SeriesSpec& spec = {});

// Line-source eigenfunction series (Bessel inside, Hankel outside).
complex phi_line_source_series(const PolarPoint& pt, const WedgeProblem& prob,
                               const LineSource& src,
                               const SeriesSpec& spec = {});

// Coefficient-times-Hankel products for a receding source; these approach the
// plane-wave series coefficients as r_i grows.
std::vector<complex> plane_wave_limit_check(const WedgeProblem& prob, int n,
                                            const std::vector<double>& r_i_list);

// Transformed boundary data on the faces theta = +theta_w (Top) and
// theta = -theta_w (Bottom).
complex kl_boundary_data(complex nu, const WedgeProblem& prob, Face face);

// Transform-domain angular solution interpolating the face data.
complex kl_psi(complex nu, double theta, const WedgeProblem& prob);

// Numerical inverse transform along the imaginary axis with a Gaussian
// convergence factor; diagnostic-grade (target 1e-3 against phi_series).
complex kl_inverse_numeric(const PolarPoint& pt, const WedgeProblem& prob,
                           double eps = 1e-3, double t_max = 40.0);

}  // namespace wedge::series
