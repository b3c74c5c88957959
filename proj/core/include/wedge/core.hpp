#pragma once

#include <vector>

#include "wedge/types.hpp"

namespace wedge::core {

// Spectral function s(z) whose Sommerfeld-contour integral reproduces the
// field. Dirichlet: delta cos(delta theta_i) / (sin(delta z) - sin(delta
// theta_i)); Neumann: delta cos(delta z) / (same denominator).
complex spectral_s(complex z, const WedgeProblem& prob,
                   double pole_floor = 1e-13);

// All poles p of s with p - theta in (-pi, pi) strictly, with residues.
std::vector<GoTerm> go_poles_in_window(double theta, const WedgeProblem& prob,
                                       double boundary_tol = 1e-10);

// Geometrical-optics field: sum of residue * exp(-i k r cos(p - theta)).
complex go_field(const PolarPoint& pt, const WedgeProblem& prob);

// Shadow/reflection boundaries strictly inside (-theta_w, theta_w), sorted.
std::vector<double> go_discontinuities(const WedgeProblem& prob);

}  // namespace wedge::core
