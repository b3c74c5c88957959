#pragma once

#include "wedge/types.hpp"

namespace wedge::gtd {

enum class UtdRegime { TwoReflections, OneReflection };

// Regime of the uniform approximation for the given incidence angle.
UtdRegime utd_regime(const WedgeProblem& prob);

// Far-field diffraction coefficient D(theta, theta_i) =
// e^{i pi/4}/sqrt(2 pi) [s(theta - pi) - s(theta + pi)].
complex diffraction_coefficient(double theta, double theta_i,
                                const WedgeProblem& prob);

// Leading-order ray approximation: GO plus a cylindrical diffracted wave.
complex phi_gtd(const PolarPoint& pt, const WedgeProblem& prob);

// Uniform (Fresnel-corrected) approximation, finite across shadow boundaries.
complex phi_utd(const PolarPoint& pt, const WedgeProblem& prob);

}  // namespace wedge::gtd
