#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace wedge {

using complex = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

enum class Bc { Dirichlet, Neumann };

// ---- error taxonomy -------------------------------------------------------

struct WedgeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleProximity : WedgeError { using WedgeError::WedgeError; };
struct OnShadowBoundary : WedgeError { using WedgeError::WedgeError; };
struct QuadratureNotConverged : WedgeError { using WedgeError::WedgeError; };
struct DomainError : WedgeError { using WedgeError::WedgeError; };
struct BranchCut : WedgeError { using WedgeError::WedgeError; };
struct SingularDirection : WedgeError { using WedgeError::WedgeError; };
struct RegimeBoundary : WedgeError { using WedgeError::WedgeError; };
struct NotRational : WedgeError { using WedgeError::WedgeError; };
struct DenominatorSingular : WedgeError { using WedgeError::WedgeError; };
struct NotImplemented : WedgeError { using WedgeError::WedgeError; };
struct PathCapped : WedgeError { using WedgeError::WedgeError; };
struct NotApplicable : WedgeError { using WedgeError::WedgeError; };
struct OutsideDisc : WedgeError { using WedgeError::WedgeError; };
struct SlowDecay : WedgeError { using WedgeError::WedgeError; };

// ---- problem definition ---------------------------------------------------

// Free region |theta| < theta_w; the scatterer occupies the complement.
// A unit plane wave arrives from direction theta_i in [0, theta_w].
struct WedgeProblem {
  double theta_w;
  double theta_i;
  double k;
  Bc bc;

  WedgeProblem(double theta_w_, double theta_i_, double k_, Bc bc_)
      : theta_w(theta_w_), theta_i(theta_i_), k(k_), bc(bc_) {
    if (!(theta_w > 0.0 && theta_w <= pi))
      throw DomainError("theta_w must lie in (0, pi]");
    if (!(theta_i >= 0.0 && theta_i <= theta_w))
      throw DomainError("theta_i must lie in [0, theta_w]");
    if (!(k > 0.0)) throw DomainError("k must be positive");
  }

  // Edge-singularity exponent and angular eigenvalue spacing.
  double delta() const { return pi / (2.0 * theta_w); }
};

struct PolarPoint {
  double r;
  double theta;
};

// One geometrical-optics plane wave: residue * exp(-i k r cos(pole - theta)),
// present at theta iff pole_angle - theta lies strictly in (-pi, pi).
struct GoTerm {
  int residue;        // +1 or -1
  double pole_angle;  // pole of the spectral function, radians
};

struct GoField {
  std::vector<GoTerm> terms;
  std::vector<double> discontinuity_angles;
};

}  // namespace wedge
