#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wedge/types.hpp"

namespace wedge::wienerhopf {

struct ImageGrid {
  double re_min, re_max, im_min, im_max;
  int width, height;
  std::vector<std::uint8_t> pixels;  // RGB, row-major, top row first

  ImageGrid(double re_min_, double re_max_, double im_min_, double im_max_,
            int width_, int height_)
      : re_min(re_min_), re_max(re_max_), im_min(im_min_), im_max(im_max_),
        width(width_), height(height_) {
    if (width < 16 || height < 16)
      throw DomainError("ImageGrid: width and height must be >= 16");
    if (!(re_max > re_min && im_max > im_min))
      throw DomainError("ImageGrid: degenerate window");
    pixels.assign(std::size_t(3) * width * height, 0);
  }
};

struct Kernels {
  complex f1, f2, f3;
};

// Conformal map eta(alpha) = cos((theta_w/pi) arccos(alpha)); branch cut on
// (-inf, -1].
complex eta_of_alpha(complex alpha, const WedgeProblem& prob);

// Inverse map alpha(eta) = cos((pi/theta_w) arccos(eta)).
complex alpha_of_eta(complex eta, const WedgeProblem& prob);

// Kernel trio f1 = sqrt(1 - eta^2) (branch with f1(0) = 1),
// f2 = eta cos(theta_w) + f1 sin(theta_w), f3 = eta sin(theta_w) - f1
// cos(theta_w).
Kernels f_kernels(complex eta, const WedgeProblem& prob);

// Multiplicative factorization of f1(eta(alpha)) into lower/upper factors.
std::pair<complex, complex> f1_factors(complex alpha,
                                       const WedgeProblem& prob);

// Factorization of f3(eta(alpha)) via f3+(a) = f1-(-a), f3-(a) = f1+(-a).
std::pair<complex, complex> f3_factors(complex alpha,
                                       const WedgeProblem& prob);

// Spectral function assembled from the closed-form factorized solutions;
// must coincide with core::spectral_s.
complex wh_spectral(complex z, const WedgeProblem& prob);

// Domain-coloring phase portrait: hue from arg f, singular pixels black.
ImageGrid phase_portrait(const std::function<complex(complex)>& f,
                         ImageGrid grid);

// Binary PPM (P6) writer with header "P6\n<w> <h>\n255\n".
void write_ppm(const ImageGrid& grid, const std::string& path);

}  // namespace wedge::wienerhopf
