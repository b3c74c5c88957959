#include "wedge/wienerhopf.hpp"

#include <cmath>
#include <fstream>

namespace wedge::wienerhopf {

namespace {

const complex I{0.0, 1.0};

// Principal arccos satisfying pi - arccos(x) = arccos(-x) on (-1, 1).
complex arccos_c(complex w) {
  return -I * std::log(w + I * std::sqrt(1.0 - w * w));
}

void check_alpha_cut(complex alpha) {
  if (alpha.real() <= -1.0 && std::abs(alpha.imag()) < 1e-14)
    throw BranchCut("alpha on the branch cut (-inf, -1]");
}

}  // namespace

complex eta_of_alpha(complex alpha, const WedgeProblem& prob) {
  check_alpha_cut(alpha);
  return std::cos((prob.theta_w / pi) * arccos_c(alpha));
}

complex alpha_of_eta(complex eta, const WedgeProblem& prob) {
  return std::cos((pi / prob.theta_w) * arccos_c(eta));
}

Kernels f_kernels(complex eta, const WedgeProblem& prob) {
  const complex f1 = std::sqrt(1.0 - eta * eta);
  return {f1, eta * std::cos(prob.theta_w) + f1 * std::sin(prob.theta_w),
          eta * std::sin(prob.theta_w) - f1 * std::cos(prob.theta_w)};
}

std::pair<complex, complex> f1_factors(complex alpha,
                                       const WedgeProblem& prob) {
  check_alpha_cut(alpha);
  if (alpha.real() >= 1.0 && std::abs(alpha.imag()) < 1e-14 &&
      std::abs(alpha - 1.0) > 1e-9)
    throw BranchCut("alpha on the branch cut [1, inf)");
  const complex minus = std::sqrt(0.5 * (1.0 - alpha));
  complex plus;
  if (std::abs(alpha - 1.0) < 1e-9) {
    plus = 2.0 * prob.theta_w / pi;  // removable point
  } else {
    plus = std::sin((prob.theta_w / pi) * arccos_c(alpha)) / minus;
  }
  return {minus, plus};
}

std::pair<complex, complex> f3_factors(complex alpha,
                                       const WedgeProblem& prob) {
  auto [m, p] = f1_factors(-alpha, prob);
  return {m, p};  // (f3_plus, f3_minus)
}

complex wh_spectral(complex z, const WedgeProblem& prob) {
  const double d = prob.delta();
  const complex ik = I * prob.k;
  const complex den = std::cos(2.0 * d * z) - std::cos(2.0 * d * prob.theta_i);
  if (std::abs(den) < 1e-13)
    throw PoleProximity("wh_spectral: z too close to a pole");

  complex v, sinz_u;
  if (prob.bc == Bc::Dirichlet) {
    v = 2.0 * d * std::sin(2.0 * d * prob.theta_i) / (ik * den);
    sinz_u = -4.0 * d * std::cos(d * prob.theta_i) * std::sin(d * z) /
             (ik * den);
  } else {
    v = 4.0 * d * std::sin(d * prob.theta_i) * std::cos(d * z) / (ik * den);
    sinz_u = -2.0 * d * std::sin(2.0 * d * z) / (ik * den);
  }
  return 0.5 * ik * (sinz_u - v);
}

namespace {

void hsv_to_rgb(double h, std::uint8_t* rgb) {
  // h in [0, 1); s = v = 1.
  const double x6 = 6.0 * h;
  const int sector = int(x6) % 6;
  const double f = x6 - std::floor(x6);
  const double q = 1.0 - f, t = f;
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = 1; g = t; b = 0; break;
    case 1: r = q; g = 1; b = 0; break;
    case 2: r = 0; g = 1; b = t; break;
    case 3: r = 0; g = q; b = 1; break;
    case 4: r = t; g = 0; b = 1; break;
    default: r = 1; g = 0; b = q; break;
  }
  rgb[0] = std::uint8_t(std::lround(255.0 * r));
  rgb[1] = std::uint8_t(std::lround(255.0 * g));
  rgb[2] = std::uint8_t(std::lround(255.0 * b));
}

}  // namespace

ImageGrid phase_portrait(const std::function<complex(complex)>& f,
                         ImageGrid grid) {
  const double dx = (grid.re_max - grid.re_min) / grid.width;
  const double dy = (grid.im_max - grid.im_min) / grid.height;
  for (int row = 0; row < grid.height; ++row) {
    const double y = grid.im_max - (row + 0.5) * dy;  // top row first
    for (int col = 0; col < grid.width; ++col) {
      const double x = grid.re_min + (col + 0.5) * dx;
      std::uint8_t* px = &grid.pixels[3 * (std::size_t(row) * grid.width + col)];
      complex w;
      try {
        w = f(complex(x, y));
      } catch (const WedgeError&) {
        px[0] = px[1] = px[2] = 0;
        continue;
      }
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) ||
          (w.real() == 0.0 && w.imag() == 0.0)) {
        px[0] = px[1] = px[2] = 0;
        continue;
      }
      double hue = std::arg(w) / (2.0 * pi);  // arg in (-pi, pi]
      hue -= std::floor(hue);
      hsv_to_rgb(hue, px);
    }
  }
  return grid;
}

void write_ppm(const ImageGrid& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("write_ppm: cannot open " + path);
  out << "P6\n" << grid.width << " " << grid.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(grid.pixels.data()),
            std::streamsize(grid.pixels.size()));
}

}  // namespace wedge::wienerhopf
