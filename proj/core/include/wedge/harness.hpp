#pragma once

#include <set>
#include <string>
#include <vector>

#include "wedge/types.hpp"

namespace wedge::harness {

struct PairReport {
  std::string method_a;
  std::string method_b;
  double max_abs_diff = 0.0;
  double mean_abs_diff = 0.0;
  double threshold = 0.0;
  bool pass = false;
  bool informational = false;
};

struct Report {
  std::vector<PairReport> pairs;
  bool all_pass() const {
    for (const PairReport& p : pairs)
      if (!p.pass && !p.informational) return false;
    return true;
  }
};

// Known method names: sdc, series, halfplane, gtd, utd, kl, mc, smirnov.
complex evaluate_method(const std::string& method, const PolarPoint& pt,
                        const WedgeProblem& prob, std::uint64_t seed = 0);

// Pairwise comparison of total-field values across methods at the given
// points, with per-pair pass thresholds by method class.
Report cross_compare(const std::vector<PolarPoint>& points,
                     const WedgeProblem& prob,
                     const std::set<std::string>& methods);

std::string report_to_json(const Report& report);

// Green-operator spectral recovery at complex angle z from field data on the
// theta = 0 ray; returns (1/2) S_0(z)[Phi], which should equal spectral_s(z).
complex green_operator_s0(complex z, const WedgeProblem& prob,
                          double r_max = 0.0, int nodes_per_panel = 12);

}  // namespace wedge::harness
