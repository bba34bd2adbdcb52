#pragma once

#include <functional>
#include <vector>

namespace xychain {

struct NelderMeadOptions {
  double initial_step = 0.5;
  // Stop once the spread of objective values across the simplex is below this.
  double tolerance = 1e-6;
  int max_evaluations = 2000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Minimizes `f` from `x0` with the standard Nelder-Mead simplex moves
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& options = {});

}  // namespace xychain
