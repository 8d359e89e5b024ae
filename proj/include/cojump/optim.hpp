#pragma once

#include <functional>
#include <vector>

namespace cojump {

struct NelderMeadOptions {
  int max_iter = 2000;
  double ftol_rel = 1e-10;
  double xtol_abs = 1e-10;
};

struct NelderMeadResult {
  std::vector<double> x;
  double fx = 0;
  int iterations = 0;
  bool converged = false;
};

// Derivative-free simplex search. Deterministic given (x0, step).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0,
                             const std::vector<double>& step,
                             const NelderMeadOptions& opts = {});

// Central-difference Hessian of f at x.
std::vector<std::vector<double>> numerical_hessian(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x, double rel_step = 1e-4);

// Gauss-Jordan inverse for the small symmetric matrices used in
// standard-error computations. Throws on a singular matrix.
std::vector<std::vector<double>> invert_matrix(std::vector<std::vector<double>> a);

// Parallel loop with index-addressed work; results are independent of the
// thread count because every index writes to its own slot.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace cojump
