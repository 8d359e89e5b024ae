#pragma once

#include <string>
#include <vector>

#include "cojump/rng.hpp"
#include "cojump/series.hpp"

namespace cojump {

enum class ModelFlavor { SV, SVJ, SVCJ };

std::string to_string(ModelFlavor f);
ModelFlavor flavor_from_string(const std::string& s);

// Daily Euler-discretized dynamics
//   Y_t = mu + sqrt(V_{t-1}) eps_y + Zy_t J_t
//   V_t = alpha + beta V_{t-1} + sigma_v sqrt(V_{t-1}) eps_v + Zv_t J_t
// with corr(eps_y, eps_v) = rho, J_t ~ Bernoulli(lambda),
// Zv ~ Exp(mu_v), Zy | Zv ~ N(mu_y + rho_j Zv, sigma_y^2).
struct SvcjParams {
  double mu = 0;
  double mu_y = 0;
  double sigma_y = 1;
  double lambda = 0;
  double alpha = 0;
  double beta = 0;
  double rho = 0;
  double sigma_v = 0;
  double rho_j = 0;
  double mu_v = 0;

  // Throws std::invalid_argument on hard violations; appends warnings
  // (e.g. |beta| >= 1) when a sink is provided.
  void validate(std::vector<std::string>* warnings = nullptr) const;

  // Long-run mean of V implied by the recursion, (alpha + lambda mu_v)/(1 - beta).
  double long_run_variance() const;
};

// Pins the parameters a flavor does not use: SV has no jumps at all,
// SVJ has return jumps only (Zv identically 0).
SvcjParams apply_flavor(SvcjParams p, ModelFlavor flavor);

struct LatentPath {
  std::vector<double> V;    // length T+1, V[0] is the initial variance
  std::vector<int> J;       // length T
  std::vector<double> Zy;   // length T
  std::vector<double> Zv;   // length T
};

struct SvcjSimResult {
  ReturnSeries returns;
  LatentPath latent;
};

// Draw layout per step is fixed (eps_y, eps_v, jump uniform, Zv, Zy) no
// matter the flavor, so SVCJ with lambda = 0 and SV produce identical
// paths from the same stream.
SvcjSimResult simulate_svcj(const SvcjParams& params, ModelFlavor flavor,
                            double v0, int horizon, RngStream rng,
                            Units units = Units::percent,
                            Date start = Date{2014, 8, 1});

}  // namespace cojump
