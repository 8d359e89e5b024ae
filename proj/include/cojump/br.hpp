#pragma once

#include <vector>

#include "cojump/rng.hpp"

namespace cojump {

// Non-affine co-jump dynamics, time unit = one day:
//   d log S      = mu_r dt + sigma_t (rho_t dW1 + sqrt(1-rho_t^2) dW2)
//                  + c_r^J dJ_r + c_r^JJ dJ_rs
//   d log sigma^2= (m0 + m1 log sigma^2) dt + Lambda dW1
//                  + c_s^J dJ_s + c_s^JJ dJ_rs
//   rho_t        = clamp(rho0 + rho1 sigma_t, -1, 1)
// J_r, J_s, J_rs are independent Poisson counters; arrivals per step use
// the Bernoulli(lambda dt) approximation. Independent jump sizes are
// N(mu_J*, sigma_J*^2); co-jump sizes are bivariate normal with the
// state-dependent moments
//   mean_r = mu_JJr0 + mu_JJr1 sigma_t,  sd_r = sigma_JJr0 + sigma_JJr1 sigma_t^sigma_JJr2,
//   mean_s = mu_JJsigma,                 sd_s = sigma_JJsigma,
//   corr    = rho_J.
struct BrParams {
  double mu_r = 0;
  double rho0 = 0;
  double rho1 = 0;
  double m0 = 0;
  double m1 = 0;
  double Lambda = 0;
  double mu_Jr = 0;
  double sigma_Jr = 0;
  double mu_JJr0 = 0;
  double mu_JJr1 = 0;
  double sigma_JJr0 = 0;
  double sigma_JJr1 = 0;
  double sigma_JJr2 = 0;
  double mu_Jsigma = 0;
  double sigma_Jsigma = 0;
  double mu_JJsigma = 0;
  double sigma_JJsigma = 0;
  double rho_J = 0;
  double lambda_r = 0;
  double lambda_sigma = 0;
  double lambda_rsigma = 0;

  void validate() const;  // intensities >= 0, |rho_J| <= 1, sds >= 0
};

struct BrSimResult {
  std::vector<double> returns;  // log-return per step, length T
  std::vector<double> sigma;    // spot vol per step, length T+1
  long n_jumps_r = 0;
  long n_jumps_sigma = 0;
  long n_cojumps = 0;
};

// Nine draws per step in fixed order regardless of which channels fire.
BrSimResult simulate_br(const BrParams& params, double sigma0, long horizon,
                        double dt, RngStream rng);

}  // namespace cojump
