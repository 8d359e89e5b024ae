#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cojump/rng.hpp"
#include "cojump/series.hpp"
#include "cojump/svcj.hpp"

namespace cojump {

struct PriorSpec {
  // mu ~ N(mean, var)
  double mu_mean = 0, mu_var = 25;
  // (alpha, beta) ~ N(0, ab_var * I)
  double ab_var = 1;
  // sigma_v^2 ~ InvGamma(shape, scale)
  double sigma_v2_shape = 2.5, sigma_v2_scale = 0.1;
  // mu_y ~ N(mean, var)
  double mu_y_mean = 0, mu_y_var = 100;
  // sigma_y^2 ~ InvGamma(shape, scale)
  double sigma_y2_shape = 10, sigma_y2_scale = 40;
  // rho ~ Uniform(-1, 1) (flat; bounds fixed)
  // rho_j ~ N(mean, var)
  double rho_j_mean = 0, rho_j_var = 0.5;
  // mu_v ~ InvGamma(shape, scale)
  double mu_v_shape = 10, mu_v_scale = 20;
  // lambda ~ Beta(a, b)
  double lambda_a = 2, lambda_b = 40;

  void validate() const;
  // Named-key override used by the CLI (--prior key=value).
  void set(const std::string& key, double value);
};

struct McmcConfig {
  int iterations = 5000;
  int burn_in = 1000;
  double mh_target_accept = 0.35;
  RngStream seed;
  int latent_thin = 5;  // parameter draws are never thinned

  void validate() const;
};

struct PosteriorChain {
  ModelFlavor flavor = ModelFlavor::SVCJ;
  McmcConfig config;
  std::vector<SvcjParams> draws;         // every iteration
  std::vector<LatentPath> latent_draws;  // thinned by config.latent_thin
  std::map<std::string, double> acceptance_rates;

  // Post-burn-in posterior means of the latent path.
  std::vector<double> jump_prob;  // length T
  std::vector<double> v_hat;      // length T+1
  std::vector<double> zy_hat;     // length T

  std::size_t data_length() const { return jump_prob.size(); }
};

struct ParamSummary {
  double mean = 0;
  double q025 = 0;
  double q975 = 0;
  bool contains(double x) const { return q025 <= x && x <= q975; }
};

struct PosteriorSummary {
  std::vector<std::pair<std::string, ParamSummary>> params;
  std::vector<double> jump_prob;
  std::vector<double> v_hat;
  std::vector<double> zy_hat;
  std::vector<int> jump_flag;  // 1{jump_prob > zeta}, see detect_jumps
  double lambda_hat = 0;
  double mse = 0;

  const ParamSummary& at(const std::string& name) const;
};

// Gibbs sampler with Metropolis-Hastings sub-steps. Conjugate draws for
// mu, (alpha, beta), mu_y, sigma_y^2, rho_j, mu_v, lambda; joint draws of
// (J_t, Zv_t, Zy_t); random-walk MH for rho and each V_t (on log V with
// Jacobian); independence MH for sigma_v^2 with a moment-matched
// inverse-gamma proposal. Block methods are public so each full
// conditional can be unit tested in isolation.
class SvcjGibbs {
 public:
  SvcjGibbs(std::vector<double> y, ModelFlavor flavor, PriorSpec priors,
            McmcConfig config);

  void sweep(bool adapt);

  void draw_mu();
  void draw_alpha_beta();
  void draw_mu_y();
  void draw_sigma_y2();
  void draw_rho_j();
  void draw_mu_v();
  void draw_lambda();
  void draw_jumps_and_sizes();
  void draw_rho(bool adapt);
  void draw_sigma_v2();
  void draw_variance_path(bool adapt);

  double loglik() const;

  const SvcjParams& params() const { return params_; }
  SvcjParams& params() { return params_; }
  LatentPath& latent() { return latent_; }
  const std::vector<double>& data() const { return y_; }
  Rng& rng() { return rng_; }
  ModelFlavor flavor() const { return flavor_; }

  double acceptance(const std::string& block) const;
  std::map<std::string, double> acceptance_rates() const;

 private:
  struct Resid {
    double e1;
    double e2;
  };
  Resid resid(std::size_t t) const;
  double site_logdensity(std::size_t t) const;  // factor f(Y_t, V_t | V_{t-1})

  std::vector<double> y_;
  ModelFlavor flavor_;
  PriorSpec priors_;
  McmcConfig config_;
  Rng rng_;
  SvcjParams params_;
  LatentPath latent_;

  double rho_step_ = 0.05;
  std::vector<double> v_step_;
  long iter_count_ = 0;

  struct Counter {
    long accepted = 0;
    long proposed = 0;
  };
  std::map<std::string, Counter> accept_;
};

PosteriorChain fit_svcj(const ReturnSeries& returns, ModelFlavor flavor,
                        const PriorSpec& priors, const McmcConfig& config);

// zeta is the largest candidate threshold for which the flagged fraction
// still reaches lambda_hat; days sharing the boundary probability are all
// flagged. Returns all zeros when no threshold attains the target.
std::vector<int> detect_jumps(const std::vector<double>& jump_probs,
                              double lambda_hat);

PosteriorSummary summarize(const PosteriorChain& chain,
                           const ReturnSeries& returns);

// eps_t = (Y_t - mu_hat - Zy_hat_t J_flag_t) / sqrt(Vhat_{t-1})
std::vector<double> standardized_residuals(const ReturnSeries& returns,
                                           const PosteriorSummary& summary);

// Sorted residuals against standard-normal quantiles at (i - 0.5)/n.
std::vector<std::pair<double, double>> qq_points(
    const std::vector<double>& residuals);

double mse(const ReturnSeries& returns, const PosteriorSummary& summary);

}  // namespace cojump
