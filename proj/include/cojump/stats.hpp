#pragma once

#include <cstddef>
#include <vector>

namespace cojump {

double normal_pdf(double x);
double normal_cdf(double x);
double log_normal_cdf(double x);  // stable for very negative x

// AS241 (Wichura) inverse of the standard normal CDF, ~1e-15 accuracy.
double normal_quantile(double p);

// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

double chi_square_cdf(double x, double dof);

// Density of the Student-t standardized to unit variance (nu > 2).
double std_t_log_pdf(double x, double nu);

// E|Z| for the unit-variance Student-t.
double abs_moment_std_t(double nu);

double mean(const std::vector<double>& x);
double variance(const std::vector<double>& x);  // denominator n-1

// Linear-interpolation (type 7) sample quantile, q in [0,1].
double quantile(std::vector<double> x, double q);

// Kolmogorov-Smirnov distance of a sample against the standard normal
// or against the uniform on [0,1].
double ks_distance_normal(std::vector<double> x);
double ks_distance_uniform(std::vector<double> x);

}  // namespace cojump
