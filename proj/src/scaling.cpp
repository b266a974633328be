#include "sre/scaling.hpp"

#include <cmath>
#include <stdexcept>

#include "sre/special_functions.hpp"

namespace sre {

using constants::pi;

double chord_length(double n_sites, double cut) { return n_sites / pi * std::sin(pi * cut / n_sites); }

double k_ell(double g, double length, double cut, Geometry geometry) {
  if (!(g > 0.0 && g < 1.0)) throw std::invalid_argument("k_ell: need 0 < g < 1");
  const double w = geometry == Geometry::finite_ring ? chord_length(length, cut)
                                                     : length / pi * std::sinh(pi * cut / length);
  if (!(w > 1.0)) throw std::invalid_argument("k_ell: chord length must exceed 1");
  return std::log(w) / (2.0 * pi * pi * g);
}

double h_alpha_u1(double alpha, double g) {
  const double a = alpha / (2.0 * pi);
  return a * a / (4.0 * g);
}

double h_tau(int n, double central_charge) { return central_charge / 24.0 * (n - 1.0 / n); }

double h_alpha_clock(int alpha, int p) { return alpha * (p - alpha) / (2.0 * p * (p + 2.0)); }

double h_sigma(int p) { return (p - 1.0) / (2.0 * p * (p + 2.0)); }

DimensionSet u1_dimensions(int n, double alpha, double g, double central_charge) {
  DimensionSet d;
  d.h_alpha = h_alpha_u1(alpha, g);
  d.h_tau = h_tau(n, central_charge);
  return d;
}

DimensionSet clock_dimensions(int n, int alpha, int p, double central_charge) {
  DimensionSet d;
  d.h_tau = h_tau(n, central_charge);
  d.h_alpha_clock = h_alpha_clock(alpha, p);
  d.h_sigma = h_sigma(p);
  return d;
}

double q_poly(int j, double x) {
  if (j < 0) throw std::invalid_argument("q_poly: j must be >= 0");
  const double mx2 = -x * x;
  CompensatedSum s;
  for (int p = 0; p <= j; ++p) {
    const double c = std::exp(std::lgamma(2.0 * j + 1) - std::lgamma(2.0 * (j - p) + 1) - std::lgamma(p + 1.0));
    s += std::round(c) * std::pow(mx2, j - p) / std::pow(2.0, p);
  }
  return s.value();
}

double i_series(double k, double x, const std::vector<double>& coeffs, int j_max) {
  if (!(k > 0.0)) throw std::invalid_argument("i_series: K must be positive");
  if (j_max < 0 || static_cast<std::size_t>(j_max) > coeffs.size()) {
    throw std::invalid_argument("i_series: J_max exceeds the available coefficients");
  }
  CompensatedSum s;
  s += 1.0;
  double kp = 1.0;
  for (int j = 1; j <= j_max; ++j) {
    kp *= k;
    s += coeffs[static_cast<std::size_t>(j - 1)] * q_poly(j, x) / kp;
  }
  return s.value();
}

double rho_x(double k, double x, const std::vector<double>& coeffs_1, int j_max) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * pi) * i_series(k, x, coeffs_1, j_max);
}

double cn_correction(int n, double k, double x, const std::vector<double>& coeffs_1,
                     const std::vector<double>& coeffs_n, int j_max) {
  if (n < 2) throw std::invalid_argument("cn_correction: n must be >= 2");
  const double i_n = i_series(k / n, x * std::sqrt(static_cast<double>(n)), coeffs_n, j_max);
  const double i_1 = i_series(k, x, coeffs_1, j_max);
  if (!(i_n > 0.0) || !(i_1 > 0.0)) throw std::invalid_argument("cn_correction: I series is not positive");
  return (std::log(i_n) - n * std::log(i_1)) / (1.0 - n);
}

double cn_leading(int n, double k, double x, double a1, double an1) {
  if (n < 2) throw std::invalid_argument("cn_leading: n must be >= 2");
  const double big_a = (an1 - a1) / (1.0 - n);
  const double big_b = (n * an1 - a1) / (1.0 - n);
  return n / k * (big_a - big_b * x * x);
}

double resolved_entropy_prediction(double sn_total, double k, double q, int n,
                                   const std::vector<double>& coeffs_1,
                                   const std::vector<double>& coeffs_n, int j_max) {
  if (!(k > 0.0)) throw std::invalid_argument("resolved_entropy_prediction: K must be positive");
  return sn_total - 0.5 * std::log(2.0 * pi * k) + std::log(static_cast<double>(n)) / (2.0 * (1.0 - n)) +
         cn_correction(n, k, q / std::sqrt(k), coeffs_1, coeffs_n, j_max);
}

std::vector<double> clock_pq_prediction(int p, double n_sites, double cut, double a1sq_1) {
  if (p < 2) throw std::invalid_argument("clock_pq_prediction: p must be >= 2");
  const double w = chord_length(n_sites, cut);
  if (!(w > 1.0)) throw std::invalid_argument("clock_pq_prediction: chord length must exceed 1");
  const double amp = a1sq_1 * std::pow(w, -4.0 * h_sigma(p));
  std::vector<double> out(static_cast<std::size_t>(p));
  for (int q = 0; q < p; ++q) out[static_cast<std::size_t>(q)] = (1.0 + 2.0 * std::cos(2.0 * pi * q / p) * amp) / p;
  return out;
}

double clock_cn_prediction(int p, double n_sites, double cut, int n, double ratio_1, double ratio_n) {
  if (n < 2) throw std::invalid_argument("clock_cn_prediction: n must be >= 2");
  const double w = chord_length(n_sites, cut);
  if (!(w > 1.0)) throw std::invalid_argument("clock_cn_prediction: chord length must exceed 1");
  const double hs = h_sigma(p);
  return (ratio_n * std::pow(w, -4.0 * hs / n) - n * ratio_1 * std::pow(w, -4.0 * hs)) / (1.0 - n);
}

}  // namespace sre
