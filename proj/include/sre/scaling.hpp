#pragma once

// Universal scaling forms: conformal dimensions, the variance scale K, the
// q_j polynomials and the 1/K series for the charge distribution and the
// resolved Renyi entropies, plus the clock-chain predictions.
//
// Coefficient vectors are indexed from j = 1: coeffs[j-1] = a_{n,j}.

#include <vector>

namespace sre {

enum class Geometry {
  finite_ring,   // length N at zero temperature, chord (N/pi) sin(pi r/N)
  thermal_line   // infinite line at inverse temperature beta, (beta/pi) sinh(pi l/beta)
};

/// (N/pi) sin(pi r / N).
double chord_length(double n_sites, double cut);

/// K = log(chord) / (2 pi^2 g); `length` is N or beta. Rejects chord <= 1.
double k_ell(double g, double length, double cut, Geometry geometry = Geometry::finite_ring);

struct DimensionSet {
  double h_alpha = 0.0;        // (alpha / 2pi)^2 / (4 g)
  double h_tau = 0.0;          // (c/24)(n - 1/n)
  double h_alpha_clock = 0.0;  // alpha (p - alpha) / (2 p (p+2))
  double h_sigma = 0.0;        // (p - 1) / (2 p (p+2))
};

double h_alpha_u1(double alpha, double g);
double h_tau(int n, double central_charge);
double h_alpha_clock(int alpha, int p);
double h_sigma(int p);

DimensionSet u1_dimensions(int n, double alpha, double g, double central_charge = 1.0);
DimensionSet clock_dimensions(int n, int alpha, int p, double central_charge);

/// q_j(x) = sum_{p=0}^{j} (2j)! / ((2j - 2p)! p!) (-x^2)^{j-p} / 2^p.
double q_poly(int j, double x);

/// 1 + sum_{j=1}^{J_max} a_j q_j(x) / K^j.
double i_series(double k, double x, const std::vector<double>& coeffs, int j_max);

/// e^{-x^2/2} / sqrt(2 pi) times the n = 1 series.
double rho_x(double k, double x, const std::vector<double>& coeffs_1, int j_max);

/// c_n(K, x) = [log I_n(K/n, x sqrt(n)) - n log I_1(K, x)] / (1 - n).
double cn_correction(int n, double k, double x, const std::vector<double>& coeffs_1,
                     const std::vector<double>& coeffs_n, int j_max);

/// (n/K)(A_n - B_n x^2), A_n = (a_{n,1} - a_1)/(1-n), B_n = (n a_{n,1} - a_1)/(1-n).
double cn_leading(int n, double k, double x, double a1, double an1);

/// S_n - log(2 pi K)/2 + log(n) / (2(1-n)) + c_n(K, q / sqrt(K)).
double resolved_entropy_prediction(double sn_total, double k, double q, int n,
                                   const std::vector<double>& coeffs_1,
                                   const std::vector<double>& coeffs_n, int j_max);

/// p_q ~ (1/p)[1 + 2 cos(2 pi q/p) |A_1(1)|^2 w^{-4 h_sigma}], q = 0..p-1.
std::vector<double> clock_pq_prediction(int p, double n_sites, double cut, double a1sq_1);

/// c_n(L, l) = [ratio_n w^{-4 h_sigma/n} - n ratio_1 w^{-4 h_sigma}] / (1 - n),
/// ratio_m = |A_m(1)/A_m(0)|^2.
double clock_cn_prediction(int p, double n_sites, double cut, int n, double ratio_1, double ratio_n);

}  // namespace sre
