#pragma once

// Closed-form machinery for the XX chain (Delta = 0) at half filling:
// twisted single-particle modes, overlaps between twisted and untwisted
// Slater determinants, Barnes-G prefactors |A_n(alpha)|^2 and their Taylor
// coefficients, correlation-matrix charged moments, and the large-N expansion
// of the replicated overlap.
//
// Only moduli of overlaps are returned; overall phases are discarded.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace sre {

struct ModeSet {
  int n_sites = 0;
  int n_fermions = 0;
  double alpha = 0.0;
  std::vector<double> angles;    // theta_{alpha,k}, k = 1..N
  std::vector<double> energies;  // -2 cos theta
  std::vector<int> filled;       // 0-based indices of the N_F lowest modes, ascending

  double ground_energy() const;
};

/// theta_{alpha,k} = (2 pi / N)(k - (N_F + 1)/2 - alpha / 2 pi).
ModeSet make_modes(int n_sites, int n_fermions, double alpha);

/// |det M| with M_kl = {gamma_{0,k}, gamma^dag_{alpha,l}}, built explicitly.
double overlap_wick(int n_sites, double alpha);

/// Same modulus from the Cauchy-alternant trigonometric product, summed in log space.
double log_overlap_exact_product(int n_sites, double alpha);
double overlap_exact_product(int n_sites, double alpha);

/// |<<psi_0(N)^{(x) n} | psi_alpha(n N)>>| from the block-diagonalized Cauchy form.
double log_overlap_replicated_exact(int n_sites, int replicas, double alpha);
double overlap_replicated_exact(int n_sites, int replicas, double alpha);

/// Same quantity from the full (nN/2) x (nN/2) anticommutator matrix.
double overlap_replicated_wick(int n_sites, int replicas, double alpha);

/// |A_1(alpha)|^2 = 2^{-(alpha/pi)^2/2} [G(1 + alpha/2pi) G(1 - alpha/2pi)]^2, |alpha| < 2 pi.
double prefactor_a1_exact(double alpha);

/// |A_n(alpha)|^2 with h_tau = (n - 1/n)/24 and h_alpha = (alpha/pi)^2 / 8, |alpha| < pi.
double prefactor_an_exact(int n, double alpha);
double log_prefactor_an_exact(int n, double alpha);

/// log|A_n(alpha)/A_n(0)|^2 = sum_j b_{n,j} alpha^{2j} / (2j)!.
double coeffs_bnj(int n, int j);

/// |A_n(alpha)/A_n(0)|^2 = 1 + sum_j a_{n,j} alpha^{2j}.
double coeffs_anj(int n, int j);

struct PrefactorSeries {
  int n = 1;
  std::vector<double> b;  // b[j-1] = b_{n,j}
  std::vector<double> a;  // a[j-1] = a_{n,j}
};

PrefactorSeries prefactor_series(int n, int j_max);

/// Eigenvalues of the r x r ground-state correlation matrix C_jl = <c_j^dag c_l>.
Eigen::VectorXd correlation_spectrum(int n_sites, int cut);

/// Zhat_n(alpha) = e^{-i alpha r/2} prod_k [nu_k^n e^{i alpha} + (1 - nu_k)^n], with the
/// S^z_A = N_A - r/2 charge convention.
std::complex<double> correlation_matrix_moments(int n_sites, int cut, int n, double alpha);
std::complex<double> moments_from_spectrum(const Eigen::VectorXd& nu, int n, double alpha);

/// p(N_A = m), m = 0..r, from prod_k [nu_k x + 1 - nu_k].
std::vector<double> particle_number_distribution(const Eigen::VectorXd& nu);

/// Two leading orders of log|<<psi_0|psi~_alpha>>| at large N.
double asymptotic_log_overlap(int n_sites, int replicas, double alpha);

}  // namespace sre
