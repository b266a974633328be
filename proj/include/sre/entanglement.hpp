#pragma once

// Charge-resolved entanglement of a sector eigenstate for the bipartition
// A = {1, ..., r}, B = {r+1, ..., N}.
//
// The reduced density matrix is block diagonal in the subsystem charge. Each
// block comes from the singular values s of the amplitude matrix psi(a, b)
// restricted to that charge: p_q = sum s^2 and the normalized block spectrum is
// s^2 / p_q.
//
// U(1) inversion: q runs over -r/2, ..., r/2 in unit steps. The grid
// alpha_m = 2 pi (m - r/2) / (r + 1), m = 0..r, inverts exactly through
//   Z_n(q) = 1/(r+1) sum_m e^{-i alpha_m q} Zhat_n(alpha_m).
// Writing q = s - r/2 with integer s, the phase e^{-i alpha_m q} is applied as
// e^{-i alpha_m s} e^{i alpha_m r/2}, so half-integer charges need no special
// casing.

#include <complex>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "sre/ground_state.hpp"
#include "sre/sector_basis.hpp"

namespace sre {

struct ChargeBlock {
  int label = 0;             // 2 q_A (spin) or q_A (clock)
  double charge = 0.0;       // q_A
  double probability = 0.0;  // p_q
  Eigen::VectorXd spectrum;  // eigenvalues of rho_A(q), descending; empty when p_q < 1e-14
};

struct ChargeBlockedRdm {
  int cut = 0;
  ChargeKind kind = ChargeKind::u1_spin;
  int local_dim = 2;
  std::vector<ChargeBlock> blocks;  // ascending label

  const ChargeBlock* find(int label) const;
};

ChargeBlockedRdm charge_blocked_rdm(const SectorBasis& basis, const VectorXc& psi, int cut);
ChargeBlockedRdm charge_blocked_rdm(const GroundStateResult& psi, int cut);

/// Zhat_n(alpha) = sum_q e^{i alpha q} p_q^n Tr rho_A(q)^n.
cplx charged_moment(const ChargeBlockedRdm& rdm, int n, double alpha);

/// Z_n(q) = p_q^n Tr rho_A(q)^n for one block.
double block_partition_function(const ChargeBlock& block, int n);

struct ChargedMoments {
  int n = 1;
  std::vector<double> alpha_grid;
  std::vector<cplx> values;
};

ChargedMoments charged_moments(const ChargeBlockedRdm& rdm, int n, const std::vector<double>& grid);

/// The exact (r+1)-point U(1) grid.
std::vector<double> u1_inversion_grid(int cut);

struct ResolvedPartitionFunctions {
  std::vector<double> charges;  // -r/2, ..., r/2
  std::vector<double> values;   // Re Z_n(q)
  double max_imaginary = 0.0;   // largest |Im Z_n(q)| discarded
};

/// Requires moments on u1_inversion_grid(cut).
ResolvedPartitionFunctions invert_moments_u1(const ChargedMoments& moments, int cut);

struct ResolvedEntropies {
  int n = 2;
  std::vector<double> charges;
  std::vector<double> probability;
  std::vector<double> renyi;         // S_n(q); NaN for empty blocks
  std::vector<double> von_neumann;   // S_vN(q); NaN for empty blocks
  double total_renyi = 0.0;          // log(Zhat_n(0)) / (1 - n)
  double total_von_neumann = 0.0;    // from the full Schmidt spectrum
  double number_entropy = 0.0;       // -sum p_q log p_q
  double decomposition_residual = 0.0;
};

ResolvedEntropies resolved_entropies(const ChargeBlockedRdm& rdm, int n);

/// Zhat_n(alpha) = Tr(X_A^alpha rho_A^n) = sum_q e^{2 i pi alpha q / p} Z_n(q), 0 <= alpha < p.
cplx clock_charged_moment(const ChargeBlockedRdm& rdm, int n, int alpha);

/// Z_n(q) = (1/p) sum_alpha e^{-2 i pi alpha q / p} Zhat_n(alpha), for q = 0..p-1.
std::vector<cplx> clock_invert(const std::vector<cplx>& moments);

}  // namespace sre
