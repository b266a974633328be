#pragma once

// Lowest eigenpair of a sector Hamiltonian: dense diagonalization for small
// sectors, restarted Lanczos with full reorthogonalization otherwise.
//
// Phase convention: the largest-magnitude amplitude (first one on ties) is made
// real and positive, so overlaps are reproducible between runs.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sre/lattice_models.hpp"

namespace sre {

struct GroundStateResult {
  double energy = 0.0;
  VectorXc vector;
  double residual = 0.0;        // |H v - E v|
  double degeneracy_gap = 0.0;  // E_1 - E_0, +inf for a 1-dimensional sector
  bool degenerate = false;      // gap below LanczosOptions::degeneracy_threshold
  SectorBasisPtr basis;
  int iterations = 0;           // matrix-vector products spent (0 for dense)
};

/// Thrown when Lanczos hits its restart cap; carries the best residual reached.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

struct LanczosOptions {
  std::uint64_t seed = 0x5eed5eedULL;
  int max_krylov = 150;
  std::size_t krylov_memory_bytes = std::size_t{256} << 20;
  int max_restarts = 100;
  double tolerance = 1e-10;  // residual target relative to max(1, |E|)
  std::size_t dense_limit = 256;
  double degeneracy_threshold = 1e-8;
};

GroundStateResult lowest_eigenpair(const HamiltonianOperator& h, const LanczosOptions& opts = {});

/// <u|v>; both must live on the same sector basis.
cplx overlap(const GroundStateResult& u, const GroundStateResult& v);

/// <block^{(x) copies}|ring>, where ring lives on copies * N sites and copy mu
/// occupies sites mu N, ..., mu N + N - 1.
cplx tensor_power_overlap(const GroundStateResult& block, int copies, const GroundStateResult& ring);

/// Makes the largest-magnitude entry real positive.
void fix_phase(VectorXc& v);

}  // namespace sre
