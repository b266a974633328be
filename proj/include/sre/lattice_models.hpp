#pragma once

// Sector-restricted Hamiltonians for the XXZ chain and the Z_p clock chain.
//
// XXZ: H = -1/2 sum_j [sx sx + sy sy + Delta (sz sz - 1)] on a ring, with the
// twist e^{+-i alpha} on the hopping across bond (N, 1). Replicated systems are
// always realized as one ring of n N sites carrying the full twist; that ring is
// unitarily equivalent to n copies glued cyclically at their boundaries.
//
// Clock: H = -sum_j sum_{k=1}^{p-1} [(Z_j Z_{j+1}^dag)^k + X_j^k] / sin(pi k / p),
// written in the X eigenbasis so that X^k is diagonal and the charge is the digit
// sum. An integer twist alpha multiplies the (N, 1) bond term by e^{-2 i pi alpha k / p}.

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "sre/sector_basis.hpp"

namespace sre {

using cplx = std::complex<double>;
using VectorXc = Eigen::VectorXcd;
using MatrixXc = Eigen::MatrixXcd;

enum class TwistGauge {
  single_bond,  // whole phase on bond (N, 1)
  uniform       // phase alpha / N on every bond
};

struct XxzParams {
  int n_sites = 0;
  double delta = 0.0;
  double gamma = 0.5 * 3.14159265358979323846;  // Delta = -cos(gamma)
  double g = 0.5;                                // (pi - gamma) / pi
  double alpha = 0.0;
  int replicas = 1;
  TwistGauge gauge = TwistGauge::single_bond;

  static XxzParams from_delta(int n_sites, double delta, double alpha = 0.0, int replicas = 1);
  static XxzParams from_gamma(int n_sites, double gamma, double alpha = 0.0, int replicas = 1);

  /// Checks -1 < Delta < 1, Delta = -cos(gamma) = cos(pi g), N >= 2, n >= 1.
  void validate() const;
  int ring_sites() const { return n_sites * replicas; }
};

struct ClockParams {
  int p = 2;
  int n_sites = 0;
  int alpha = 0;
  int replicas = 1;
  double central_charge = 1.0;

  /// Z_p parafermion value 2(p-1)/(p+2). Not derived here; supplied as a default.
  static double parafermion_central_charge(int p) { return 2.0 * (p - 1) / (p + 2); }
  static ClockParams make(int p, int n_sites, int alpha = 0, int replicas = 1);

  void validate() const;
  int ring_sites() const { return n_sites * replicas; }
};

struct MatrixElement {
  Config column;
  cplx value;
};

/// Emits the nonzero elements <row|H|column> of one row.
using RowGenerator = std::function<void(Config row, std::vector<MatrixElement>& out)>;

class HamiltonianOperator {
 public:
  using SparseMatrix = Eigen::SparseMatrix<cplx, Eigen::RowMajor, std::int64_t>;

  /// Rows are stored as a sparse matrix when dim <= store_limit, otherwise
  /// they are regenerated on every apply.
  HamiltonianOperator(SectorBasisPtr basis, RowGenerator rows, std::size_t store_limit = 20000);

  const SectorBasis& basis() const { return *basis_; }
  const SectorBasisPtr& basis_ptr() const { return basis_; }
  std::size_t dimension() const { return basis_->size(); }
  bool hermitian() const { return true; }
  bool matrix_free() const { return !stored_; }

  void apply(const VectorXc& in, VectorXc& out) const;
  VectorXc operator*(const VectorXc& in) const {
    VectorXc out;
    apply(in, out);
    return out;
  }

  /// Dense copy; only for small sectors.
  MatrixXc dense() const;
  double diagonal(std::size_t i) const;

  /// max over trials of |<u,Hv> - conj(<v,Hu>)| / (|u||Hv| + |v||Hu|) for random u, v.
  double hermiticity_defect(std::uint64_t seed, int trials = 4) const;

 private:
  void row_into(std::size_t i, std::vector<MatrixElement>& buf, std::vector<std::int64_t>& cols) const;

  SectorBasisPtr basis_;
  RowGenerator rows_;
  bool stored_ = false;
  SparseMatrix matrix_;
};

HamiltonianOperator build_xxz(const XxzParams& params, int two_sz);

/// One ring of n N sites with total twist alpha.
HamiltonianOperator build_replicated_ring(const XxzParams& params, int two_sz);

HamiltonianOperator build_clock(const ClockParams& params, int q);

}  // namespace sre
