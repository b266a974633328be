#include "sre/ground_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>

#include <Eigen/Eigenvalues>

namespace sre {

void fix_phase(VectorXc& v) {
  if (v.size() == 0) return;
  const double top = v.cwiseAbs().maxCoeff();
  Eigen::Index pick = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= top * (1.0 - 1e-9)) {
      pick = i;
      break;
    }
  }
  const cplx a = v[pick];
  if (std::abs(a) > 0.0) v *= std::conj(a) / std::abs(a);
}

namespace {

struct RitzPair {
  double value = 0.0;
  VectorXc vector;
  double residual = std::numeric_limits<double>::infinity();
  int matvecs = 0;
};

VectorXc random_start(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  VectorXc v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = cplx(normal(rng), normal(rng));
  return v;
}

void project_out(VectorXc& w, const VectorXc* lock) {
  if (lock) w -= (*lock) * lock->dot(w);
}

// Restarted Lanczos for the lowest eigenpair, optionally in the complement of `lock`.
RitzPair lanczos(const HamiltonianOperator& h, const LanczosOptions& opts, const VectorXc* lock,
                 double target, bool throw_on_failure) {
  const auto dim = static_cast<Eigen::Index>(h.dimension());
  const Eigen::Index free_dim = lock ? dim - 1 : dim;
  const auto by_memory = static_cast<Eigen::Index>(opts.krylov_memory_bytes / (sizeof(cplx) * static_cast<std::size_t>(dim)));
  const Eigen::Index m = std::max<Eigen::Index>(2, std::min<Eigen::Index>({opts.max_krylov, by_memory, free_dim}));

  VectorXc x = random_start(dim, opts.seed + (lock ? 1 : 0));
  RitzPair best;
  MatrixXc basis(dim, m);
  VectorXc w(dim);
  int matvecs = 0;

  for (int restart = 0; restart <= opts.max_restarts; ++restart) {
    project_out(x, lock);
    x.normalize();
    basis.col(0) = x;
    std::vector<double> a, b;
    Eigen::Index k = 0;
    Eigen::VectorXd ritz_y;
    double ritz_value = 0.0;
    for (k = 0; k < m; ++k) {
      h.apply(basis.col(k), w);
      ++matvecs;
      a.push_back(basis.col(k).dot(w).real());
      // two passes of classical Gram-Schmidt against the whole Krylov basis
      for (int pass = 0; pass < 2; ++pass) {
        const VectorXc coeff = basis.leftCols(k + 1).adjoint() * w;
        w.noalias() -= basis.leftCols(k + 1) * coeff;
        project_out(w, lock);
      }
      const double beta = w.norm();

      const bool last = (k + 1 == m);
      const bool breakdown = beta < 1e-13 * std::max(1.0, std::abs(a.back()));
      if (last || breakdown || (k % 5 == 4)) {
        Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(a.data(), static_cast<Eigen::Index>(a.size()));
        Eigen::VectorXd sub = b.empty() ? Eigen::VectorXd() : Eigen::Map<Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size()));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        ritz_value = tri.eigenvalues()[0];
        ritz_y = tri.eigenvectors().col(0);
        const double estimate = beta * std::abs(ritz_y[ritz_y.size() - 1]);
        if (last || breakdown || estimate < 0.1 * target * std::max(1.0, std::abs(ritz_value))) {
          ++k;
          break;
        }
      }
      b.push_back(beta);
      basis.col(k + 1) = w / beta;
    }

    x = basis.leftCols(ritz_y.size()) * ritz_y.cast<cplx>();
    project_out(x, lock);
    x.normalize();
    h.apply(x, w);
    ++matvecs;
    const double rq = x.dot(w).real();
    const double res = (w - rq * x).norm();
    if (res < best.residual) {
      best.value = rq;
      best.vector = x;
      best.residual = res;
    }
    best.matvecs = matvecs;
    if (res <= target * std::max(1.0, std::abs(rq))) return best;
  }
  if (throw_on_failure) {
    throw ConvergenceError("lowest_eigenpair: Lanczos did not converge within the restart cap",
                           best.residual);
  }
  return best;
}

}  // namespace

GroundStateResult lowest_eigenpair(const HamiltonianOperator& h, const LanczosOptions& opts) {
  const auto dim = static_cast<Eigen::Index>(h.dimension());
  GroundStateResult out;
  out.basis = h.basis_ptr();

  if (dim == 1) {
    out.energy = h.diagonal(0);
    out.vector = VectorXc::Ones(1);
    out.residual = 0.0;
    out.degeneracy_gap = std::numeric_limits<double>::infinity();
    return out;
  }

  if (h.dimension() <= opts.dense_limit) {
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(h.dense());
    out.energy = es.eigenvalues()[0];
    out.vector = es.eigenvectors().col(0);
    out.degeneracy_gap = es.eigenvalues()[1] - es.eigenvalues()[0];
  } else {
    const RitzPair ground = lanczos(h, opts, nullptr, opts.tolerance, true);
    out.energy = ground.value;
    out.vector = ground.vector;
    // The gap only needs the eigenvalue, whose error is quadratic in the residual.
    const RitzPair excited = lanczos(h, opts, &ground.vector, 1e-6, false);
    out.degeneracy_gap = excited.value - ground.value;
    out.iterations = ground.matvecs + excited.matvecs;
  }
  fix_phase(out.vector);
  out.vector.normalize();
  VectorXc hv = h * out.vector;
  out.energy = out.vector.dot(hv).real();
  out.residual = (hv - out.energy * out.vector).norm();
  out.degenerate = out.degeneracy_gap < opts.degeneracy_threshold;
  return out;
}

cplx overlap(const GroundStateResult& u, const GroundStateResult& v) {
  if (!u.basis || !v.basis || !u.basis->same_sector(*v.basis)) {
    throw std::invalid_argument("overlap: states live on different sector bases");
  }
  return u.vector.dot(v.vector);
}

cplx tensor_power_overlap(const GroundStateResult& block, int copies, const GroundStateResult& ring) {
  if (!block.basis || !ring.basis) throw std::invalid_argument("tensor_power_overlap: missing basis");
  const SectorBasis& bb = *block.basis;
  const SectorBasis& rb = *ring.basis;
  if (copies < 1 || bb.kind() != rb.kind() || bb.local_dim() != rb.local_dim() ||
      rb.site_count() != copies * bb.site_count()) {
    throw std::invalid_argument("tensor_power_overlap: ring is not copies x block");
  }
  const Config chunk = config_space_size(bb.local_dim(), bb.site_count());
  cplx total = 0.0;
  for (std::size_t i = 0; i < rb.size(); ++i) {
    Config c = rb.state(i);
    cplx amp = 1.0;
    for (int mu = 0; mu < copies; ++mu) {
      const std::int64_t j = bb.index_of(c % chunk);
      c /= chunk;
      if (j < 0) {
        amp = 0.0;
        break;
      }
      amp *= std::conj(block.vector[j]);
    }
    total += amp * ring.vector[static_cast<Eigen::Index>(i)];
  }
  return total;
}

}  // namespace sre
