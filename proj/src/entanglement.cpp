#include "sre/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <stdexcept>
#include <unordered_map>

#include <Eigen/SVD>

#include "sre/special_functions.hpp"

namespace sre {

using constants::pi;

namespace {

constexpr double kEmptyBlock = 1e-14;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

const ChargeBlock* ChargeBlockedRdm::find(int label) const {
  for (const auto& b : blocks) {
    if (b.label == label) return &b;
  }
  return nullptr;
}

ChargeBlockedRdm charge_blocked_rdm(const SectorBasis& basis, const VectorXc& psi, int cut) {
  if (cut < 1 || cut > basis.site_count() - 1) {
    throw std::invalid_argument("charge_blocked_rdm: cut must satisfy 1 <= r <= N-1");
  }
  if (static_cast<std::size_t>(psi.size()) != basis.size()) {
    throw std::invalid_argument("charge_blocked_rdm: vector does not match basis");
  }

  struct Gather {
    std::unordered_map<Config, Eigen::Index> rows, cols;
    std::vector<std::tuple<Eigen::Index, Eigen::Index, cplx>> entries;
  };
  std::map<int, Gather> by_charge;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const SplitConfig s = split_configuration(basis, i, cut);
    Gather& g = by_charge[s.charge_a];
    auto [ri, r_new] = g.rows.try_emplace(s.a, static_cast<Eigen::Index>(g.rows.size()));
    auto [ci, c_new] = g.cols.try_emplace(s.b, static_cast<Eigen::Index>(g.cols.size()));
    (void)r_new;
    (void)c_new;
    g.entries.emplace_back(ri->second, ci->second, psi[static_cast<Eigen::Index>(i)]);
  }

  ChargeBlockedRdm rdm;
  rdm.cut = cut;
  rdm.kind = basis.kind();
  rdm.local_dim = basis.local_dim();
  for (auto& [label, g] : by_charge) {
    MatrixXc amp = MatrixXc::Zero(static_cast<Eigen::Index>(g.rows.size()), static_cast<Eigen::Index>(g.cols.size()));
    for (const auto& [r, c, v] : g.entries) amp(r, c) = v;
    Eigen::BDCSVD<MatrixXc> svd(amp);
    const Eigen::VectorXd s2 = svd.singularValues().array().square();

    ChargeBlock block;
    block.label = label;
    block.charge = basis.kind() == ChargeKind::u1_spin ? 0.5 * label : static_cast<double>(label);
    const double p = s2.sum();
    if (p >= kEmptyBlock) {
      block.probability = p;
      std::vector<double> lam(s2.data(), s2.data() + s2.size());
      std::sort(lam.begin(), lam.end(), std::greater<>());
      block.spectrum = Eigen::Map<Eigen::VectorXd>(lam.data(), static_cast<Eigen::Index>(lam.size())) / p;
    }
    rdm.blocks.push_back(std::move(block));
  }
  return rdm;
}

ChargeBlockedRdm charge_blocked_rdm(const GroundStateResult& psi, int cut) {
  if (!psi.basis) throw std::invalid_argument("charge_blocked_rdm: state has no basis");
  return charge_blocked_rdm(*psi.basis, psi.vector, cut);
}

double block_partition_function(const ChargeBlock& block, int n) {
  if (n < 1) throw std::invalid_argument("block_partition_function: n must be >= 1");
  if (block.spectrum.size() == 0) return 0.0;
  return std::pow(block.probability, n) * block.spectrum.array().pow(n).sum();
}

cplx charged_moment(const ChargeBlockedRdm& rdm, int n, double alpha) {
  if (n < 1) throw std::invalid_argument("charged_moment: n must be >= 1");
  cplx z = 0.0;
  for (const auto& b : rdm.blocks) z += std::polar(block_partition_function(b, n), alpha * b.charge);
  return z;
}

ChargedMoments charged_moments(const ChargeBlockedRdm& rdm, int n, const std::vector<double>& grid) {
  ChargedMoments m;
  m.n = n;
  m.alpha_grid = grid;
  m.values.reserve(grid.size());
  for (double a : grid) m.values.push_back(charged_moment(rdm, n, a));
  return m;
}

std::vector<double> u1_inversion_grid(int cut) {
  if (cut < 1) throw std::invalid_argument("u1_inversion_grid: cut must be >= 1");
  std::vector<double> grid(static_cast<std::size_t>(cut) + 1);
  for (int m = 0; m <= cut; ++m) grid[static_cast<std::size_t>(m)] = 2.0 * pi * (m - 0.5 * cut) / (cut + 1);
  return grid;
}

ResolvedPartitionFunctions invert_moments_u1(const ChargedMoments& moments, int cut) {
  const std::vector<double> grid = u1_inversion_grid(cut);
  if (moments.alpha_grid.size() != grid.size() || moments.values.size() != grid.size()) {
    throw std::invalid_argument("invert_moments_u1: need exactly r + 1 grid points");
  }
  for (std::size_t m = 0; m < grid.size(); ++m) {
    if (std::abs(moments.alpha_grid[m] - grid[m]) > 1e-12) {
      throw std::invalid_argument("invert_moments_u1: grid is not the exact (r+1)-point grid");
    }
  }
  ResolvedPartitionFunctions out;
  for (int s = 0; s <= cut; ++s) {
    cplx z = 0.0;
    for (std::size_t m = 0; m < grid.size(); ++m) {
      z += std::polar(1.0, -grid[m] * s) * std::polar(1.0, 0.5 * grid[m] * cut) * moments.values[m];
    }
    z /= static_cast<double>(cut + 1);
    out.charges.push_back(s - 0.5 * cut);
    out.values.push_back(z.real());
    out.max_imaginary = std::max(out.max_imaginary, std::abs(z.imag()));
  }
  return out;
}

ResolvedEntropies resolved_entropies(const ChargeBlockedRdm& rdm, int n) {
  if (n < 2) throw std::invalid_argument("resolved_entropies: Renyi index must be >= 2");
  ResolvedEntropies out;
  out.n = n;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CompensatedSum weighted_vn, shannon, total_vn, zn;
  for (const auto& b : rdm.blocks) {
    out.charges.push_back(b.charge);
    out.probability.push_back(b.probability);
    if (b.spectrum.size() == 0) {
      out.renyi.push_back(nan);
      out.von_neumann.push_back(nan);
      continue;
    }
    out.renyi.push_back(std::log(b.spectrum.array().pow(n).sum()) / (1.0 - n));
    double svn = 0.0;
    for (Eigen::Index i = 0; i < b.spectrum.size(); ++i) {
      svn -= xlogx(b.spectrum[i]);
      total_vn += -xlogx(b.probability * b.spectrum[i]);
    }
    out.von_neumann.push_back(svn);
    weighted_vn += b.probability * svn;
    shannon += -xlogx(b.probability);
    zn += block_partition_function(b, n);
  }
  out.total_renyi = std::log(zn.value()) / (1.0 - n);
  out.total_von_neumann = total_vn.value();
  out.number_entropy = shannon.value();
  out.decomposition_residual = std::abs(out.total_von_neumann - (weighted_vn.value() + shannon.value()));
  return out;
}

cplx clock_charged_moment(const ChargeBlockedRdm& rdm, int n, int alpha) {
  if (rdm.kind != ChargeKind::zp_clock) throw std::invalid_argument("clock_charged_moment: not a Z_p rdm");
  const int p = rdm.local_dim;
  if (alpha < 0 || alpha >= p) throw std::invalid_argument("clock_charged_moment: need 0 <= alpha < p");
  cplx z = 0.0;
  for (const auto& b : rdm.blocks) {
    z += std::polar(block_partition_function(b, n), 2.0 * pi * alpha * b.label / p);
  }
  return z;
}

std::vector<cplx> clock_invert(const std::vector<cplx>& moments) {
  const int p = static_cast<int>(moments.size());
  if (p < 2) throw std::invalid_argument("clock_invert: need p >= 2 moments");
  std::vector<cplx> z(static_cast<std::size_t>(p));
  for (int q = 0; q < p; ++q) {
    cplx s = 0.0;
    for (int a = 0; a < p; ++a) {
      s += std::polar(1.0, -2.0 * pi * a * q / p) * moments[static_cast<std::size_t>(a)];
    }
    z[static_cast<std::size_t>(q)] = s / static_cast<double>(p);
  }
  return z;
}

}  // namespace sre
