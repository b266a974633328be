#include "sre/lattice_models.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "sre/special_functions.hpp"

namespace sre {

using constants::pi;

XxzParams XxzParams::from_delta(int n_sites, double delta, double alpha, int replicas) {
  if (!(delta > -1.0 && delta < 1.0)) throw std::invalid_argument("XXZ: need -1 < Delta < 1");
  XxzParams p;
  p.n_sites = n_sites;
  p.delta = delta;
  p.gamma = std::acos(-delta);
  p.g = (pi - p.gamma) / pi;
  p.alpha = alpha;
  p.replicas = replicas;
  p.validate();
  return p;
}

XxzParams XxzParams::from_gamma(int n_sites, double gamma, double alpha, int replicas) {
  if (!(gamma > 0.0 && gamma < pi)) throw std::invalid_argument("XXZ: need 0 < gamma < pi");
  XxzParams p;
  p.n_sites = n_sites;
  p.gamma = gamma;
  p.delta = -std::cos(gamma);
  p.g = (pi - gamma) / pi;
  p.alpha = alpha;
  p.replicas = replicas;
  p.validate();
  return p;
}

void XxzParams::validate() const {
  if (n_sites < 2) throw std::invalid_argument("XXZ: need N >= 2");
  if (replicas < 1) throw std::invalid_argument("XXZ: need n >= 1");
  if (!(delta > -1.0 && delta < 1.0)) throw std::invalid_argument("XXZ: need -1 < Delta < 1");
  if (!(gamma > 0.0 && gamma < pi)) throw std::invalid_argument("XXZ: need 0 < gamma < pi");
  if (std::abs(delta + std::cos(gamma)) > 1e-12) {
    throw std::invalid_argument("XXZ: Delta and gamma disagree (Delta != -cos gamma)");
  }
  if (std::abs(std::cos(pi * g) - delta) > 1e-12) {
    throw std::invalid_argument("XXZ: Luttinger parameter disagrees with Delta (cos(pi g) != Delta)");
  }
  if (!(alpha > -pi && alpha <= pi)) throw std::invalid_argument("XXZ: twist must lie in (-pi, pi]");
}

ClockParams ClockParams::make(int p, int n_sites, int alpha, int replicas) {
  ClockParams c;
  c.p = p;
  c.n_sites = n_sites;
  c.alpha = alpha;
  c.replicas = replicas;
  c.central_charge = p >= 2 ? parafermion_central_charge(p) : 0.0;
  c.validate();
  return c;
}

void ClockParams::validate() const {
  if (p < 2) throw std::invalid_argument("clock: need p >= 2");
  if (n_sites < 2) throw std::invalid_argument("clock: need N >= 2");
  if (replicas < 1) throw std::invalid_argument("clock: need n >= 1");
  if (alpha < 0 || alpha >= p) throw std::invalid_argument("clock: twist must be in {0, ..., p-1}");
  if (!(central_charge > 0.0)) throw std::invalid_argument("clock: central charge must be positive");
}

HamiltonianOperator::HamiltonianOperator(SectorBasisPtr basis, RowGenerator rows,
                                         std::size_t store_limit)
    : basis_(std::move(basis)), rows_(std::move(rows)) {
  if (!basis_ || basis_->size() == 0) throw std::invalid_argument("HamiltonianOperator: empty basis");
  if (basis_->size() > store_limit) return;

  const auto dim = static_cast<std::int64_t>(basis_->size());
  std::vector<Eigen::Triplet<cplx, std::int64_t>> triplets;
  std::vector<MatrixElement> buf;
  std::vector<std::int64_t> cols;
  for (std::int64_t i = 0; i < dim; ++i) {
    row_into(static_cast<std::size_t>(i), buf, cols);
    for (std::size_t e = 0; e < buf.size(); ++e) triplets.emplace_back(i, cols[e], buf[e].value);
  }
  matrix_.resize(dim, dim);
  matrix_.setFromTriplets(triplets.begin(), triplets.end());
  matrix_.makeCompressed();
  stored_ = true;
}

void HamiltonianOperator::row_into(std::size_t i, std::vector<MatrixElement>& buf,
                                   std::vector<std::int64_t>& cols) const {
  buf.clear();
  rows_(basis_->state(i), buf);
  cols.resize(buf.size());
  for (std::size_t e = 0; e < buf.size(); ++e) {
    cols[e] = basis_->index_of(buf[e].column);
    if (cols[e] < 0) throw std::logic_error("HamiltonianOperator: action leaves the charge sector");
  }
}

void HamiltonianOperator::apply(const VectorXc& in, VectorXc& out) const {
  if (static_cast<std::size_t>(in.size()) != dimension()) {
    throw std::invalid_argument("HamiltonianOperator::apply: size mismatch");
  }
  if (stored_) {
    out.noalias() = matrix_ * in;
    return;
  }
  out.setZero(in.size());
  std::vector<MatrixElement> buf;
  std::vector<std::int64_t> cols;
  for (std::size_t i = 0; i < dimension(); ++i) {
    row_into(i, buf, cols);
    cplx acc = 0.0;
    for (std::size_t e = 0; e < buf.size(); ++e) acc += buf[e].value * in[cols[e]];
    out[static_cast<Eigen::Index>(i)] = acc;
  }
}

MatrixXc HamiltonianOperator::dense() const {
  if (dimension() > 8192) throw std::invalid_argument("HamiltonianOperator::dense: sector too large");
  if (stored_) return MatrixXc(matrix_);
  const auto dim = static_cast<Eigen::Index>(dimension());
  MatrixXc m = MatrixXc::Zero(dim, dim);
  std::vector<MatrixElement> buf;
  std::vector<std::int64_t> cols;
  for (Eigen::Index i = 0; i < dim; ++i) {
    row_into(static_cast<std::size_t>(i), buf, cols);
    for (std::size_t e = 0; e < buf.size(); ++e) m(i, cols[e]) += buf[e].value;
  }
  return m;
}

double HamiltonianOperator::diagonal(std::size_t i) const {
  std::vector<MatrixElement> buf;
  std::vector<std::int64_t> cols;
  row_into(i, buf, cols);
  double d = 0.0;
  for (std::size_t e = 0; e < buf.size(); ++e) {
    if (cols[e] == static_cast<std::int64_t>(i)) d += buf[e].value.real();
  }
  return d;
}

double HamiltonianOperator::hermiticity_defect(std::uint64_t seed, int trials) const {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const auto dim = static_cast<Eigen::Index>(dimension());
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    VectorXc u(dim), v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      u[i] = cplx(normal(rng), normal(rng));
      v[i] = cplx(normal(rng), normal(rng));
    }
    const VectorXc hu = *this * u;
    const VectorXc hv = *this * v;
    const cplx lhs = u.dot(hv);
    const cplx rhs = std::conj(v.dot(hu));
    const double scale = u.norm() * hv.norm() + v.norm() * hu.norm();
    if (scale > 0.0) worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

namespace {

HamiltonianOperator make_xxz_ring(const XxzParams& params, int ring, int two_sz) {
  auto basis = std::make_shared<const SectorBasis>(build_u1_basis(ring, two_sz));
  const double delta = params.delta;
  std::vector<cplx> bond_phase(static_cast<std::size_t>(ring), cplx(1.0, 0.0));
  if (params.gauge == TwistGauge::single_bond) {
    bond_phase.back() = std::polar(1.0, params.alpha);
  } else {
    for (auto& ph : bond_phase) ph = std::polar(1.0, params.alpha / ring);
  }
  // Moving an up spin from j to j+1 carries the bond phase; the reverse hop its conjugate.
  auto rows = [ring, delta, bond_phase](Config c, std::vector<MatrixElement>& out) {
    double diag = 0.0;
    for (int j = 0; j < ring; ++j) {
      const int k = (j + 1) % ring;
      const Config bj = (c >> j) & 1u;
      const Config bk = (c >> k) & 1u;
      if (bj == bk) continue;
      diag += delta;
      const Config flipped = c ^ ((Config{1} << j) | (Config{1} << k));
      const cplx ph = bond_phase[static_cast<std::size_t>(j)];
      // row has the up spin on k: reached from column with it on j
      out.push_back({flipped, bk ? -ph : -std::conj(ph)});
    }
    if (diag != 0.0) out.push_back({c, cplx(diag, 0.0)});
  };
  return HamiltonianOperator(std::move(basis), rows);
}

}  // namespace

HamiltonianOperator build_xxz(const XxzParams& params, int two_sz) {
  params.validate();
  if (params.replicas != 1) throw std::invalid_argument("build_xxz: use build_replicated_ring for n > 1");
  return make_xxz_ring(params, params.n_sites, two_sz);
}

HamiltonianOperator build_replicated_ring(const XxzParams& params, int two_sz) {
  params.validate();
  return make_xxz_ring(params, params.ring_sites(), two_sz);
}

HamiltonianOperator build_clock(const ClockParams& params, int q) {
  params.validate();
  const int p = params.p;
  const int ring = params.ring_sites();
  auto basis = std::make_shared<const SectorBasis>(build_clock_basis(ring, p, q));

  std::vector<double> coupling(static_cast<std::size_t>(p), 0.0);
  for (int k = 1; k < p; ++k) coupling[static_cast<std::size_t>(k)] = 1.0 / std::sin(pi * k / p);
  std::vector<double> onsite(static_cast<std::size_t>(p), 0.0);
  for (int m = 0; m < p; ++m) {
    double s = 0.0;
    for (int k = 1; k < p; ++k) s += coupling[static_cast<std::size_t>(k)] * std::cos(2.0 * pi * k * m / p);
    onsite[static_cast<std::size_t>(m)] = -s;
  }
  std::vector<cplx> twist(static_cast<std::size_t>(p), cplx(1.0, 0.0));
  for (int k = 0; k < p; ++k) twist[static_cast<std::size_t>(k)] = std::polar(1.0, -2.0 * pi * params.alpha * k / p);
  std::vector<Config> power(static_cast<std::size_t>(ring) + 1, 1);
  for (int j = 1; j <= ring; ++j) power[static_cast<std::size_t>(j)] = power[static_cast<std::size_t>(j) - 1] * static_cast<Config>(p);

  auto rows = [p, ring, coupling, onsite, twist, power](Config c, std::vector<MatrixElement>& out) {
    std::vector<int> digits(static_cast<std::size_t>(ring));
    Config rest = c;
    double diag = 0.0;
    for (int j = 0; j < ring; ++j) {
      digits[static_cast<std::size_t>(j)] = static_cast<int>(rest % static_cast<Config>(p));
      rest /= static_cast<Config>(p);
      diag += onsite[static_cast<std::size_t>(digits[static_cast<std::size_t>(j)])];
    }
    out.push_back({c, cplx(diag, 0.0)});
    for (int j = 0; j < ring; ++j) {
      const int l = (j + 1) % ring;
      const int mj = digits[static_cast<std::size_t>(j)];
      const int ml = digits[static_cast<std::size_t>(l)];
      for (int k = 1; k < p; ++k) {
        // column config: m_j + k, m_l - k
        const int nj = (mj + k) % p;
        const int nl = (ml - k + p) % p;
        const Config col = c - static_cast<Config>(mj) * power[static_cast<std::size_t>(j)] -
                           static_cast<Config>(ml) * power[static_cast<std::size_t>(l)] +
                           static_cast<Config>(nj) * power[static_cast<std::size_t>(j)] +
                           static_cast<Config>(nl) * power[static_cast<std::size_t>(l)];
        cplx v = -coupling[static_cast<std::size_t>(k)];
        if (j == ring - 1) v *= twist[static_cast<std::size_t>(k)];
        out.push_back({col, v});
      }
    }
  };
  return HamiltonianOperator(std::move(basis), rows);
}

}  // namespace sre
