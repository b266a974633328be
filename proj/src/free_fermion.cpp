#include "sre/free_fermion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "sre/special_functions.hpp"

namespace sre {

using constants::pi;
using cplx = std::complex<double>;

namespace {

void require_even(int n_sites, const char* who) {
  if (n_sites < 2 || n_sites % 2 != 0) throw std::invalid_argument(std::string(who) + ": N must be even and >= 2");
}

void require_principal(double alpha, const char* who) {
  if (!(std::abs(alpha) < pi)) throw std::invalid_argument(std::string(who) + ": need |alpha| < pi");
}

double factorial(int k) { return std::tgamma(k + 1.0); }

// log|det| of the Cauchy block with entries 1/sin(pi (k - l)/N + shift), k,l = 1..N/2,
// times the Vandermonde-like numerator prod_{k<l} sin^2(pi (k - l)/N). The k = l
// factors are skipped when `skip_diagonal` is set; the caller accounts for them.
double log_cauchy_block(int n_sites, double shift, bool skip_diagonal) {
  const int half = n_sites / 2;
  CompensatedSum s;
  for (int d = 1; d < half; ++d) {
    s += 2.0 * (half - d) * std::log(std::sin(pi * d / n_sites));
  }
  for (int d = -(half - 1); d <= half - 1; ++d) {
    if (d == 0 && skip_diagonal) continue;
    const double v = std::abs(std::sin(pi * d / n_sites + shift));
    if (v == 0.0) throw std::invalid_argument("overlap: singular Cauchy block");
    s += -(half - std::abs(d)) * std::log(v);
  }
  return s.value();
}

}  // namespace

double ModeSet::ground_energy() const {
  CompensatedSum s;
  for (int k : filled) s += energies[static_cast<std::size_t>(k)];
  return s.value();
}

ModeSet make_modes(int n_sites, int n_fermions, double alpha) {
  if (n_sites < 1) throw std::invalid_argument("make_modes: N must be >= 1");
  if (n_fermions < 0 || n_fermions > n_sites) throw std::invalid_argument("make_modes: need 0 <= N_F <= N");
  ModeSet m;
  m.n_sites = n_sites;
  m.n_fermions = n_fermions;
  m.alpha = alpha;
  for (int k = 1; k <= n_sites; ++k) {
    const double th = 2.0 * pi / n_sites * (k - 0.5 * (n_fermions + 1) - alpha / (2.0 * pi));
    m.angles.push_back(th);
    m.energies.push_back(-2.0 * std::cos(th));
  }
  std::vector<int> order(static_cast<std::size_t>(n_sites));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return m.energies[static_cast<std::size_t>(a)] < m.energies[static_cast<std::size_t>(b)];
  });
  m.filled.assign(order.begin(), order.begin() + n_fermions);
  std::sort(m.filled.begin(), m.filled.end());
  return m;
}

double overlap_wick(int n_sites, double alpha) {
  require_even(n_sites, "overlap_wick");
  require_principal(alpha, "overlap_wick");
  if (alpha == 0.0) return 1.0;
  const int half = n_sites / 2;
  const ModeSet m0 = make_modes(n_sites, half, 0.0);
  const ModeSet ma = make_modes(n_sites, half, alpha);
  Eigen::MatrixXcd mat(half, half);
  for (int k = 0; k < half; ++k) {
    for (int l = 0; l < half; ++l) {
      const double d = m0.angles[static_cast<std::size_t>(k)] - ma.angles[static_cast<std::size_t>(l)];
      mat(k, l) = std::polar(1.0, 0.5 * (d + alpha)) / static_cast<double>(n_sites) *
                  (std::sin(0.5 * alpha) / std::sin(0.5 * d));
    }
  }
  return std::abs(mat.partialPivLu().determinant());
}

double log_overlap_exact_product(int n_sites, double alpha) {
  require_even(n_sites, "overlap_exact_product");
  require_principal(alpha, "overlap_exact_product");
  const int half = n_sites / 2;
  CompensatedSum s;
  s += half * (std::log(sinc(0.5 * alpha)) - std::log(sinc(0.5 * alpha / n_sites)));
  const double a = alpha / (2.0 * pi);
  for (int d = 1; d < half; ++d) {
    const double num = 2.0 * std::log(std::sin(pi * d / n_sites));
    const double den = std::log(std::sin(pi / n_sites * (d - a))) + std::log(std::sin(pi / n_sites * (d + a)));
    s += (half - d) * (num - den);
  }
  return s.value();
}

double overlap_exact_product(int n_sites, double alpha) {
  return std::exp(log_overlap_exact_product(n_sites, alpha));
}

double log_overlap_replicated_exact(int n_sites, int replicas, double alpha) {
  require_even(n_sites, "overlap_replicated_exact");
  require_principal(alpha, "overlap_replicated_exact");
  if (replicas < 1) throw std::invalid_argument("overlap_replicated_exact: n must be >= 1");
  const int n = replicas;
  const int half = n_sites / 2;
  const double nn = static_cast<double>(n_sites) * n;
  CompensatedSum s;
  s += -0.5 * nn * std::log(2.0 * n_sites);
  const bool odd = (n % 2 == 1);
  const int p_star = (n - 1) / 2;
  if (odd) {
    // cos(alpha/2 + n pi/2) = +-sin(alpha/2) vanishes with the k = l factors of block p*,
    // which are 1/sin(alpha/(2Nn)); their ratio is kept finite as 2 N n sinc / sinc.
    s += half * (std::log(2.0 * nn) + std::log(sinc(0.5 * alpha)) - std::log(sinc(alpha / (2.0 * nn))));
  } else {
    s += half * std::log(std::abs(2.0 * std::cos(0.5 * alpha + 0.5 * n * pi)));
  }
  for (int p = 0; p < n; ++p) {
    const double shift = pi / n_sites * (alpha / pi - (n - 2 * p - 1)) / (2.0 * n);
    s += log_cauchy_block(n_sites, shift, odd && p == p_star);
  }
  return s.value();
}

double overlap_replicated_exact(int n_sites, int replicas, double alpha) {
  return std::exp(log_overlap_replicated_exact(n_sites, replicas, alpha));
}

double overlap_replicated_wick(int n_sites, int replicas, double alpha) {
  require_even(n_sites, "overlap_replicated_wick");
  require_principal(alpha, "overlap_replicated_wick");
  if (replicas < 1) throw std::invalid_argument("overlap_replicated_wick: n must be >= 1");
  const int half = n_sites / 2;
  const int total = replicas * half;
  const ModeSet block = make_modes(n_sites, half, 0.0);
  const ModeSet ring = make_modes(n_sites * replicas, total, alpha);
  const double norm = 1.0 / (n_sites * std::sqrt(static_cast<double>(replicas)));
  Eigen::MatrixXcd mat(total, total);
  for (int mu = 0; mu < replicas; ++mu) {
    for (int k = 0; k < half; ++k) {
      const double eta = block.angles[static_cast<std::size_t>(block.filled[static_cast<std::size_t>(k)])];
      for (int l = 0; l < total; ++l) {
        const double th = ring.angles[static_cast<std::size_t>(ring.filled[static_cast<std::size_t>(l)])];
        cplx sum = 0.0;
        for (int x = 1; x <= n_sites; ++x) sum += std::polar(1.0, x * (eta - th));
        mat(mu * half + k, l) = norm * std::polar(1.0, -static_cast<double>(mu) * n_sites * th) * sum;
      }
    }
  }
  return std::abs(mat.partialPivLu().determinant());
}

double prefactor_a1_exact(double alpha) {
  if (!(std::abs(alpha) < 2.0 * pi)) throw std::invalid_argument("prefactor_a1_exact: need |alpha| < 2 pi");
  const double a = alpha / (2.0 * pi);
  const double log_val = -0.5 * (alpha / pi) * (alpha / pi) * std::log(2.0) +
                         2.0 * (log_barnes_g(1.0 + a) + log_barnes_g(1.0 - a));
  return std::exp(log_val);
}

double log_prefactor_an_exact(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("prefactor_an_exact: n must be >= 1");
  require_principal(alpha, "prefactor_an_exact");
  const double h_tau = (n - 1.0 / n) / 24.0;
  const double h_alpha = (alpha / pi) * (alpha / pi) / 8.0;
  const double a = alpha / (2.0 * pi * n);
  CompensatedSum s;
  s += -4.0 * (h_tau + h_alpha / n) * std::log(2.0);
  for (int p = 1 - n; p <= n - 1; p += 2) {
    const double base = 1.0 + p / (2.0 * n);
    s += 2.0 * (log_barnes_g(base + a) + log_barnes_g(base - a));
  }
  return s.value();
}

double prefactor_an_exact(int n, double alpha) { return std::exp(log_prefactor_an_exact(n, alpha)); }

double coeffs_bnj(int n, int j) {
  if (n < 1 || j < 1) throw std::invalid_argument("coeffs_bnj: need n >= 1 and j >= 1");
  const bool odd = (n % 2 == 1);
  const int order = 2 * j - 1;
  CompensatedSum poly;
  // k runs over 1, 2, ..., (n-1)/2 for odd n and 1/2, 3/2, ..., (n-1)/2 for even n
  for (double k = odd ? 1.0 : 0.5; k <= 0.5 * (n - 1) + 1e-12; k += 1.0) {
    poly += k * (polygamma(order, k / n) - polygamma(order, 1.0 - k / n));
  }
  const double pi2j = std::pow(pi, 2 * j);
  const double series = poly.value() / (std::pow(2.0, 2 * j - 2) * std::pow(static_cast<double>(n), 2 * j + 1) * pi2j);
  double constant = 0.0;
  if (j == 1) {
    const double log_arg = odd ? 2.0 * n : 8.0 * n;
    constant = (1.0 + constants::euler_gamma + std::log(log_arg)) / (2.0 * n * pi * pi);
  } else {
    const double weight = odd ? 1.0 : (std::pow(2.0, 2 * j - 1) - 1.0);
    constant = weight * zeta_int(2 * j - 1) / (std::pow(2.0, 2 * j - 1) * n * j * pi2j);
  }
  return series - factorial(2 * j) * constant;
}

PrefactorSeries prefactor_series(int n, int j_max) {
  if (j_max < 1 || j_max > 12) throw std::invalid_argument("prefactor_series: need 1 <= J_max <= 12");
  PrefactorSeries out;
  out.n = n;
  for (int j = 1; j <= j_max; ++j) out.b.push_back(coeffs_bnj(n, j));
  for (int j = 1; j <= j_max; ++j) {
    CompensatedSum a;
    for (const Partition& part : partitions(j).partitions) {
      double term = 1.0;
      for (const PartitionPart& pp : part) {
        const double bp = out.b[static_cast<std::size_t>(pp.value - 1)];
        term *= std::pow(bp / factorial(2 * pp.value), pp.multiplicity) / factorial(pp.multiplicity);
      }
      a += term;
    }
    out.a.push_back(a.value());
  }
  return out;
}

double coeffs_anj(int n, int j) { return prefactor_series(n, j).a.back(); }

Eigen::VectorXd correlation_spectrum(int n_sites, int cut) {
  require_even(n_sites, "correlation_spectrum");
  if (cut < 1 || cut >= n_sites) throw std::invalid_argument("correlation_spectrum: need 1 <= r < N");
  const ModeSet modes = make_modes(n_sites, n_sites / 2, 0.0);
  std::vector<double> row(static_cast<std::size_t>(cut));
  for (int d = 0; d < cut; ++d) {
    CompensatedSum s;
    for (int k : modes.filled) s += std::cos(d * modes.angles[static_cast<std::size_t>(k)]);
    row[static_cast<std::size_t>(d)] = s.value() / n_sites;
  }
  Eigen::MatrixXd c(cut, cut);
  for (int i = 0; i < cut; ++i) {
    for (int l = 0; l < cut; ++l) c(i, l) = row[static_cast<std::size_t>(std::abs(i - l))];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseMax(0.0).cwiseMin(1.0);
}

cplx moments_from_spectrum(const Eigen::VectorXd& nu, int n, double alpha) {
  if (n < 1) throw std::invalid_argument("correlation_matrix_moments: n must be >= 1");
  cplx z = std::polar(1.0, -0.5 * alpha * static_cast<double>(nu.size()));
  const cplx phase = std::polar(1.0, alpha);
  for (Eigen::Index k = 0; k < nu.size(); ++k) {
    z *= std::pow(nu[k], n) * phase + std::pow(1.0 - nu[k], n);
  }
  return z;
}

cplx correlation_matrix_moments(int n_sites, int cut, int n, double alpha) {
  return moments_from_spectrum(correlation_spectrum(n_sites, cut), n, alpha);
}

std::vector<double> particle_number_distribution(const Eigen::VectorXd& nu) {
  std::vector<double> c{1.0};
  for (Eigen::Index k = 0; k < nu.size(); ++k) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t m = 0; m < c.size(); ++m) {
      next[m] += (1.0 - nu[k]) * c[m];
      next[m + 1] += nu[k] * c[m];
    }
    c.swap(next);
  }
  return c;
}

double asymptotic_log_overlap(int n_sites, int replicas, double alpha) {
  require_even(n_sites, "asymptotic_log_overlap");
  require_principal(alpha, "asymptotic_log_overlap");
  if (replicas < 1) throw std::invalid_argument("asymptotic_log_overlap: n must be >= 1");
  const double n = replicas;
  const double ap = alpha / pi;
  CompensatedSum s;
  s += ((1.0 - n * n) - 3.0 * ap * ap) / (12.0 * n) * std::log(n_sites / pi);
  const double a = alpha / (2.0 * pi * n);
  for (int p = 0; p < replicas; ++p) {
    const double t = (2.0 * p + 1.0) / (2.0 * n);
    s += log_barnes_g(0.5 + a + t) + log_barnes_g(1.5 - a - t);
  }
  return s.value();
}

}  // namespace sre
