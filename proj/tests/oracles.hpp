#pragma once

// Reference implementations for the tests. They share nothing with the
// library: full Hilbert-space Kronecker products, naive sums, Boost quadrature.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double pi = 3.14159265358979323846;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Kronecker chain with ops[j] on site j (identity where empty). Site 0 is the
// least significant digit, so it is the rightmost factor.
inline Mat chain(const std::vector<Mat>& ops, int d) {
  Mat out = Mat::Identity(1, 1);
  for (int s = static_cast<int>(ops.size()) - 1; s >= 0; --s) out = kron(out, ops[s].size() ? ops[s] : Mat(Mat::Identity(d, d)));
  return out;
}

inline Mat site_op(const Mat& op, int j, int n, int d) {
  std::vector<Mat> ops(static_cast<std::size_t>(n));
  ops[j] = op;
  return chain(ops, d);
}

inline Mat two_site_op(const Mat& a, int j, const Mat& b, int k, int n, int d) {
  std::vector<Mat> ops(static_cast<std::size_t>(n));
  ops[j] = a;
  ops[k] = b;
  return chain(ops, d);
}

// H = -1/2 sum [sx sx + sy sy + Delta (sz sz - 1)], twist e^{i alpha} on the
// hop that moves an up spin from site N-1 to site 0.
inline Mat xxz_dense(int n, double delta, double alpha) {
  Mat up = Mat::Zero(2, 2);  // sigma^+ : |0> -> |1>, bit 1 = up
  up(1, 0) = 1.0;
  Mat down = up.adjoint();
  Mat sz = Mat::Zero(2, 2);
  sz(0, 0) = -1.0;
  sz(1, 1) = 1.0;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Mat h = Mat::Zero(dim, dim);
  for (int j = 0; j < n; ++j) {
    const int k = (j + 1) % n;
    const cplx ph = (j == n - 1) ? std::polar(1.0, alpha) : cplx(1.0);
    Mat hop = ph * two_site_op(up, k, down, j, n, 2);
    h -= hop + Mat(hop.adjoint());
    h -= 0.5 * delta * (two_site_op(sz, j, sz, k, n, 2) - Mat::Identity(dim, dim));
  }
  return h;
}

inline int popcount(unsigned long long c) { return __builtin_popcountll(c); }

// Rows/columns of a full-space matrix restricted to a fixed number of up spins.
inline std::vector<Eigen::Index> u1_indices(int n, int ups) {
  std::vector<Eigen::Index> idx;
  for (Eigen::Index c = 0; c < (Eigen::Index{1} << n); ++c)
    if (popcount(static_cast<unsigned long long>(c)) == ups) idx.push_back(c);
  return idx;
}

inline Mat restrict(const Mat& h, const std::vector<Eigen::Index>& idx) {
  const auto m = static_cast<Eigen::Index>(idx.size());
  Mat out(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) out(a, b) = h(idx[a], idx[b]);
  return out;
}

struct Eig {
  double energy;
  Vec vector;  // in the restricted basis
  double gap;
};

inline Eig lowest(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Eig out{es.eigenvalues()[0], es.eigenvectors().col(0), 0.0};
  out.gap = h.rows() > 1 ? es.eigenvalues()[1] - es.eigenvalues()[0] : 1e300;
  return out;
}

// Clock chain in the Z eigenbasis: -sum_j sum_k c_k [(Z_j Z_{j+1}^dag)^k + X_j^k],
// X|m> = |m+1>. The last bond is multiplied by `bond_phase`^k.
inline Mat clock_dense(int p, int n, cplx bond_phase) {
  const cplx w = std::polar(1.0, 2.0 * pi / p);
  Mat z = Mat::Zero(p, p), x = Mat::Zero(p, p);
  for (int m = 0; m < p; ++m) {
    z(m, m) = std::pow(w, m);
    x((m + 1) % p, m) = 1.0;
  }
  Eigen::Index dim = 1;
  for (int j = 0; j < n; ++j) dim *= p;
  Mat h = Mat::Zero(dim, dim);
  for (int j = 0; j < n; ++j) {
    const int l = (j + 1) % n;
    Mat zk = Mat::Identity(p, p), xk = Mat::Identity(p, p);
    for (int k = 1; k < p; ++k) {
      zk = zk * z;
      xk = xk * x;
      const double c = 1.0 / std::sin(pi * k / p);
      const cplx ph = (j == n - 1) ? std::pow(bond_phase, k) : cplx(1.0);
      h -= c * (ph * two_site_op(zk, j, zk.adjoint(), l, n, p) + site_op(xk, j, n, p));
    }
  }
  return h;
}

// Product of X over the first `sites` sites (site 0 first), as a full-space matrix.
inline Mat clock_charge(int p, int n, int sites) {
  Mat x = Mat::Zero(p, p);
  for (int m = 0; m < p; ++m) x((m + 1) % p, m) = 1.0;
  std::vector<Mat> ops(static_cast<std::size_t>(n));
  for (int j = 0; j < sites; ++j) ops[j] = x;
  return chain(ops, p);
}

// Reduced density matrix of the first r sites (the low digits) of a full-space state.
inline Mat reduced_density(const Vec& psi, int r, int n, int d) {
  Eigen::Index da = 1, db = 1;
  for (int j = 0; j < r; ++j) da *= d;
  for (int j = r; j < n; ++j) db *= d;
  Mat m(da, db);
  for (Eigen::Index c = 0; c < psi.size(); ++c) m(c % da, c / da) = psi[c];
  return m * m.adjoint();
}

// Tr(e^{i alpha Q_A} rho^n) with Q_A = N_A - r/2, by explicit matrix powers.
inline cplx spin_charged_moment(const Mat& rho, int r, int n, double alpha) {
  Mat pw = Mat::Identity(rho.rows(), rho.cols());
  for (int k = 0; k < n; ++k) pw = pw * rho;
  cplx tr = 0.0;
  for (Eigen::Index a = 0; a < rho.rows(); ++a)
    tr += std::polar(1.0, alpha * (popcount(static_cast<unsigned long long>(a)) - 0.5 * r)) * pw(a, a);
  return tr;
}

// Embeds a sector vector back into the full space.
inline Vec embed(const Vec& v, const std::vector<Eigen::Index>& idx, Eigen::Index dim) {
  Vec out = Vec::Zero(dim);
  for (std::size_t i = 0; i < idx.size(); ++i) out[idx[i]] = v[static_cast<Eigen::Index>(i)];
  return out;
}

// log G(1+z) = z/2 log 2pi - z(z+1)/2 + z log Gamma(1+z) - int_0^z log Gamma(1+x) dx.
inline double log_barnes_g(double z) {
  const double w = z - 1.0;
  auto f = [](double x) { return boost::math::lgamma(1.0 + x); };
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, w, 15, 1e-14);
  return 0.5 * w * std::log(2.0 * pi) - 0.5 * w * (w + 1.0) + w * boost::math::lgamma(1.0 + w) - integral;
}

// Central differences of f at 0 with step h.
template <class F>
double second_derivative(F f, double h) {
  return (-f(2 * h) + 16 * f(h) - 30 * f(0.0) + 16 * f(-h) - f(-2 * h)) / (12 * h * h);
}

template <class F>
double fourth_derivative(F f, double h) {
  return (-f(3 * h) + 12 * f(2 * h) - 39 * f(h) + 56 * f(0.0) - 39 * f(-h) + 12 * f(-2 * h) - f(-3 * h)) /
         (6 * h * h * h * h);
}

// Slope of log y against log x by ordinary least squares.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = std::log(x[i]), b = std::log(std::abs(y[i]));
    sx += a;
    sy += b;
    sxx += a * a;
    sxy += a * b;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
