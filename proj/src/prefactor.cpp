#include "sre/prefactor.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/QR>

#include "sre/scaling.hpp"
#include "sre/special_functions.hpp"

namespace sre {

using constants::pi;

const char* to_string(PrefactorMethod m) {
  switch (m) {
    case PrefactorMethod::overlap_extrapolation: return "overlap_extrapolation";
    case PrefactorMethod::two_point_fit: return "two_point_fit";
    case PrefactorMethod::exact: return "exact";
  }
  return "unknown";
}

namespace {

struct LinearFit {
  Eigen::VectorXd coef;
  Eigen::VectorXd residual;
  Eigen::MatrixXd covariance;
  Eigen::Index rank = 0;
};

LinearFit least_squares(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
  qr.setThreshold(1e-10);
  LinearFit f;
  f.rank = qr.rank();
  if (f.rank < x.cols()) return f;
  f.coef = qr.solve(y);
  f.residual = y - x * f.coef;
  const Eigen::Index dof = x.rows() - x.cols();
  const double sigma2 = dof > 0 ? f.residual.squaredNorm() / static_cast<double>(dof) : 0.0;
  f.covariance = sigma2 * (x.transpose() * x).inverse();
  return f;
}

void fill_diagnostics(PrefactorEstimate& est, const LinearFit& f) {
  est.coefficients.assign(f.coef.data(), f.coef.data() + f.coef.size());
  est.residuals.assign(f.residual.data(), f.residual.data() + f.residual.size());
  est.rms_residual = std::sqrt(f.residual.squaredNorm() / static_cast<double>(std::max<Eigen::Index>(1, f.residual.size())));
  est.covariance = f.covariance;
  est.value_error = std::sqrt(std::max(0.0, f.covariance(0, 0)));
}

}  // namespace

PrefactorEstimate extract_from_overlaps(const std::vector<OverlapSample>& samples, double h_total,
                                        int n, double alpha) {
  std::set<int> distinct;
  for (const auto& s : samples) distinct.insert(s.n_sites);
  if (distinct.size() < 3) throw std::invalid_argument("extract_from_overlaps: need at least 3 distinct sizes");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].n_sites <= samples[i - 1].n_sites) {
      throw std::invalid_argument("extract_from_overlaps: sizes must be increasing");
    }
  }
  const auto m = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd x(m, 3);
  Eigen::VectorXd y(m);
  PrefactorEstimate est;
  est.n = n;
  est.alpha = alpha;
  est.method = PrefactorMethod::overlap_extrapolation;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double size = samples[static_cast<std::size_t>(i)].n_sites;
    const double ov = samples[static_cast<std::size_t>(i)].overlap;
    y[i] = std::pow(size / (2.0 * pi), 4.0 * h_total) * ov * ov;
    x(i, 0) = 1.0;
    x(i, 1) = 1.0 / size;
    x(i, 2) = 1.0 / (size * size);
    est.abscissa.push_back(size);
    est.raw.push_back(y[i]);
  }
  const LinearFit f = least_squares(x, y);
  if (f.rank < 3) throw std::invalid_argument("extract_from_overlaps: degenerate size set");
  fill_diagnostics(est, f);
  est.value = f.coef[0];
  if (!(est.value > 0.0)) {
    est.valid = false;
    est.note = "extrapolated amplitude is not positive";
  }
  return est;
}

PrefactorEstimate fit_two_point(const TwoPointDataset& data, bool include_satellites) {
  if (data.rows.empty()) throw std::invalid_argument("fit_two_point: no data");
  if (data.n < 1) throw std::invalid_argument("fit_two_point: n must be >= 1");
  bool has_even = false, has_odd = false;
  for (const auto& r : data.rows) {
    if (r.cut < 1 || r.cut >= r.n_sites) throw std::invalid_argument("fit_two_point: need 1 <= r < N");
    if (!std::isfinite(r.z)) throw std::invalid_argument("fit_two_point: non-finite moment");
    (r.cut % 2 == 0 ? has_even : has_odd) = true;
  }
  if (include_satellites && !(has_even && has_odd)) {
    throw std::invalid_argument(
        "fit_two_point: the r sweep covers a single parity, so the (-1)^r satellite term cannot be "
        "separated from the central amplitude");
  }

  const double ht = h_tau(data.n, data.central_charge);
  const double e0 = 4.0 * (ht + h_alpha_u1(data.alpha, data.g) / data.n);
  const double em = 4.0 * (ht + h_alpha_u1(data.alpha - 2.0 * pi, data.g) / data.n);
  const double ep = 4.0 * (ht + h_alpha_u1(data.alpha + 2.0 * pi, data.g) / data.n);
  // At alpha = 0 both satellites share one exponent and only their sum is identifiable.
  const bool merged = std::abs(em - ep) < 1e-12;
  const int cols = include_satellites ? (merged ? 2 : 3) : 1;

  const auto m = static_cast<Eigen::Index>(data.rows.size());
  Eigen::MatrixXd x(m, cols);
  Eigen::VectorXd y(m);
  PrefactorEstimate est;
  est.n = data.n;
  est.alpha = data.alpha;
  est.method = PrefactorMethod::two_point_fit;
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& row = data.rows[static_cast<std::size_t>(i)];
    const double w = chord_length(row.n_sites, row.cut);
    const double sign = row.cut % 2 == 0 ? 1.0 : -1.0;
    x(i, 0) = std::pow(w, -e0);
    if (cols >= 2) x(i, 1) = sign * std::pow(w, -em);
    if (cols == 3) x(i, 2) = sign * std::pow(w, -ep);
    y[i] = row.z;
    est.abscissa.push_back(row.cut);
    est.raw.push_back(row.z);
  }
  const LinearFit f = least_squares(x, y);
  if (f.rank < cols) {
    throw std::invalid_argument("fit_two_point: design matrix is rank deficient for this r sweep");
  }
  fill_diagnostics(est, f);
  est.value = f.coef[0];
  if (include_satellites && merged) {
    const double half = 0.5 * f.coef[1];
    est.coefficients = {f.coef[0], half, half};
    est.note = "satellite exponents coincide; their summed amplitude is split equally";
  }
  if (!(est.value > 0.0)) {
    est.valid = false;
    est.note = "central amplitude is not positive";
  }
  for (std::size_t k = 1; k < est.coefficients.size(); ++k) {
    if (est.coefficients[k] < 0.0 && est.note.empty()) est.note = "negative satellite amplitude";
  }
  return est;
}

}  // namespace sre
