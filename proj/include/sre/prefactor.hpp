#pragma once

// Estimates of the lattice prefactor |A_n(alpha)|^2.
//
// Overlap method: y_N = (N/2pi)^{4h} |overlap|^2 is fitted to A + B/N + C/N^2 and
// A is returned. The correction exponents are not known in general, so the
// quadratic form in 1/N is a generic choice and the residuals are reported.
//
// Two-point method: at fixed exponents the model
//   Zhat_n(alpha) = A_0 w^{-e_0} + (-1)^r [A_- w^{-e_-} + A_+ w^{-e_+}],
//   e_m = 4 (h_tau + h_{alpha + 2 pi m} / n),  w = (N/pi) sin(pi r/N),
// is linear in the amplitudes and is solved by least squares. A_- and A_+
// belong to alpha - 2pi and alpha + 2pi.

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sre {

enum class PrefactorMethod { overlap_extrapolation, two_point_fit, exact };

const char* to_string(PrefactorMethod m);

struct PrefactorEstimate {
  int n = 1;
  double alpha = 0.0;
  double value = 0.0;
  PrefactorMethod method = PrefactorMethod::exact;
  bool valid = true;
  std::string note;

  std::vector<double> coefficients;  // (A, B, C) or (A_0, A_-, A_+)
  std::vector<double> abscissa;      // N for overlaps, r for two-point rows
  std::vector<double> raw;           // y_N or Zhat rows
  std::vector<double> residuals;
  double rms_residual = 0.0;
  Eigen::MatrixXd covariance;
  double value_error = 0.0;  // sqrt of the covariance entry of `value`
};

struct OverlapSample {
  int n_sites = 0;
  double overlap = 0.0;  // |<psi_0|psi_alpha>|
};

PrefactorEstimate extract_from_overlaps(const std::vector<OverlapSample>& samples, double h_total,
                                        int n = 1, double alpha = 0.0);

struct TwoPointRow {
  int n_sites = 0;
  int cut = 0;
  double z = 0.0;  // Re Zhat_n(alpha)
};

struct TwoPointDataset {
  std::string model = "xx";
  int n = 1;
  double alpha = 0.0;
  double g = 0.5;
  double central_charge = 1.0;
  std::vector<TwoPointRow> rows;
};

/// With include_satellites = false only A_0 is fitted (used to expose the parity oscillation).
PrefactorEstimate fit_two_point(const TwoPointDataset& data, bool include_satellites = true);

}  // namespace sre
