#pragma once

// Real-argument special functions used by the closed-form prefactor and
// overlap formulas: Barnes G, polygamma, integer zeta values, log-sinc sums.

#include <cstddef>
#include <vector>

namespace sre {

namespace constants {
inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
/// log of the Glaisher-Kinkelin constant.
inline constexpr double log_glaisher = 0.24875447703378426254725299357611;
/// zeta'(-1) = 1/12 - log A.
inline constexpr double zeta_prime_minus_one = -0.16542114370045092921391966024278;
}  // namespace constants

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double x) {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Riemann zeta at integer k >= 2 (tabulated up to 20, short direct sum above).
double zeta_int(int k);

/// Bernoulli number B_{2k} for 1 <= k <= 12.
double bernoulli_even(int k);

/// log Gamma(x) for x > 0, reentrant.
double log_gamma(double x);

/// Natural log of Barnes G(z) for real z > 0. Throws std::invalid_argument on z <= 0.
double log_barnes_g(double z);

namespace detail {
// Two independent evaluation routes for log G; log_barnes_g picks one by range.
// Taylor series of log G(1+w) for |w| <= 1/2, reached through G(z+1) = Gamma(z) G(z).
double log_barnes_g_taylor_route(double z);
// Shift upward with the same recurrence until z >= 20, then the Stirling-type series.
double log_barnes_g_stirling_route(double z);
}  // namespace detail

/// Leading large-z form ((z-1)^2/2 - 1/12) log(z-1) - 3(z-1)^2/4 + (z-1)/2 log 2pi + 1/12 - log A.
/// Accurate only to O(1/z); exposed to check the large-N overlap expansion.
double log_barnes_g_leading_asymptotic(double z);

/// Polygamma psi^(m)(x), m >= 1, x > 0.
double polygamma(int m, double x);

/// sinc(x) = sin(x)/x with sinc(0) = 1.
double sinc(double x);

/// X(a, N) = sum_{k=0}^{N/2} log sinc[pi (k + a) / N].
double log_sinc_sum_x(double a, int n_sites);

/// Y(a, N) = sum_{k,l=0}^{N/2} log sinc[pi (k - l + a) / N], evaluated by
/// grouping equal differences k - l.
double log_sinc_sum_y(double a, int n_sites);

/// Euler-Maclaurin leading terms of X and Y.
double log_sinc_sum_x_expansion(double a, int n_sites);
double log_sinc_sum_y_expansion(double a, int n_sites);

/// J = 2 int_0^1 (1 - z) log sinc(pi z / 2) dz = (3 - 2 log pi - 7 zeta(3)/pi^2) / 2.
double sinc_integral_constant();

struct PartitionPart {
  int value;
  int multiplicity;
};
using Partition = std::vector<PartitionPart>;

struct PartitionList {
  int total = 0;
  std::vector<Partition> partitions;
};

/// All integer partitions of j (1 <= j <= 12), parts in decreasing order.
PartitionList partitions(int j);

}  // namespace sre
