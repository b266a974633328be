#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/hermite.hpp>

#include "oracles.hpp"
#include "sre/free_fermion.hpp"
#include "sre/scaling.hpp"

using namespace sre;

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

// Density of x = q / sqrt(K) for Zhat(alpha) = e^{-K alpha^2/2} (1 + sum a_j alpha^{2j}),
// by direct Fourier integration.
double rho_fourier(double k, double x, const std::vector<double>& a, int j_max) {
  auto f = [&](double al) {
    double s = 1.0;
    for (int j = 1; j <= j_max; ++j) s += a[j - 1] * std::pow(al, 2 * j);
    return std::cos(al * std::sqrt(k) * x) * std::exp(-0.5 * k * al * al) * s;
  };
  const double cut = 40.0 / std::sqrt(k);
  return std::sqrt(k) * GK::integrate(f, -cut, cut, 20, 1e-14) / (2 * oracle::pi);
}

}  // namespace

TEST_CASE("q_j are signed even Hermite polynomials") {
  for (int j = 0; j <= 6; ++j) {
    for (double x : {0.0, 0.4, 1.3, 2.7}) {
      // probabilists' He_{2j}(x) = 2^{-j} H_{2j}(x / sqrt 2)
      const double he = std::pow(2.0, -j) * boost::math::hermite(2 * j, x / std::sqrt(2.0));
      CHECK(q_poly(j, x) == doctest::Approx((j % 2 ? -1.0 : 1.0) * he).epsilon(1e-12));
    }
  }
  // the Gaussian annihilates every q_j with j >= 1
  for (int j = 1; j <= 4; ++j) {
    auto f = [j](double x) { return std::exp(-0.5 * x * x) * q_poly(j, x); };
    CHECK(std::abs(GK::integrate(f, -15.0, 15.0, 15, 1e-14)) < 1e-10);
  }
}

TEST_CASE("charge density series equals the Fourier integral of the moments") {
  const std::vector<double> a = prefactor_series(1, 3).a;
  for (double k : {2.0, 5.0}) {
    for (double x : {0.0, 0.7, 1.8}) {
      for (int j_max = 1; j_max <= 3; ++j_max) {
        CAPTURE(k);
        CAPTURE(x);
        CAPTURE(j_max);
        CHECK(rho_x(k, x, a, j_max) == doctest::Approx(rho_fourier(k, x, a, j_max)).epsilon(1e-10));
      }
    }
  }
  CHECK(i_series(3.0, 0.5, a, 0) == 1.0);
}

TEST_CASE("chord, K and conformal dimensions") {
  CHECK(chord_length(10, 5) == doctest::Approx(10 / oracle::pi));
  CHECK(chord_length(20, 3) == doctest::Approx(chord_length(20, 17)));
  CHECK(k_ell(0.5, 100, 50) == doctest::Approx(std::log(100 / oracle::pi) / (oracle::pi * oracle::pi)));
  CHECK(k_ell(0.5, 10, 3, Geometry::thermal_line) ==
        doctest::Approx(std::log(10 / oracle::pi * std::sinh(3 * oracle::pi / 10)) / (oracle::pi * oracle::pi)));
  CHECK_THROWS(k_ell(0.5, 4, 1));
  CHECK(h_alpha_u1(1.0, 0.5) == doctest::Approx(1.0 / (8 * oracle::pi * oracle::pi)));
  CHECK(h_tau(1, 1.0) == 0.0);
  CHECK(h_tau(2, 1.0) == doctest::Approx(1.0 / 16));
  CHECK(h_sigma(2) == doctest::Approx(1.0 / 16));
  CHECK(h_sigma(3) == doctest::Approx(1.0 / 15));
  CHECK(h_alpha_clock(1, 3) == doctest::Approx(h_sigma(3)));
  const DimensionSet d = clock_dimensions(2, 1, 3, 0.8);
  CHECK(d.h_tau == doctest::Approx(0.8 / 16));
  CHECK(u1_dimensions(1, 0.0, 0.5).h_alpha == 0.0);
}

TEST_CASE("c_n correction approaches its leading form") {
  const auto a1 = prefactor_series(1, 3).a;
  const auto a2 = prefactor_series(2, 3).a;
  for (double x : {0.0, 0.5, 1.0}) {
    double prev = 1e9;
    for (double k : {4.0, 16.0, 64.0, 256.0}) {
      const double gap = std::abs(cn_correction(2, k, x, a1, a2, 3) - cn_leading(2, k, x, a1[0], a2[0]));
      CHECK(gap * k < prev);
      prev = gap * k;
    }
  }
  CHECK_THROWS(cn_correction(1, 3.0, 0.0, a1, a1, 3));
  const double s = resolved_entropy_prediction(1.2, 3.0, 1.0, 2, a1, a2, 2);
  CHECK(s == doctest::Approx(1.2 - 0.5 * std::log(6 * oracle::pi) - 0.5 * std::log(2.0) +
                             cn_correction(2, 3.0, 1 / std::sqrt(3.0), a1, a2, 2)));
}

TEST_CASE("clock predictions") {
  for (int p : {2, 3, 5}) {
    const std::vector<double> pq = clock_pq_prediction(p, 12, 6, 0.7);
    double s = 0.0;
    for (double v : pq) s += v;
    CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pq[0] > 1.0 / p);
  }
  const double w = chord_length(12, 6);
  CHECK(clock_cn_prediction(2, 12, 6, 2, 0.5, 0.3) ==
        doctest::Approx(-(0.3 * std::pow(w, -0.125) - 2 * 0.5 * std::pow(w, -0.25))));
}

TEST_CASE("listed scaling examples") {
  CHECK(k_ell(0.5, 100, 50) == doctest::Approx(0.35060).epsilon(1e-4));
  CHECK(k_ell(0.3, 40, 7) == doctest::Approx(k_ell(0.3, 40, 33)).epsilon(1e-14));
  double prev = -1e9;
  for (double l : {5.0, 10.0, 20.0, 40.0}) {
    const double k = k_ell(0.5, 1000.0, l, Geometry::thermal_line);
    CHECK(k > prev);
    prev = k;
  }
  for (double x : {0.0, 0.8, 2.1}) {
    CHECK(q_poly(0, x) == 1.0);
    CHECK(q_poly(1, x) == doctest::Approx(1 - x * x));
    CHECK(q_poly(2, x) == doctest::Approx(3 - 6 * x * x + x * x * x * x));
  }
  const std::vector<double> zero(3, 0.0);
  CHECK(i_series(1.7, 0.4, zero, 3) == 1.0);
  CHECK(i_series(2.0, 0.0, {-0.115018}, 1) == doctest::Approx(1 - 0.057509));
  const auto a = prefactor_series(1, 3).a;
  for (double x : {0.0, 1.0, 2.0})
    CHECK(std::abs(i_series(3.0, x, a, 3) - i_series(3.0, x, a, 2)) <= std::abs(a[2] * q_poly(3, x)) / 27.0 + 1e-15);
  CHECK(rho_x(2.0, 0.3, zero, 3) == doctest::Approx(std::exp(-0.045) / std::sqrt(2 * oracle::pi)));
  auto dens = [&](double x) { return rho_x(3.0, x, a, 3); };
  CHECK(GK::integrate(dens, -20.0, 20.0, 15, 1e-14) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("listed c_n examples") {
  const std::vector<double> zero(3, 0.0);
  CHECK(cn_correction(2, 5.0, 0.7, zero, zero, 3) == 0.0);
  const auto a1 = prefactor_series(1, 3).a, a2 = prefactor_series(2, 3).a;
  CHECK(cn_leading(2, 4.0, 0.0, a1[0], a2[0]) == doctest::Approx(2.0 / 4.0 * (a2[0] - a1[0]) / (1 - 2.0)));
  const double full = cn_correction(2, 50.0, 0.5, a1, a2, 3), lead = cn_leading(2, 50.0, 0.5, a1[0], a2[0]);
  CHECK(std::abs(full - lead) < 0.01 * std::abs(lead));
  // c_n -> 0 like 1/K
  for (double k : {10.0, 100.0, 1000.0}) CHECK(std::abs(cn_correction(3, k, 0.4, a1, prefactor_series(3, 3).a, 3)) * k < 1.0);
  // q dependence enters only through c_n
  const double s1 = resolved_entropy_prediction(0.9, 4.0, 0.0, 2, a1, a2, 3);
  const double s2 = resolved_entropy_prediction(0.9, 4.0, 1.0, 2, a1, a2, 3);
  CHECK(s1 - s2 == doctest::Approx(cn_correction(2, 4.0, 0.0, a1, a2, 3) - cn_correction(2, 4.0, 0.5, a1, a2, 3)));
  CHECK(resolved_entropy_prediction(0.9, 4.0, 0.0, 2, zero, zero, 3) == doctest::Approx(resolved_entropy_prediction(0.9, 4.0, 1.5, 2, zero, zero, 3)));
  for (double v : clock_pq_prediction(3, 20, 7, 0.0)) CHECK(v == doctest::Approx(1.0 / 3));
  CHECK(clock_cn_prediction(3, 20, 7, 2, 0.0, 0.0) == 0.0);
  CHECK(clock_pq_prediction(2, 20, 7, 0.6)[0] == doctest::Approx(clock_pq_prediction(2, 20, 13, 0.6)[0]).epsilon(1e-14));
}
