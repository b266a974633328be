#include "sre/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sre {

namespace {

using constants::pi;

constexpr std::array<double, 19> kZeta = {
    1.644934066848226436472415166646,    // zeta(2)
    1.2020569031595942853997381615114,   // zeta(3)
    1.0823232337111381915160036965412,   // zeta(4)
    1.036927755143369926331365486457,    // zeta(5)
    1.0173430619844491397145179297909,   // zeta(6)
    1.0083492773819228268397975498498,   // zeta(7)
    1.0040773561979443393786852385087,   // zeta(8)
    1.0020083928260822144178527692324,   // zeta(9)
    1.0009945751278180853371459589003,   // zeta(10)
    1.0004941886041194645587022825265,   // zeta(11)
    1.0002460865533080482986379980477,   // zeta(12)
    1.0001227133475784891467518365264,   // zeta(13)
    1.0000612481350587048292585451051,   // zeta(14)
    1.0000305882363070204935517285106,   // zeta(15)
    1.0000152822594086518717325714876,   // zeta(16)
    1.0000076371976378997622736002936,   // zeta(17)
    1.0000038172932649998398564616446,   // zeta(18)
    1.0000019082127165539389256569578,   // zeta(19)
    1.0000009539620338727961131520387,   // zeta(20)
};

// B_2, B_4, ..., B_24
constexpr std::array<double, 12> kBernoulliEven = {
    1.0 / 6.0,        -1.0 / 30.0,          1.0 / 42.0,     -1.0 / 30.0,
    5.0 / 66.0,       -691.0 / 2730.0,      7.0 / 6.0,      -3617.0 / 510.0,
    43867.0 / 798.0,  -174611.0 / 330.0,    854513.0 / 138.0,
    -236364091.0 / 2730.0,
};

constexpr double kStirlingThreshold = 20.0;

double log_g_one_plus_taylor(double w) {
  // log G(1+w) = w/2 log 2pi - (w + (1+gamma) w^2)/2 + sum_{k>=2} (-1)^k zeta(k) w^{k+1}/(k+1)
  CompensatedSum s;
  s += 0.5 * w * std::log(2.0 * pi);
  s += -0.5 * (w + (1.0 + constants::euler_gamma) * w * w);
  double wp = w * w * w;
  for (int k = 2; k < 80; ++k) {
    const double term = ((k % 2 == 0) ? 1.0 : -1.0) * zeta_int(k) * wp / (k + 1);
    s += term;
    if (std::abs(term) < 1e-19) break;
    wp *= w;
  }
  return s.value();
}

double log_g_one_plus_stirling(double x) {
  const double lx = std::log(x);
  CompensatedSum s;
  s += 0.5 * x * x * lx;
  s += -0.75 * x * x;
  s += 0.5 * x * std::log(2.0 * pi);
  s += -lx / 12.0;
  s += constants::zeta_prime_minus_one;
  const double inv_x2 = 1.0 / (x * x);
  double p = inv_x2;
  for (int k = 1; k <= 10; ++k) {
    s += bernoulli_even(k + 1) / (4.0 * k * (k + 1)) * p;
    p *= inv_x2;
  }
  return s.value();
}

bool near_nonzero_multiple(double v, double period) {
  const double ratio = v / period;
  const double nearest = std::round(ratio);
  return nearest != 0.0 && std::abs(ratio - nearest) < 1e-13;
}

void require_even_sites(int n_sites, const char* who) {
  if (n_sites < 2 || n_sites % 2 != 0) {
    throw std::invalid_argument(std::string(who) + ": N must be even and >= 2");
  }
}

}  // namespace

double zeta_int(int k) {
  if (k < 2) throw std::invalid_argument("zeta_int: k must be >= 2");
  if (k <= 20) return kZeta[static_cast<std::size_t>(k - 2)];
  double s = 1.0;
  for (int m = 2; m <= 12; ++m) s += std::pow(static_cast<double>(m), -k);
  return s;
}

double bernoulli_even(int k) {
  if (k < 1 || k > static_cast<int>(kBernoulliEven.size())) {
    throw std::invalid_argument("bernoulli_even: index out of table");
  }
  return kBernoulliEven[static_cast<std::size_t>(k - 1)];
}

double log_gamma(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

namespace detail {

double log_barnes_g_taylor_route(double z) {
  if (!(z > 0.0)) throw std::invalid_argument("log_barnes_g: z must be > 0");
  if (z < 0.5) return log_g_one_plus_taylor(z) - log_gamma(z);
  if (z <= 1.5) return log_g_one_plus_taylor(z - 1.0);
  const int m = static_cast<int>(std::ceil(z - 1.5));
  const double z0 = z - m;
  CompensatedSum s;
  s += log_g_one_plus_taylor(z0 - 1.0);
  for (int i = 0; i < m; ++i) s += log_gamma(z0 + i);
  return s.value();
}

double log_barnes_g_stirling_route(double z) {
  if (!(z > 0.0)) throw std::invalid_argument("log_barnes_g: z must be > 0");
  if (z >= kStirlingThreshold) return log_g_one_plus_stirling(z - 1.0);
  const int shift = static_cast<int>(std::ceil(kStirlingThreshold - z));
  CompensatedSum s;
  s += log_g_one_plus_stirling(z + shift - 1.0);
  for (int i = 0; i < shift; ++i) s += -log_gamma(z + i);
  return s.value();
}

}  // namespace detail

double log_barnes_g(double z) {
  if (!(z > 0.0)) throw std::invalid_argument("log_barnes_g: z must be > 0");
  return z <= kStirlingThreshold ? detail::log_barnes_g_taylor_route(z)
                                 : detail::log_barnes_g_stirling_route(z);
}

double log_barnes_g_leading_asymptotic(double z) {
  const double x = z - 1.0;
  return (0.5 * x * x - 1.0 / 12.0) * std::log(x) - 0.75 * x * x +
         0.5 * x * std::log(2.0 * pi) + 1.0 / 12.0 - constants::log_glaisher;
}

double polygamma(int m, double x) {
  if (m < 1) throw std::invalid_argument("polygamma: order must be >= 1");
  if (!(x > 0.0)) throw std::invalid_argument("polygamma: x must be > 0");
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m+1}
  const double m_fact = std::tgamma(m + 1.0);
  const double threshold = 20.0 + m;

  CompensatedSum s;
  while (x < threshold) {
    s += sign * m_fact / std::pow(x, m + 1);
    x += 1.0;
  }
  CompensatedSum tail;
  tail += std::tgamma(static_cast<double>(m)) / std::pow(x, m);
  tail += m_fact / (2.0 * std::pow(x, m + 1));
  for (int k = 1; k <= 10; ++k) {
    // B_{2k} (2k+m-1)! / ((2k)! x^{2k+m})
    const double log_ratio = log_gamma(2.0 * k + m) - log_gamma(2.0 * k + 1.0);
    tail += bernoulli_even(k) * std::exp(log_ratio - (2.0 * k + m) * std::log(x));
  }
  s += sign * tail.value();
  return s.value();
}

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double log_sinc_sum_x(double a, int n_sites) {
  require_even_sites(n_sites, "log_sinc_sum_x");
  const int half = n_sites / 2;
  CompensatedSum s;
  for (int k = 0; k <= half; ++k) {
    const double arg = k + a;
    if (near_nonzero_multiple(arg, n_sites)) {
      throw std::invalid_argument("log_sinc_sum_x: sinc zero at k = " + std::to_string(k));
    }
    s += std::log(std::abs(sinc(pi * arg / n_sites)));
  }
  return s.value();
}

double log_sinc_sum_y(double a, int n_sites) {
  require_even_sites(n_sites, "log_sinc_sum_y");
  const int half = n_sites / 2;
  CompensatedSum s;
  for (int d = -half; d <= half; ++d) {
    const double arg = d + a;
    if (near_nonzero_multiple(arg, n_sites)) {
      throw std::invalid_argument("log_sinc_sum_y: sinc zero at k - l = " + std::to_string(d));
    }
    const int multiplicity = half + 1 - std::abs(d);
    s += multiplicity * std::log(std::abs(sinc(pi * arg / n_sites)));
  }
  return s.value();
}

double log_sinc_sum_x_expansion(double a, int n_sites) {
  return 0.5 * n_sites * (1.0 - std::log(pi)) - std::log(pi / 2.0) * (a + 0.5);
}

double log_sinc_sum_y_expansion(double a, int n_sites) {
  const double n = n_sites;
  return n * n * sinc_integral_constant() / 4.0 + n * (1.0 - std::log(pi)) -
         std::log(pi / 2.0) * (a * a + 5.0 / 6.0);
}

double sinc_integral_constant() {
  return 0.5 * (3.0 - 2.0 * std::log(pi) - 7.0 * zeta_int(3) / (pi * pi));
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    for (int mult = remaining / part; mult >= 1; --mult) {
      current.push_back({part, mult});
      partitions_rec(remaining - part * mult, part - 1, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

PartitionList partitions(int j) {
  if (j < 1 || j > 12) throw std::invalid_argument("partitions: need 1 <= j <= 12");
  PartitionList list;
  list.total = j;
  Partition current;
  partitions_rec(j, j, current, list.partitions);
  return list;
}

}  // namespace sre
