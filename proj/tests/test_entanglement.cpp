#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sre/entanglement.hpp"
#include "sre/free_fermion.hpp"

using namespace sre;

namespace {

oracle::Vec full_vector(const GroundStateResult& g, Eigen::Index dim) {
  std::vector<Eigen::Index> idx;
  for (Config c : g.basis->states()) idx.push_back(static_cast<Eigen::Index>(c));
  return oracle::embed(g.vector, idx, dim);
}

}  // namespace

TEST_CASE("blocked spectrum equals the full reduced density matrix") {
  const int n = 10;
  const GroundStateResult g = lowest_eigenpair(build_xxz(XxzParams::from_delta(n, 0.4, 0.7), 0));
  const oracle::Vec psi = full_vector(g, Eigen::Index{1} << n);
  for (int r = 1; r < n; ++r) {
    const oracle::Mat rho = oracle::reduced_density(psi, r, n, 2);
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(rho, Eigen::EigenvaluesOnly);
    std::vector<double> ref(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    const ChargeBlockedRdm rdm = charge_blocked_rdm(g, r);
    std::vector<double> mine;
    double ptot = 0.0;
    for (const auto& b : rdm.blocks) {
      ptot += b.probability;
      CHECK(b.charge == doctest::Approx(0.5 * b.label));
      for (Eigen::Index k = 0; k < b.spectrum.size(); ++k) mine.push_back(b.probability * b.spectrum[k]);
    }
    CHECK(ptot == doctest::Approx(1.0).epsilon(1e-13));
    // compare the nonzero parts of both spectra
    std::sort(ref.rbegin(), ref.rend());
    std::sort(mine.rbegin(), mine.rend());
    for (std::size_t k = 0; k < std::min<std::size_t>(20, mine.size()); ++k) CHECK(std::abs(mine[k] - ref[k]) < 1e-12);

    for (int nn = 1; nn <= 3; ++nn) {
      for (double alpha : {-2.9, -0.4, 1.1, 3.0}) {
        CHECK(std::abs(charged_moment(rdm, nn, alpha) - oracle::spin_charged_moment(rho, r, nn, alpha)) < 1e-12);
      }
    }
  }
}

TEST_CASE("exact U(1) inversion on the (r+1)-point grid") {
  const GroundStateResult g = lowest_eigenpair(build_xxz(XxzParams::from_delta(12, -0.3, 0.0), 0));
  for (int r : {3, 4, 7}) {
    const ChargeBlockedRdm rdm = charge_blocked_rdm(g, r);
    for (int n = 1; n <= 3; ++n) {
      const ChargedMoments m = charged_moments(rdm, n, u1_inversion_grid(r));
      const ResolvedPartitionFunctions z = invert_moments_u1(m, r);
      CHECK(z.charges.size() == static_cast<std::size_t>(r + 1));
      CHECK(z.max_imaginary < 1e-13);
      for (std::size_t k = 0; k < z.charges.size(); ++k) {
        const ChargeBlock* b = rdm.find(static_cast<int>(std::lround(2 * z.charges[k])));
        const double direct = b ? block_partition_function(*b, n) : 0.0;
        CHECK(std::abs(z.values[k] - direct) < 1e-13);
      }
    }
    CHECK_THROWS(invert_moments_u1(charged_moments(rdm, 2, {0.1, 0.2}), r));
  }
}

TEST_CASE("resolved entropies decompose the total") {
  const GroundStateResult g = lowest_eigenpair(build_xxz(XxzParams::from_delta(12, 0.0, 0.0), 0));
  const ChargeBlockedRdm rdm = charge_blocked_rdm(g, 5);
  const ResolvedEntropies e = resolved_entropies(rdm, 2);
  double svn = e.number_entropy;
  for (std::size_t k = 0; k < e.charges.size(); ++k)
    if (e.probability[k] > 0) svn += e.probability[k] * e.von_neumann[k];
  CHECK(svn == doctest::Approx(e.total_von_neumann).epsilon(1e-12));
  CHECK(e.decomposition_residual < 1e-12);
  CHECK(e.total_renyi == doctest::Approx(-std::log(charged_moment(rdm, 2, 0.0).real())));
  // particle-hole symmetry at half filling
  for (std::size_t k = 0; k < e.charges.size(); ++k) {
    const std::size_t m = e.charges.size() - 1 - k;
    CHECK(e.probability[k] == doctest::Approx(e.probability[m]).epsilon(1e-10));
  }
  CHECK_THROWS(resolved_entropies(rdm, 1));
}

TEST_CASE("clock charge distribution against the Z-basis oracle") {
  const int p = 3, n = 5;
  const GroundStateResult g = lowest_eigenpair(build_clock(ClockParams::make(p, n), 0));
  const oracle::Mat h = oracle::clock_dense(p, n, 1.0);
  const oracle::Eig ref = oracle::lowest(h);
  CHECK(g.energy == doctest::Approx(ref.energy).epsilon(1e-11));
  for (int r = 1; r < n; ++r) {
    const ChargeBlockedRdm rdm = charge_blocked_rdm(g, r);
    const oracle::Mat qa = oracle::clock_charge(p, n, r);
    // <Q_A^a> = sum_q w^{a q} p_q
    oracle::Mat qpow = oracle::Mat::Identity(h.rows(), h.cols());
    for (int a = 0; a < p; ++a) {
      const cplx expect = ref.vector.dot(qpow * ref.vector);
      cplx mine = 0.0;
      for (const auto& b : rdm.blocks) mine += std::polar(b.probability, 2 * oracle::pi * a * b.label / p);
      CHECK(std::abs(mine - expect) < 1e-10);
      CHECK(std::abs(clock_charged_moment(rdm, 1, a) - expect) < 1e-10);
      qpow = qpow * qa;
    }
    for (int nn = 1; nn <= 3; ++nn) {
      std::vector<cplx> mom;
      for (int a = 0; a < p; ++a) mom.push_back(clock_charged_moment(rdm, nn, a));
      const std::vector<cplx> z = clock_invert(mom);
      for (int q = 0; q < p; ++q) {
        const ChargeBlock* b = rdm.find(q);
        CHECK(std::abs(z[q] - (b ? block_partition_function(*b, nn) : 0.0)) < 1e-13);
      }
    }
  }
}

TEST_CASE("product and singlet states") {
  const SectorBasis b4 = build_u1_basis(4, 0);
  VectorXc prod = VectorXc::Zero(static_cast<Eigen::Index>(b4.size()));
  prod[b4.index_of(0b1010)] = 1.0;  // |0101> with site 1 first
  const ChargeBlockedRdm r1 = charge_blocked_rdm(b4, prod, 2);
  int nonempty = 0;
  for (const auto& b : r1.blocks) {
    if (b.probability > 0) {
      ++nonempty;
      CHECK(b.label == 0);
      CHECK(b.probability == doctest::Approx(1.0));
      CHECK(b.spectrum[0] == doctest::Approx(1.0));
      CHECK(b.spectrum.tail(b.spectrum.size() - 1).norm() < 1e-14);
    }
  }
  CHECK(nonempty == 1);

  const SectorBasis b2 = build_u1_basis(2, 0);
  VectorXc singlet(2);
  singlet << 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
  const ChargeBlockedRdm r2 = charge_blocked_rdm(b2, singlet, 1);
  REQUIRE(r2.blocks.size() == 2);
  for (const auto& b : r2.blocks) {
    CHECK(std::abs(b.charge) == 0.5);
    CHECK(b.probability == doctest::Approx(0.5));
    CHECK(b.spectrum[0] == doctest::Approx(1.0));
  }
}

TEST_CASE("entropies of hand-made spectra") {
  ChargeBlockedRdm rdm;
  rdm.cut = 2;
  ChargeBlock pure, mixed;
  pure.label = -2;
  pure.charge = -1;
  pure.probability = 0.5;
  pure.spectrum = Eigen::VectorXd::Ones(1);
  mixed.label = 0;
  mixed.charge = 0;
  mixed.probability = 0.5;
  mixed.spectrum = Eigen::VectorXd::Constant(2, 0.5);
  rdm.blocks = {pure, mixed};
  const ResolvedEntropies e = resolved_entropies(rdm, 2);
  CHECK(e.renyi[0] == 0.0);
  CHECK(e.von_neumann[0] == 0.0);
  CHECK(e.renyi[1] == doctest::Approx(std::log(2.0)));
  CHECK(e.von_neumann[1] == doctest::Approx(std::log(2.0)));
}

TEST_CASE("listed U(1) examples") {
  const GroundStateResult g8 = lowest_eigenpair(build_xxz(XxzParams::from_delta(8, 0.0), 0));
  const ChargeBlockedRdm r4 = charge_blocked_rdm(g8, 4);
  const std::vector<double> pn = particle_number_distribution(correlation_spectrum(8, 4));
  for (int m = 0; m <= 4; ++m) CHECK(std::abs(r4.find(2 * m - 4)->probability - pn[m]) < 1e-10);
  CHECK(std::abs(charged_moment(r4, 1, 0.0) - 1.0) < 1e-12);

  // purity against the dense reduced density matrix
  const oracle::Vec psi = full_vector(g8, 256);
  const oracle::Mat rho = oracle::reduced_density(psi, 4, 8, 2);
  CHECK(charged_moment(r4, 2, 0.0).real() == doctest::Approx((rho * rho).trace().real()).epsilon(1e-12));

  const GroundStateResult g12 = lowest_eigenpair(build_xxz(XxzParams::from_delta(12, 0.0), 0));
  CHECK(std::abs(charged_moment(charge_blocked_rdm(g12, 6), 1, 1.3) - correlation_matrix_moments(12, 6, 1, 1.3)) < 1e-10);
  CHECK(resolved_entropies(charge_blocked_rdm(g12, 6), 2).decomposition_residual < 1e-10);

  for (int r : {3, 5}) {
    const ChargeBlockedRdm rdm = charge_blocked_rdm(g8, r);
    const ResolvedPartitionFunctions z1 = invert_moments_u1(charged_moments(rdm, 1, u1_inversion_grid(r)), r);
    for (std::size_t k = 0; k < z1.charges.size(); ++k) {
      const ChargeBlock* b = rdm.find(static_cast<int>(std::lround(2 * z1.charges[k])));
      CHECK(std::abs(z1.values[k] - (b ? b->probability : 0.0)) < 1e-10);
      CHECK(z1.values[k] > -1e-12);
    }
    // Z_{n+1}(q) <= Z_n(q)
    for (const auto& b : rdm.blocks)
      if (b.probability > 0)
        for (int n = 1; n < 4; ++n) CHECK(block_partition_function(b, n + 1) <= block_partition_function(b, n) + 1e-15);
  }
}

TEST_CASE("listed clock examples") {
  const GroundStateResult g = lowest_eigenpair(build_clock(ClockParams::make(2, 8), 0));
  const ChargeBlockedRdm rdm = charge_blocked_rdm(g, 3);
  for (int n = 1; n <= 3; ++n) {
    const double z0 = block_partition_function(*rdm.find(0), n), z1 = block_partition_function(*rdm.find(1), n);
    CHECK(std::abs(clock_charged_moment(rdm, n, 1) - (z0 - z1)) < 1e-13);
  }
  CHECK(std::abs(clock_charged_moment(rdm, 1, 0) - 1.0) < 1e-12);

  const GroundStateResult g3 = lowest_eigenpair(build_clock(ClockParams::make(3, 6), 0));
  const ChargeBlockedRdm r3 = charge_blocked_rdm(g3, 3);
  std::vector<cplx> mom;
  for (int a = 0; a < 3; ++a) mom.push_back(clock_charged_moment(r3, 2, a));
  const auto z = clock_invert(mom);
  for (int q = 0; q < 3; ++q) CHECK(std::abs(z[q] - block_partition_function(*r3.find(q), 2)) < 1e-12);

  // Ising N = 12: p_0 - p_1 positive and decreasing in r up to N/2
  const GroundStateResult gi = lowest_eigenpair(build_clock(ClockParams::make(2, 12), 0));
  double prev = 1.0;
  for (int r = 1; r <= 6; ++r) {
    const ChargeBlockedRdm ri = charge_blocked_rdm(gi, r);
    const double d = ri.find(0)->probability - ri.find(1)->probability;
    CHECK(d > 0.0);
    CHECK(d < prev);
    prev = d;
  }
}
