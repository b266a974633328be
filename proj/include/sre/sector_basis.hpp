#pragma once

// Charge-sector bases for spin-1/2 chains (U(1) magnetization) and p-state
// clock chains (Z_p charge).
//
// Configurations are base-`local_dim` integers with site 1 in the least
// significant digit. For spin-1/2 a set bit is an up spin. For the clock chain
// the digits label eigenstates of the local shift X (X|m> = w^m |m>), so the
// Z_p charge is the digit sum mod p.

#include <cstdint>
#include <memory>
#include <vector>

namespace sre {

using Config = std::uint64_t;

enum class ChargeKind {
  u1_spin,  // labels are 2 S^z (same parity as the site count)
  zp_clock  // labels are q in {0, ..., p-1}
};

class SectorBasis {
 public:
  ChargeKind kind() const { return kind_; }
  int site_count() const { return site_count_; }
  int local_dim() const { return local_dim_; }
  /// 2 S^z for spin chains, q for clock chains.
  int sector_label() const { return sector_label_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<Config>& states() const { return states_; }
  Config state(std::size_t i) const { return states_[i]; }

  /// Position of a configuration, or -1 if it is not in this sector.
  std::int64_t index_of(Config c) const;

  /// Charge label of the first `sites` sites of a configuration (2 q_A or q_A mod p).
  int partial_charge(Config c, int sites) const;

  /// Digit of site j (0-based).
  int digit(Config c, int site) const;

  bool same_sector(const SectorBasis& other) const {
    return kind_ == other.kind_ && site_count_ == other.site_count_ &&
           local_dim_ == other.local_dim_ && sector_label_ == other.sector_label_;
  }

  friend SectorBasis build_u1_basis(int n_sites, int two_sz);
  friend SectorBasis build_clock_basis(int n_sites, int p, int q);

 private:
  SectorBasis() = default;
  void build_index();

  ChargeKind kind_ = ChargeKind::u1_spin;
  int site_count_ = 0;
  int local_dim_ = 2;
  int sector_label_ = 0;
  std::vector<Config> states_;
  std::vector<std::int32_t> dense_index_;  // used when local_dim^N is small
};

using SectorBasisPtr = std::shared_ptr<const SectorBasis>;

SectorBasis build_u1_basis(int n_sites, int two_sz);
SectorBasis build_clock_basis(int n_sites, int p, int q);

/// local_dim^n_sites, throws if it does not fit the encoding.
Config config_space_size(int local_dim, int n_sites);

struct SplitConfig {
  Config a;       // first r sites
  Config b;       // remaining N - r sites
  int charge_a;   // 2 q_A (spin) or q_A (clock)
};

SplitConfig split_configuration(const SectorBasis& basis, std::size_t state_index, int cut);
Config recombine(const SectorBasis& basis, Config a, Config b, int cut);

/// Subsystem charges reachable for a cut, with per-charge block dimensions.
struct BipartitionIndex {
  int cut = 0;
  std::vector<int> a_charges;  // labels as in SplitConfig::charge_a, ascending
  std::vector<std::size_t> a_block_dims;
  std::vector<std::size_t> b_block_dims;
};

BipartitionIndex bipartition_index(const SectorBasis& basis, int cut);

}  // namespace sre
