#include "sre/sector_basis.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace sre {

namespace {

constexpr Config kDenseIndexLimit = Config{1} << 24;

Config ipow(Config base, int exp) {
  Config r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Config config_space_size(int local_dim, int n_sites) {
  if (local_dim < 2 || n_sites < 1) throw std::invalid_argument("config_space_size: bad dimensions");
  Config r = 1;
  for (int i = 0; i < n_sites; ++i) {
    if (r > (Config{1} << 62) / static_cast<Config>(local_dim)) {
      throw std::invalid_argument("config_space_size: configuration space exceeds 64-bit encoding");
    }
    r *= static_cast<Config>(local_dim);
  }
  return r;
}

void SectorBasis::build_index() {
  const Config space = config_space_size(local_dim_, site_count_);
  if (space <= kDenseIndexLimit) {
    dense_index_.assign(space, -1);
    for (std::size_t i = 0; i < states_.size(); ++i) {
      dense_index_[states_[i]] = static_cast<std::int32_t>(i);
    }
  }
}

std::int64_t SectorBasis::index_of(Config c) const {
  if (!dense_index_.empty()) {
    return c < dense_index_.size() ? dense_index_[c] : -1;
  }
  auto it = std::lower_bound(states_.begin(), states_.end(), c);
  if (it == states_.end() || *it != c) return -1;
  return it - states_.begin();
}

int SectorBasis::digit(Config c, int site) const {
  if (local_dim_ == 2) return static_cast<int>((c >> site) & 1u);
  for (int i = 0; i < site; ++i) c /= static_cast<Config>(local_dim_);
  return static_cast<int>(c % static_cast<Config>(local_dim_));
}

int SectorBasis::partial_charge(Config c, int sites) const {
  if (kind_ == ChargeKind::u1_spin) {
    const Config mask = sites >= 64 ? ~Config{0} : ((Config{1} << sites) - 1);
    return 2 * std::popcount(c & mask) - sites;
  }
  int s = 0;
  for (int j = 0; j < sites; ++j) {
    s += static_cast<int>(c % static_cast<Config>(local_dim_));
    c /= static_cast<Config>(local_dim_);
  }
  return s % local_dim_;
}

SectorBasis build_u1_basis(int n_sites, int two_sz) {
  if (n_sites < 1 || n_sites > 62) throw std::invalid_argument("build_u1_basis: need 1 <= N <= 62");
  if (std::abs(two_sz) > n_sites) throw std::invalid_argument("build_u1_basis: |2 S^z| > N");
  if ((two_sz + n_sites) % 2 != 0) {
    throw std::invalid_argument("build_u1_basis: 2 S^z = " + std::to_string(two_sz) +
                                " has the wrong parity for N = " + std::to_string(n_sites));
  }
  SectorBasis b;
  b.kind_ = ChargeKind::u1_spin;
  b.site_count_ = n_sites;
  b.local_dim_ = 2;
  b.sector_label_ = two_sz;

  const int ups = (n_sites + two_sz) / 2;
  if (ups == 0) {
    b.states_.push_back(0);
  } else {
    // Gosper's hack enumerates fixed-popcount words in increasing order.
    Config c = (Config{1} << ups) - 1;
    const Config limit = Config{1} << n_sites;
    while (c < limit) {
      b.states_.push_back(c);
      const Config u = c & (~c + 1);
      const Config v = c + u;
      c = v + (((v ^ c) / u) >> 2);
    }
  }
  b.build_index();
  return b;
}

SectorBasis build_clock_basis(int n_sites, int p, int q) {
  if (p < 2) throw std::invalid_argument("build_clock_basis: p must be >= 2");
  if (q < 0 || q >= p) {
    throw std::invalid_argument("build_clock_basis: charge q = " + std::to_string(q) +
                                " outside {0, ..., p-1}");
  }
  if (n_sites < 1) throw std::invalid_argument("build_clock_basis: N must be >= 1");
  const Config space = config_space_size(p, n_sites);
  SectorBasis b;
  b.kind_ = ChargeKind::zp_clock;
  b.site_count_ = n_sites;
  b.local_dim_ = p;
  b.sector_label_ = q;
  for (Config c = 0; c < space; ++c) {
    if (b.partial_charge(c, n_sites) == q) b.states_.push_back(c);
  }
  b.build_index();
  return b;
}

SplitConfig split_configuration(const SectorBasis& basis, std::size_t state_index, int cut) {
  if (state_index >= basis.size()) throw std::out_of_range("split_configuration: bad state index");
  if (cut < 1 || cut > basis.site_count() - 1) {
    throw std::invalid_argument("split_configuration: cut must satisfy 1 <= r <= N-1");
  }
  const Config c = basis.state(state_index);
  const Config base = ipow(static_cast<Config>(basis.local_dim()), cut);
  return {c % base, c / base, basis.partial_charge(c, cut)};
}

Config recombine(const SectorBasis& basis, Config a, Config b, int cut) {
  return a + b * ipow(static_cast<Config>(basis.local_dim()), cut);
}

BipartitionIndex bipartition_index(const SectorBasis& basis, int cut) {
  if (cut < 1 || cut > basis.site_count() - 1) {
    throw std::invalid_argument("bipartition_index: cut must satisfy 1 <= r <= N-1");
  }
  std::map<int, std::pair<std::set<Config>, std::set<Config>>> blocks;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto s = split_configuration(basis, i, cut);
    auto& entry = blocks[s.charge_a];
    entry.first.insert(s.a);
    entry.second.insert(s.b);
  }
  BipartitionIndex idx;
  idx.cut = cut;
  for (const auto& [charge, sets] : blocks) {
    idx.a_charges.push_back(charge);
    idx.a_block_dims.push_back(sets.first.size());
    idx.b_block_dims.push_back(sets.second.size());
  }
  return idx;
}

}  // namespace sre
