#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace flora {

struct Netlist;

/// Pin demand between unordered module pairs plus the minimum pin spacing u.
/// Y_ij is the number of nets containing both modules.
class FeedthroughParams {
 public:
  explicit FeedthroughParams(int u = 1) : u_(u) {}
  static FeedthroughParams from_netlist(const Netlist &netlist, int u = 1);

  int u() const { return u_; }
  int demand(int i, int j) const {
    auto it = y_.find(key(i, j));
    return it == y_.end() ? 0 : it->second;
  }
  void add_demand(int i, int j, int pins);
  /// Unordered pairs with Y_ij > 0, each as (i, j, Y) with i < j.
  const std::vector<std::array<int, 3>> &pairs() const;

 private:
  static std::uint64_t key(int i, int j) {
    if (i > j) std::swap(i, j);
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
  }
  int u_;
  std::unordered_map<std::uint64_t, int> y_;
  mutable std::vector<std::array<int, 3>> pair_cache_;
  mutable bool cache_valid_ = false;
};

struct MetricRow {
  double hpwl = 0.0;
  long long ftpin = 0;
  double ftmod = 0.0;  // half-integral
  double ws_pct = 0.0;
  double pd_pct = 0.0;
  double rt_s = 0.0;
};

}  // namespace flora
