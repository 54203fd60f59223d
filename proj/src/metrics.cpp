#include "flora/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flora {

FeedthroughParams FeedthroughParams::from_netlist(const Netlist &netlist,
                                                  int u) {
  FeedthroughParams params(u);
  for (const auto &net : netlist.nets)
    for (std::size_t a = 0; a < net.modules.size(); ++a)
      for (std::size_t b = a + 1; b < net.modules.size(); ++b)
        params.add_demand(net.modules[a], net.modules[b], 1);
  return params;
}

void FeedthroughParams::add_demand(int i, int j, int pins) {
  if (i == j) throw std::invalid_argument("pin demand needs distinct modules");
  y_[key(i, j)] += pins;
  cache_valid_ = false;
}

const std::vector<std::array<int, 3>> &FeedthroughParams::pairs() const {
  if (!cache_valid_) {
    pair_cache_.clear();
    pair_cache_.reserve(y_.size());
    for (const auto &[k, y] : y_)
      pair_cache_.push_back({static_cast<int>(k >> 32),
                             static_cast<int>(k & 0xffffffffu), y});
    std::sort(pair_cache_.begin(), pair_cache_.end());
    cache_valid_ = true;
  }
  return pair_cache_;
}

std::vector<std::optional<std::pair<double, double>>> module_centroids(
    const Layout &layout) {
  int n = layout.module_count();
  std::vector<double> sx(n, 0.0), sy(n, 0.0);
  std::vector<long long> cnt(n, 0);
  const auto &canvas = layout.canvas();
  for (int y = 0; y < layout.height(); ++y)
    for (int x = 0; x < layout.width(); ++x) {
      std::int16_t m = canvas.owner(x, y);
      if (m == GridCanvas::kBlank) continue;
      sx[m] += x + 0.5;
      sy[m] += y + 0.5;
      ++cnt[m];
    }
  std::vector<std::optional<std::pair<double, double>>> out(n);
  for (int m = 0; m < n; ++m)
    if (cnt[m] > 0) out[m] = std::make_pair(sx[m] / cnt[m], sy[m] / cnt[m]);
  return out;
}

std::optional<NetBox> net_box(
    const Net &net,
    const std::vector<std::optional<std::pair<double, double>>> &centroids) {
  std::optional<NetBox> box;
  auto extend = [&](double x, double y) {
    if (!box) {
      box = NetBox{x, x, y, y};
      return;
    }
    box->min_x = std::min(box->min_x, x);
    box->max_x = std::max(box->max_x, x);
    box->min_y = std::min(box->min_y, y);
    box->max_y = std::max(box->max_y, y);
  };
  for (int m : net.modules) {
    if (!centroids[m])
      throw std::invalid_argument("net references module with empty region");
    extend(centroids[m]->first, centroids[m]->second);
  }
  for (const auto &p : net.fixed_points) extend(p.x, p.y);
  return box;
}

double hpwl(const Layout &layout, const std::vector<Net> &nets) {
  auto centroids = module_centroids(layout);
  double total = 0.0;
  for (const auto &net : nets) {
    auto box = net_box(net, centroids);
    if (!box) continue;
    total += (box->max_x - box->min_x) + (box->max_y - box->min_y);
  }
  return total;
}

namespace {

// Cell extent [lo, hi] spanned by a real interval: the half-open row of
// cells whose span intersects [a, b], with the cell containing `a` always
// included (degenerate boxes land in one cell).
std::pair<int, int> cell_span(double a, double b) {
  int lo = static_cast<int>(std::floor(a));
  int hi = std::max(lo, static_cast<int>(std::ceil(b)) - 1);
  return {lo, hi};
}

bool module_intersects_box(const Layout &layout, int m, const Rect &box) {
  if (layout.cell_count(m) == 0) return false;
  Rect bb = layout.bbox(m);
  if (!bb.intersects(box)) return false;
  Rect probe{std::max(bb.x, box.x), std::max(bb.y, box.y), 0, 0};
  probe.w = std::min(bb.x2(), box.x2()) - probe.x;
  probe.h = std::min(bb.y2(), box.y2()) - probe.y;
  const auto &canvas = layout.canvas();
  for (int y = probe.y; y < probe.y2(); ++y)
    for (int x = probe.x; x < probe.x2(); ++x)
      if (canvas.owner(x, y) == m) return true;
  return false;
}

}  // namespace

double ftmod(const Layout &layout, const Net &net) {
  auto centroids = module_centroids(layout);
  auto box = net_box(net, centroids);
  if (!box) return 0.0;
  auto [cx0, cx1] = cell_span(box->min_x, box->max_x);
  auto [cy0, cy1] = cell_span(box->min_y, box->max_y);
  Rect cell_box{cx0, cy0, cx1 - cx0 + 1, cy1 - cy0 + 1};
  int feedthrough = 0;
  for (int m = 0; m < layout.module_count(); ++m) {
    if (std::binary_search(net.modules.begin(), net.modules.end(), m)) continue;
    if (module_intersects_box(layout, m, cell_box)) ++feedthrough;
  }
  return 0.5 * feedthrough;
}

double ftmod_total(const Layout &layout, const std::vector<Net> &nets) {
  // Shares the per-net definition; centroids recomputed once here.
  auto centroids = module_centroids(layout);
  int feedthrough = 0;
  for (const auto &net : nets) {
    auto box = net_box(net, centroids);
    if (!box) continue;
    auto [cx0, cx1] = cell_span(box->min_x, box->max_x);
    auto [cy0, cy1] = cell_span(box->min_y, box->max_y);
    Rect cell_box{cx0, cy0, cx1 - cx0 + 1, cy1 - cy0 + 1};
    for (int m = 0; m < layout.module_count(); ++m) {
      if (std::binary_search(net.modules.begin(), net.modules.end(), m))
        continue;
      if (module_intersects_box(layout, m, cell_box)) ++feedthrough;
    }
  }
  return 0.5 * feedthrough;
}

long long ftpin_pair(long long ce, int y_demand, int u) {
  long long lack = static_cast<long long>(u) * y_demand - ce;
  if (lack <= 0) return 0;
  return (lack + u - 1) / u;
}

namespace {

long long common_edge_cells(const Layout &layout, int i, int j) {
  if (layout.cell_count(i) == 0 || layout.cell_count(j) == 0) return 0;
  Rect bi = layout.bbox(i), bj = layout.bbox(j);
  // Regions can only touch if the bboxes, grown by one cell, intersect.
  Rect grown{bi.x - 1, bi.y - 1, bi.w + 2, bi.h + 2};
  if (!grown.intersects(bj)) return 0;
  const auto &canvas = layout.canvas();
  long long edges = 0;
  std::int16_t a = layout.cell_count(i) <= layout.cell_count(j) ? i : j;
  std::int16_t b = a == i ? j : i;
  Rect scan = layout.bbox(a);
  for (int y = scan.y; y < scan.y2(); ++y)
    for (int x = scan.x; x < scan.x2(); ++x) {
      if (canvas.owner(x, y) != a) continue;
      if (x + 1 < layout.width() && canvas.owner(x + 1, y) == b) ++edges;
      if (x - 1 >= 0 && canvas.owner(x - 1, y) == b) ++edges;
      if (y + 1 < layout.height() && canvas.owner(x, y + 1) == b) ++edges;
      if (y - 1 >= 0 && canvas.owner(x, y - 1) == b) ++edges;
    }
  return edges;
}

}  // namespace

long long ftpin(const Layout &layout, int i, int j,
                const FeedthroughParams &params) {
  if (i == j) throw std::invalid_argument("ftpin needs distinct modules");
  return ftpin_pair(common_edge_cells(layout, i, j), params.demand(i, j),
                    params.u());
}

long long ftpin_total(const Layout &layout, const FeedthroughParams &params) {
  long long total = 0;
  for (const auto &[i, j, y] : params.pairs())
    total += ftpin_pair(common_edge_cells(layout, i, j), y, params.u());
  return total;
}

std::vector<std::vector<long long>> ce_matrix(const Layout &layout) {
  int n = layout.module_count();
  std::vector<std::vector<long long>> ce(n, std::vector<long long>(n, 0));
  const auto &canvas = layout.canvas();
  auto credit = [&](std::int16_t a, std::int16_t b) {
    if (a == GridCanvas::kBlank || b == GridCanvas::kBlank || a == b) return;
    ++ce[a][b];
    ++ce[b][a];
  };
  for (int y = 0; y < layout.height(); ++y)
    for (int x = 0; x < layout.width(); ++x) {
      if (x + 1 < layout.width())
        credit(canvas.owner(x, y), canvas.owner(x + 1, y));
      if (y + 1 < layout.height())
        credit(canvas.owner(x, y), canvas.owner(x, y + 1));
    }
  return ce;
}

double whitespace_pct(const Layout &layout) {
  double total = static_cast<double>(layout.width()) * layout.height();
  return 100.0 * layout.blank_cells() / total;
}

double pd(const ModuleState &module) {
  long long total = 0, placed = 0;
  for (const auto &c : module.comps) {
    total += c.spec.area();
    if (c.placed) placed += c.spec.area();
  }
  if (total == 0) return 1.0;
  return static_cast<double>(placed) / total;
}

double pd_total(const Layout &layout) {
  long long total = 0, placed = 0;
  for (const auto &m : layout.modules())
    for (const auto &c : m.comps) {
      total += c.spec.area();
      if (c.placed) placed += c.spec.area();
    }
  if (total == 0) return 100.0;
  return 100.0 * placed / total;
}

double sa_objective(const Layout &layout, const std::vector<Net> &nets,
                    const FeedthroughParams &params,
                    const SaObjectiveRefs &refs, const SaWeights &weights) {
  return sa_objective(ftmod_total(layout, nets), ftpin_total(layout, params),
                      refs, weights);
}

MetricRow compute_metrics(const Layout &layout, const std::vector<Net> &nets,
                          const FeedthroughParams &params) {
  MetricRow row;
  row.hpwl = hpwl(layout, nets);
  row.ftpin = ftpin_total(layout, params);
  row.ftmod = ftmod_total(layout, nets);
  row.ws_pct = whitespace_pct(layout);
  row.pd_pct = pd_total(layout);
  return row;
}

}  // namespace flora
