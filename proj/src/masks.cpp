#include "flora/masks.hpp"

#include <algorithm>
#include <cmath>

#include "flora/metrics.hpp"

namespace flora {

long long MaskGrid::legal_count() const {
  long long n = 0;
  for (double d : delta_)
    if (d != kIllegal) ++n;
  return n;
}

MaskInput make_mask_input(const Layout &layout, const std::vector<Net> &nets,
                          int moving, int module_w, int module_h) {
  MaskInput input;
  input.canvas_w = layout.width();
  input.canvas_h = layout.height();
  input.module_w = module_w;
  input.module_h = module_h;
  input.occupied.assign(
      static_cast<std::size_t>(layout.width()) * layout.height(), 0);
  const auto &canvas = layout.canvas();
  for (int y = 0; y < layout.height(); ++y)
    for (int x = 0; x < layout.width(); ++x) {
      std::int16_t m = canvas.owner(x, y);
      if (m != GridCanvas::kBlank && m != moving)
        input.occupied[static_cast<std::size_t>(y) * layout.width() + x] = 1;
    }

  auto centroids = module_centroids(layout);
  centroids[moving] = std::nullopt;  // mover removed for the computation
  for (const auto &net : nets) {
    if (!std::binary_search(net.modules.begin(), net.modules.end(), moving))
      continue;
    Net others = net;
    others.modules.erase(
        std::remove(others.modules.begin(), others.modules.end(), moving),
        others.modules.end());
    auto box = net_box(others, centroids);
    if (!box) continue;
    input.net_spans.push_back({box->min_x, box->max_x, box->min_y, box->max_y});
  }
  return input;
}

CellBitmap position_mask(const MaskInput &input) {
  int W = input.canvas_w, H = input.canvas_h;
  CellBitmap legal(W, H);
  if (input.module_w > W || input.module_h > H) return legal;

  // 2D prefix sums of the occupancy grid.
  std::vector<std::int32_t> prefix(static_cast<std::size_t>(W + 1) * (H + 1),
                                   0);
  auto at = [&](int x, int y) -> std::int32_t & {
    return prefix[static_cast<std::size_t>(y) * (W + 1) + x];
  };
  for (int y = 1; y <= H; ++y)
    for (int x = 1; x <= W; ++x)
      at(x, y) = input.occupied[static_cast<std::size_t>(y - 1) * W + (x - 1)] +
                 at(x - 1, y) + at(x, y - 1) - at(x - 1, y - 1);
  for (int y = 0; y + input.module_h <= H; ++y)
    for (int x = 0; x + input.module_w <= W; ++x) {
      std::int32_t occ = at(x + input.module_w, y + input.module_h) -
                         at(x, y + input.module_h) -
                         at(x + input.module_w, y) + at(x, y);
      if (occ == 0) legal.set(x, y);
    }
  return legal;
}

CellBitmap position_mask(const Layout &layout, int module_w, int module_h,
                         int moving) {
  return position_mask(make_mask_input(layout, {}, moving, module_w, module_h));
}

MaskGrid wiremask(const MaskInput &input) {
  int W = input.canvas_w, H = input.canvas_h;
  MaskGrid mask(W, H);
  CellBitmap legal = position_mask(input);

  // The increment separates into x and y penalties of the module centroid.
  double half_w = input.module_w / 2.0;
  double half_h = input.module_h / 2.0;
  std::vector<double> fx(std::max(0, W - input.module_w + 1), 0.0);
  std::vector<double> fy(std::max(0, H - input.module_h + 1), 0.0);
  for (const auto &span : input.net_spans) {
    for (std::size_t ax = 0; ax < fx.size(); ++ax) {
      double cx = ax + half_w;
      fx[ax] += std::max(0.0, span.min_x - cx) + std::max(0.0, cx - span.max_x);
    }
    for (std::size_t ay = 0; ay < fy.size(); ++ay) {
      double cy = ay + half_h;
      fy[ay] += std::max(0.0, span.min_y - cy) + std::max(0.0, cy - span.max_y);
    }
  }
  for (std::size_t ay = 0; ay < fy.size(); ++ay)
    for (std::size_t ax = 0; ax < fx.size(); ++ax)
      if (legal.test(static_cast<int>(ax), static_cast<int>(ay)))
        mask.set_delta(static_cast<int>(ax), static_cast<int>(ay),
                       fx[ax] + fy[ay]);
  return mask;
}

MaskGrid wiremask(const Layout &layout, const std::vector<Net> &nets,
                  int moving, int module_w, int module_h) {
  return wiremask(make_mask_input(layout, nets, moving, module_w, module_h));
}

std::optional<CellCoord> pick_anchor(const MaskGrid &mask) {
  std::optional<CellCoord> best_positive, first_zero;
  double best_delta = MaskGrid::kIllegal;
  for (int y = 0; y < mask.height(); ++y)
    for (int x = 0; x < mask.width(); ++x) {
      double d = mask.delta(x, y);
      if (d == MaskGrid::kIllegal) continue;
      if (d > 0.0) {
        if (d < best_delta) {
          best_delta = d;
          best_positive = CellCoord{x, y};
        }
      } else if (!first_zero) {
        first_zero = CellCoord{x, y};
      }
    }
  if (best_positive) return best_positive;
  return first_zero;
}

std::optional<CellCoord> greedy_place(const Layout &layout,
                                      const std::vector<Net> &nets,
                                      int moving, int module_w, int module_h) {
  return pick_anchor(wiremask(layout, nets, moving, module_w, module_h));
}

}  // namespace flora
