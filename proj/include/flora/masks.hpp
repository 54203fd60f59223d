#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "flora/geom.hpp"
#include "flora/layout.hpp"
#include "flora/netlist.hpp"

namespace flora {

/// Per-anchor legality and HPWL increment for placing one module, anchored
/// at its lower-left cell. Illegal anchors carry +infinity.
class MaskGrid {
 public:
  MaskGrid(int width, int height)
      : width_(width),
        height_(height),
        delta_(static_cast<std::size_t>(width) * height, kIllegal) {}

  static constexpr double kIllegal = std::numeric_limits<double>::infinity();

  int width() const { return width_; }
  int height() const { return height_; }
  bool legal(int x, int y) const { return delta_[idx(x, y)] != kIllegal; }
  double delta(int x, int y) const { return delta_[idx(x, y)]; }
  void set_delta(int x, int y, double d) { delta_[idx(x, y)] = d; }
  long long legal_count() const;

 private:
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }
  int width_;
  int height_;
  std::vector<double> delta_;
};

/// Occupancy snapshot used by mask construction: the moving module's own
/// cells count as blank. `others_centroid(net)` must yield the bbox of the
/// remaining endpoints of each net that contains the moving module.
struct MaskInput {
  int canvas_w = 0;
  int canvas_h = 0;
  int module_w = 0;
  int module_h = 0;
  std::vector<std::uint8_t> occupied;  // canvas_w * canvas_h, excludes mover
  // Per net containing the mover: bbox of the other endpoints, if any.
  struct NetSpan {
    double min_x, max_x, min_y, max_y;
  };
  std::vector<NetSpan> net_spans;
};

MaskInput make_mask_input(const Layout &layout, const std::vector<Net> &nets,
                          int moving, int module_w, int module_h);

/// Legal anchors: the module rect fits in-canvas and overlaps no other
/// module's cells.
CellBitmap position_mask(const MaskInput &input);
CellBitmap position_mask(const Layout &layout, int module_w, int module_h,
                         int moving);

/// Exact HPWL increment per legal anchor, via per-net bbox expansion.
MaskGrid wiremask(const MaskInput &input);
MaskGrid wiremask(const Layout &layout, const std::vector<Net> &nets,
                  int moving, int module_w, int module_h);

/// Anchor with the smallest positive HPWL increment among legal cells;
/// zero-increment cells are the fallback when no positive one exists.
/// Ties break toward the smaller delta, then row-major (y, x) order.
std::optional<CellCoord> pick_anchor(const MaskGrid &mask);

std::optional<CellCoord> greedy_place(const Layout &layout,
                                      const std::vector<Net> &nets,
                                      int moving, int module_w, int module_h);

}  // namespace flora
