#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace flora {

struct CellCoord {
  int x = 0;
  int y = 0;

  friend bool operator==(const CellCoord &a, const CellCoord &b) {
    return a.x == b.x && a.y == b.y;
  }
  // Scan order used throughout: row-major, lowest (y,x) first.
  friend bool operator<(const CellCoord &a, const CellCoord &b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  }
};

struct Rect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  int x2() const { return x + w; }
  int y2() const { return y + h; }
  long long area() const { return static_cast<long long>(w) * h; }
  bool contains(CellCoord c) const {
    return c.x >= x && c.x < x2() && c.y >= y && c.y < y2();
  }
  bool intersects(const Rect &o) const {
    return x < o.x2() && o.x < x2() && y < o.y2() && o.y < y2();
  }
  // Aspect ratio >= 1 regardless of orientation.
  double aspect_ratio() const;

  friend bool operator==(const Rect &a, const Rect &b) {
    return a.x == b.x && a.y == b.y && a.w == b.w && a.h == b.h;
  }
};

/// Connected set of grid cells. Cells are kept sorted in (y,x) order.
class RectilinearRegion {
 public:
  RectilinearRegion() = default;
  explicit RectilinearRegion(std::vector<CellCoord> cells);
  static RectilinearRegion from_rect(const Rect &r);

  const std::vector<CellCoord> &cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }
  bool contains(CellCoord c) const;

 private:
  std::vector<CellCoord> cells_;
};

/// W x H cell grid mapping every cell to a module id or kBlank.
class GridCanvas {
 public:
  static constexpr std::int16_t kBlank = -1;

  GridCanvas(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }
  std::int16_t owner(int x, int y) const { return owner_[idx(x, y)]; }
  void set_owner(int x, int y, std::int16_t m) { owner_[idx(x, y)] = m; }
  bool blank(int x, int y) const { return owner(x, y) == kBlank; }

  void fill_rect(const Rect &r, std::int16_t m);
  long long blank_cells() const;
  RectilinearRegion region_of(std::int16_t m) const;

  const std::vector<std::int16_t> &owners() const { return owner_; }

 private:
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }
  int width_;
  int height_;
  std::vector<std::int16_t> owner_;
};

Rect bounding_rect(const RectilinearRegion &region);

/// Number of unit edges along which a cell of `a` is 4-adjacent to a cell
/// of `b`. The two regions must be disjoint.
long long common_edge_length(const RectilinearRegion &a,
                             const RectilinearRegion &b);

/// Number of outline vertices (convex + concave) of the region. A vertex
/// where two cells of the region meet only diagonally counts twice.
int corner_count(const RectilinearRegion &region);

bool is_rectangular(const RectilinearRegion &region);

/// Mean of cell centers; cell (x,y) has its center at (x+0.5, y+0.5).
std::pair<double, double> centroid(const RectilinearRegion &region);

bool is_connected(const RectilinearRegion &region);

/// Row-aligned bitmap over a local bounding box, used for free-space
/// bookkeeping in placement and mask construction.
class CellBitmap {
 public:
  CellBitmap(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  bool test(int x, int y) const {
    return (words_[row_off(y) + (x >> 6)] >> (x & 63)) & 1u;
  }
  void set(int x, int y) { words_[row_off(y) + (x >> 6)] |= 1ull << (x & 63); }
  void clear(int x, int y) {
    words_[row_off(y) + (x >> 6)] &= ~(1ull << (x & 63));
  }
  void set_rect(const Rect &r);
  void clear_rect(const Rect &r);
  bool rect_all_set(const Rect &r) const;
  long long count() const;

  /// Corner count of the set cells, same convention as corner_count().
  /// Tolerates empty and disconnected sets (sums over outlines).
  int corner_count() const;

  /// Corner-count change if `r` (currently all set) were cleared.
  /// Only vertices on the perimeter of `r` can change.
  int corner_delta_if_cleared(const Rect &r) const;

 private:
  std::size_t row_off(int y) const {
    return static_cast<std::size_t>(y) * words_per_row_;
  }
  int vertex_pattern_corners(int vx, int vy, const Rect *cleared) const;

  int width_;
  int height_;
  int words_per_row_;
  std::vector<std::uint64_t> words_;
};

}  // namespace flora
