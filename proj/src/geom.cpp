#include "flora/geom.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace flora {

double Rect::aspect_ratio() const {
  if (w <= 0 || h <= 0) return 0.0;
  return w >= h ? static_cast<double>(w) / h : static_cast<double>(h) / w;
}

RectilinearRegion::RectilinearRegion(std::vector<CellCoord> cells)
    : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

RectilinearRegion RectilinearRegion::from_rect(const Rect &r) {
  std::vector<CellCoord> cells;
  cells.reserve(static_cast<std::size_t>(r.area()));
  for (int y = r.y; y < r.y2(); ++y)
    for (int x = r.x; x < r.x2(); ++x) cells.push_back({x, y});
  return RectilinearRegion(std::move(cells));
}

bool RectilinearRegion::contains(CellCoord c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

GridCanvas::GridCanvas(int width, int height)
    : width_(width), height_(height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("GridCanvas: dimensions must be >= 1");
  owner_.assign(static_cast<std::size_t>(width) * height, kBlank);
}

void GridCanvas::fill_rect(const Rect &r, std::int16_t m) {
  for (int y = r.y; y < r.y2(); ++y)
    for (int x = r.x; x < r.x2(); ++x) set_owner(x, y, m);
}

long long GridCanvas::blank_cells() const {
  return std::count(owner_.begin(), owner_.end(), kBlank);
}

RectilinearRegion GridCanvas::region_of(std::int16_t m) const {
  std::vector<CellCoord> cells;
  for (int y = 0; y < height_; ++y)
    for (int x = 0; x < width_; ++x)
      if (owner(x, y) == m) cells.push_back({x, y});
  return RectilinearRegion(std::move(cells));
}

Rect bounding_rect(const RectilinearRegion &region) {
  if (region.empty())
    throw std::invalid_argument("bounding_rect: empty region");
  const auto &cells = region.cells();
  int minx = cells.front().x, maxx = cells.front().x;
  for (const auto &c : cells) {
    minx = std::min(minx, c.x);
    maxx = std::max(maxx, c.x);
  }
  // Cells are (y,x)-sorted, so y extremes are at the ends.
  int miny = cells.front().y;
  int maxy = cells.back().y;
  return Rect{minx, miny, maxx - minx + 1, maxy - miny + 1};
}

namespace {

struct CellHash {
  std::size_t operator()(const CellCoord &c) const {
    return std::hash<long long>()((static_cast<long long>(c.y) << 32) |
                                  static_cast<unsigned>(c.x));
  }
};

}  // namespace

long long common_edge_length(const RectilinearRegion &a,
                             const RectilinearRegion &b) {
  std::unordered_set<CellCoord, CellHash> bset(b.cells().begin(),
                                               b.cells().end());
  long long edges = 0;
  for (const auto &c : a.cells()) {
    if (bset.count(c))
      throw std::invalid_argument("common_edge_length: regions overlap");
    edges += bset.count({c.x + 1, c.y});
    edges += bset.count({c.x - 1, c.y});
    edges += bset.count({c.x, c.y + 1});
    edges += bset.count({c.x, c.y - 1});
  }
  return edges;
}

int corner_count(const RectilinearRegion &region) {
  if (region.empty()) throw std::invalid_argument("corner_count: empty region");
  Rect bb = bounding_rect(region);
  CellBitmap map(bb.w, bb.h);
  for (const auto &c : region.cells()) map.set(c.x - bb.x, c.y - bb.y);
  return map.corner_count();
}

bool is_rectangular(const RectilinearRegion &region) {
  if (region.empty()) throw std::invalid_argument("is_rectangular: empty region");
  return bounding_rect(region).area() ==
         static_cast<long long>(region.size());
}

std::pair<double, double> centroid(const RectilinearRegion &region) {
  if (region.empty()) throw std::invalid_argument("centroid: empty region");
  double sx = 0.0, sy = 0.0;
  for (const auto &c : region.cells()) {
    sx += c.x + 0.5;
    sy += c.y + 0.5;
  }
  double n = static_cast<double>(region.size());
  return {sx / n, sy / n};
}

bool is_connected(const RectilinearRegion &region) {
  if (region.empty()) return false;
  Rect bb = bounding_rect(region);
  CellBitmap map(bb.w, bb.h);
  for (const auto &c : region.cells()) map.set(c.x - bb.x, c.y - bb.y);

  std::vector<CellCoord> stack = {
      {region.cells().front().x - bb.x, region.cells().front().y - bb.y}};
  CellBitmap seen(bb.w, bb.h);
  seen.set(stack[0].x, stack[0].y);
  std::size_t reached = 0;
  while (!stack.empty()) {
    CellCoord c = stack.back();
    stack.pop_back();
    ++reached;
    const int dx[4] = {1, -1, 0, 0};
    const int dy[4] = {0, 0, 1, -1};
    for (int d = 0; d < 4; ++d) {
      int nx = c.x + dx[d], ny = c.y + dy[d];
      if (nx < 0 || nx >= bb.w || ny < 0 || ny >= bb.h) continue;
      if (!map.test(nx, ny) || seen.test(nx, ny)) continue;
      seen.set(nx, ny);
      stack.push_back({nx, ny});
    }
  }
  return reached == region.size();
}

CellBitmap::CellBitmap(int width, int height)
    : width_(width),
      height_(height),
      words_per_row_((width + 63) / 64),
      words_(static_cast<std::size_t>(words_per_row_) * height, 0) {}

void CellBitmap::set_rect(const Rect &r) {
  for (int y = r.y; y < r.y2(); ++y)
    for (int x = r.x; x < r.x2(); ++x) set(x, y);
}

void CellBitmap::clear_rect(const Rect &r) {
  for (int y = r.y; y < r.y2(); ++y)
    for (int x = r.x; x < r.x2(); ++x) clear(x, y);
}

bool CellBitmap::rect_all_set(const Rect &r) const {
  if (r.x < 0 || r.y < 0 || r.x2() > width_ || r.y2() > height_) return false;
  for (int y = r.y; y < r.y2(); ++y) {
    int x = r.x;
    while (x < r.x2()) {
      int word = x >> 6;
      int lo = x & 63;
      int hi = std::min(64, lo + (r.x2() - x));
      std::uint64_t mask = (hi == 64 ? ~0ull : (1ull << hi) - 1) & ~((1ull << lo) - 1);
      if ((words_[row_off(y) + word] & mask) != mask) return false;
      x += hi - lo;
    }
  }
  return true;
}

long long CellBitmap::count() const {
  long long n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

// Corners via the vertex pattern of the four incident cells: an odd number
// of set cells is one corner; two set cells meeting diagonally are two.
int CellBitmap::vertex_pattern_corners(int vx, int vy,
                                       const Rect *cleared) const {
  auto in = [&](int x, int y) {
    if (x < 0 || x >= width_ || y < 0 || y >= height_) return false;
    if (cleared && cleared->contains({x, y})) return false;
    return test(x, y);
  };
  bool a = in(vx - 1, vy - 1), b = in(vx, vy - 1), c = in(vx - 1, vy),
       d = in(vx, vy);
  int n = int(a) + int(b) + int(c) + int(d);
  if (n == 1 || n == 3) return 1;
  if (n == 2 && a == d) return 2;  // diagonal pair (a,d) or (b,c)
  return 0;
}

int CellBitmap::corner_count() const {
  int corners = 0;
  for (int vy = 0; vy <= height_; ++vy)
    for (int vx = 0; vx <= width_; ++vx)
      corners += vertex_pattern_corners(vx, vy, nullptr);
  return corners;
}

int CellBitmap::corner_delta_if_cleared(const Rect &r) const {
  int delta = 0;
  for (int vx = r.x; vx <= r.x2(); ++vx) {
    delta += vertex_pattern_corners(vx, r.y, &r) -
             vertex_pattern_corners(vx, r.y, nullptr);
    delta += vertex_pattern_corners(vx, r.y2(), &r) -
             vertex_pattern_corners(vx, r.y2(), nullptr);
  }
  for (int vy = r.y + 1; vy < r.y2(); ++vy) {
    delta += vertex_pattern_corners(r.x, vy, &r) -
             vertex_pattern_corners(r.x, vy, nullptr);
    delta += vertex_pattern_corners(r.x2(), vy, &r) -
             vertex_pattern_corners(r.x2(), vy, nullptr);
  }
  return delta;
}

}  // namespace flora
