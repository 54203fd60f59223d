#include "flora/layout.hpp"

#include <algorithm>
#include <stdexcept>

namespace flora {

std::string stage_name(Stage s) {
  switch (s) {
    case Stage::kInit: return "stage0";
    case Stage::kStage1: return "stage1";
    case Stage::kStage2: return "stage2";
    case Stage::kStage3: return "stage3";
    case Stage::kExternal: return "external";
  }
  return "unknown";
}

std::optional<Stage> stage_from_name(const std::string &s) {
  if (s == "stage0" || s == "init") return Stage::kInit;
  if (s == "stage1") return Stage::kStage1;
  if (s == "stage2") return Stage::kStage2;
  if (s == "stage3") return Stage::kStage3;
  if (s == "external") return Stage::kExternal;
  return std::nullopt;
}

Layout::Layout(int width, int height) : canvas_(width, height) {
  blank_cells_ = static_cast<long long>(width) * height;
}

Layout Layout::from_netlist(const Netlist &netlist, int width, int height) {
  Layout layout(width, height);
  layout.modules_.reserve(netlist.modules.size());
  for (const auto &m : netlist.modules) {
    ModuleState state;
    state.name = m.name;
    state.budget_cells = m.budget_cells;
    for (const auto &c : m.comps) state.comps.push_back({c, std::nullopt});
    layout.modules_.push_back(std::move(state));
  }
  layout.cell_count_.assign(layout.modules_.size(), 0);
  layout.bbox_.assign(layout.modules_.size(), Rect{});
  return layout;
}

RectilinearRegion Layout::region_of(int m) const {
  if (cell_count_[m] == 0) return RectilinearRegion();
  std::vector<CellCoord> cells;
  cells.reserve(static_cast<std::size_t>(cell_count_[m]));
  Rect bb = bbox_[m];
  for (int y = bb.y; y < bb.y2(); ++y)
    for (int x = bb.x; x < bb.x2(); ++x)
      if (canvas_.owner(x, y) == m) cells.push_back({x, y});
  return RectilinearRegion(std::move(cells));
}

void Layout::grow_bbox(int m, const Rect &r) {
  if (cell_count_[m] == 0) {
    bbox_[m] = r;
    return;
  }
  Rect &b = bbox_[m];
  int x2 = std::max(b.x2(), r.x2());
  int y2 = std::max(b.y2(), r.y2());
  b.x = std::min(b.x, r.x);
  b.y = std::min(b.y, r.y);
  b.w = x2 - b.x;
  b.h = y2 - b.y;
}

void Layout::paint_rect(int m, const Rect &r) {
  if (r.x < 0 || r.y < 0 || r.x2() > width() || r.y2() > height())
    throw std::invalid_argument("paint_rect: rect outside canvas");
  for (int y = r.y; y < r.y2(); ++y)
    for (int x = r.x; x < r.x2(); ++x) {
      if (!canvas_.blank(x, y))
        throw std::invalid_argument("paint_rect: cell already owned");
      canvas_.set_owner(x, y, static_cast<std::int16_t>(m));
    }
  grow_bbox(m, r);
  cell_count_[m] += r.area();
  blank_cells_ -= r.area();
}

void Layout::unpaint_rect(int m, const Rect &r) {
  for (int y = r.y; y < r.y2(); ++y)
    for (int x = r.x; x < r.x2(); ++x) {
      if (canvas_.owner(x, y) != m)
        throw std::invalid_argument("unpaint_rect: cell not owned by module");
      canvas_.set_owner(x, y, GridCanvas::kBlank);
    }
  cell_count_[m] -= r.area();
  blank_cells_ += r.area();
  if (cell_count_[m] > 0) {
    // bbox may have shrunk; recompute from the grid.
    int minx = width(), miny = height(), maxx = -1, maxy = -1;
    Rect scan = bbox_[m];
    for (int y = scan.y; y < scan.y2(); ++y)
      for (int x = scan.x; x < scan.x2(); ++x)
        if (canvas_.owner(x, y) == m) {
          minx = std::min(minx, x);
          miny = std::min(miny, y);
          maxx = std::max(maxx, x);
          maxy = std::max(maxy, y);
        }
    bbox_[m] = Rect{minx, miny, maxx - minx + 1, maxy - miny + 1};
  } else {
    bbox_[m] = Rect{};
  }
}

void Layout::transfer_rect(int from, int to, const Rect &r) {
  unpaint_rect(from, r);
  paint_rect(to, r);
}

void Layout::rebuild_caches() {
  cell_count_.assign(modules_.size(), 0);
  bbox_.assign(modules_.size(), Rect{});
  blank_cells_ = 0;
  for (int y = 0; y < height(); ++y)
    for (int x = 0; x < width(); ++x) {
      std::int16_t m = canvas_.owner(x, y);
      if (m == GridCanvas::kBlank) {
        ++blank_cells_;
        continue;
      }
      grow_bbox(m, Rect{x, y, 1, 1});
      ++cell_count_[m];
    }
}

std::vector<std::string> Layout::validate() const {
  std::vector<std::string> issues;
  int n = module_count();
  for (int y = 0; y < height(); ++y)
    for (int x = 0; x < width(); ++x) {
      std::int16_t m = canvas_.owner(x, y);
      if (m != GridCanvas::kBlank && (m < 0 || m >= n)) {
        issues.push_back("cell (" + std::to_string(x) + "," +
                         std::to_string(y) + ") has invalid owner " +
                         std::to_string(m));
        return issues;
      }
    }
  for (int m = 0; m < n; ++m) {
    if (cell_count_[m] == 0) {
      issues.push_back("module " + modules_[m].name + " owns no cells");
      continue;
    }
    RectilinearRegion region = region_of(m);
    if (!is_connected(region))
      issues.push_back("module " + modules_[m].name + " is not 4-connected");
    CellBitmap placed_map(width(), height());
    for (const auto &pc : modules_[m].comps) {
      if (!pc.placed) continue;
      const Rect &r = *pc.placed;
      bool inside = r.x >= 0 && r.y >= 0 && r.x2() <= width() &&
                    r.y2() <= height();
      for (int y = r.y; inside && y < r.y2(); ++y)
        for (int x = r.x; inside && x < r.x2(); ++x)
          if (canvas_.owner(x, y) != m) inside = false;
      if (!inside) {
        issues.push_back("component " + pc.spec.name + " of module " +
                         modules_[m].name + " extends outside its region");
        continue;
      }
      bool overlap = false;
      for (int y = r.y; y < r.y2(); ++y)
        for (int x = r.x; x < r.x2(); ++x) {
          if (placed_map.test(x, y)) overlap = true;
          placed_map.set(x, y);
        }
      if (overlap)
        issues.push_back("component " + pc.spec.name + " of module " +
                         modules_[m].name + " overlaps a sibling");
    }
  }
  return issues;
}

}  // namespace flora
