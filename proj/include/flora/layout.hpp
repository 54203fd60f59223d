#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flora/geom.hpp"
#include "flora/netlist.hpp"

namespace flora {

enum class Stage { kInit, kStage1, kStage2, kStage3, kExternal };

std::string stage_name(Stage s);
std::optional<Stage> stage_from_name(const std::string &s);

struct PlacedComponent {
  ComponentSpec spec;
  std::optional<Rect> placed;  // absolute canvas coords, dims may be rotated
};

struct ModuleState {
  std::string name;
  int budget_cells = 0;
  std::vector<PlacedComponent> comps;

  long long comp_area() const {
    long long s = 0;
    for (const auto &c : comps) s += c.spec.area();
    return s;
  }
};

/// Snapshot of the whole floorplan: cell ownership plus per-module
/// component placement state. The owner grid is authoritative; per-module
/// bounding boxes and cell counts are kept in sync by the mutators.
class Layout {
 public:
  Layout(int width, int height);

  static Layout from_netlist(const Netlist &netlist, int width, int height);

  int width() const { return canvas_.width(); }
  int height() const { return canvas_.height(); }
  Stage stage() const { return stage_; }
  void set_stage(Stage s) { stage_ = s; }

  const GridCanvas &canvas() const { return canvas_; }
  int module_count() const { return static_cast<int>(modules_.size()); }
  const ModuleState &module(int m) const { return modules_[m]; }
  ModuleState &module(int m) { return modules_[m]; }
  const std::vector<ModuleState> &modules() const { return modules_; }

  long long cell_count(int m) const { return cell_count_[m]; }
  /// Bounding box of the module's region; undefined when the module owns
  /// no cells (check cell_count first).
  Rect bbox(int m) const { return bbox_[m]; }
  RectilinearRegion region_of(int m) const;
  long long blank_cells() const { return blank_cells_; }

  /// Assigns the cells of `r` to module `m`. All cells must currently be
  /// blank.
  void paint_rect(int m, const Rect &r);
  /// Returns the cells of `r` (all owned by `m`) to blank.
  void unpaint_rect(int m, const Rect &r);
  /// Moves ownership of the cells of `r` from module `from` to `to`.
  void transfer_rect(int from, int to, const Rect &r);

  /// Rebuilds cached bboxes/counts from the owner grid (used after a load).
  void rebuild_caches();

  /// Structural checks: owners in range, modules non-empty and 4-connected,
  /// placed components inside their module region and pairwise disjoint.
  /// Returns human-readable problem descriptions, empty when valid.
  std::vector<std::string> validate() const;

 private:
  GridCanvas canvas_;
  Stage stage_ = Stage::kInit;
  std::vector<ModuleState> modules_;
  std::vector<long long> cell_count_;
  std::vector<Rect> bbox_;
  long long blank_cells_ = 0;

  void grow_bbox(int m, const Rect &r);

  friend struct LayoutIO;
};

/// Private-access helper for the snapshot loader: installs module metadata
/// and exposes the raw canvas so runs can be painted before cache rebuild.
struct LayoutIO {
  static void set_modules(Layout &layout, std::vector<ModuleState> modules) {
    layout.modules_ = std::move(modules);
    layout.cell_count_.assign(layout.modules_.size(), 0);
    layout.bbox_.assign(layout.modules_.size(), Rect{});
  }
  static GridCanvas &canvas(Layout &layout) { return layout.canvas_; }
};

}  // namespace flora
