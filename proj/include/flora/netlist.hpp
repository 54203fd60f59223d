#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace flora {

struct ComponentSpec {
  std::string name;
  int w = 0;
  int h = 0;
  bool is_cluster = false;

  long long area() const { return static_cast<long long>(w) * h; }
  double aspect_ratio() const {
    return w >= h ? static_cast<double>(w) / h : static_cast<double>(h) / w;
  }
};

struct ModuleSpec {
  std::string name;
  double raw_area = 0.0;    // area in benchmark units
  int budget_cells = 0;     // grid cell budget after canvas mapping
  std::vector<ComponentSpec> comps;

  long long comp_area() const {
    long long s = 0;
    for (const auto &c : comps) s += c.area();
    return s;
  }
};

/// Connection among modules (by id) and optional fixed points. Terminals
/// without coordinates are retained for bookkeeping but do not enter any
/// bounding-box computation.
struct Net {
  std::vector<int> modules;    // sorted, unique
  std::vector<int> terminals;  // ids into Netlist::terminals
  struct FixedPoint {
    double x, y;
  };
  std::vector<FixedPoint> fixed_points;
};

struct Netlist {
  std::vector<ModuleSpec> modules;
  std::vector<std::string> terminals;
  std::vector<Net> nets;

  int module_id(const std::string &name) const {
    auto it = module_index_.find(name);
    return it == module_index_.end() ? -1 : it->second;
  }
  void rebuild_index() {
    module_index_.clear();
    for (std::size_t i = 0; i < modules.size(); ++i)
      module_index_[modules[i].name] = static_cast<int>(i);
  }

 private:
  std::unordered_map<std::string, int> module_index_;
};

}  // namespace flora
