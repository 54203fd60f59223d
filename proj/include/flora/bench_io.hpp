#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "flora/netlist.hpp"

namespace flora {

struct ParseError : std::runtime_error {
  ParseError(const std::string &path, int line, const std::string &what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

struct BlockDecl {
  std::string name;
  bool soft = true;
  double area = 0.0;
  double min_aspect = 0.0;  // soft blocks only
  double max_aspect = 0.0;
  double w = 0.0;  // hard blocks only (vertex bbox)
  double h = 0.0;
};

struct BlocksFile {
  std::vector<BlockDecl> blocks;
  std::vector<std::string> terminals;
};

struct NetsFile {
  int declared_net_count = 0;
  // Each net as the raw endpoint names, in file order.
  std::vector<std::vector<std::string>> nets;
};

/// GSRC `.blocks` grammar: header counts, soft blocks
/// (`name softrectangular area minAR maxAR`), hard blocks
/// (`name hardrectilinear 4 (x,y) ...`), and `name terminal` lines.
BlocksFile parse_blocks(const std::string &path);

/// GSRC `.nets` grammar: NetDegree blocks listing endpoint names.
NetsFile parse_nets(const std::string &path);

struct InstanceConfig {
  int grid = 224;
  double target_util = 1.0;  // module cells / canvas cells
};

/// Builds the grid-mapped netlist: cell budgets are apportioned by largest
/// remainder so they sum to round(G^2 * target_util); endpoint names are
/// resolved, duplicates within a net deduplicated.
Netlist build_netlist(const BlocksFile &blocks, const NetsFile &nets,
                      const InstanceConfig &config);

struct SynthesisConfig {
  double fill_ratio = 0.80;
  int min_components = 2;
  int max_components = 6;
};

/// Populates each module with k ~ U{min..max} rectangular components whose
/// areas sum to round(fill_ratio * budget). One component per module is
/// tagged as a standard-cell cluster. Deterministic for a fixed seed.
void synthesize_components(Netlist &netlist, std::uint64_t seed,
                           const SynthesisConfig &config = {});

}  // namespace flora
