#include "flora/bench_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "flora/rng.hpp"

namespace flora {

namespace {

std::string strip(const std::string &s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

bool is_comment(const std::string &line) {
  return line.empty() || line[0] == '#' || line.rfind("UCSC", 0) == 0 ||
         line.rfind("UCLA", 0) == 0;
}

// "Key : value" header line; returns false if the line is not one.
bool parse_header(const std::string &line, std::string &key, long long &value) {
  std::size_t colon = line.find(':');
  if (colon == std::string::npos) return false;
  key = strip(line.substr(0, colon));
  if (key.find(' ') != std::string::npos) return false;
  std::string rest = strip(line.substr(colon + 1));
  if (rest.empty()) return false;
  char *end = nullptr;
  value = std::strtoll(rest.c_str(), &end, 10);
  return end && *end == '\0';
}

std::vector<std::string> tokenize(const std::string &line) {
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace

BlocksFile parse_blocks(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open blocks file: " + path);
  BlocksFile out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (is_comment(line)) continue;
    std::string key;
    long long value;
    if (parse_header(line, key, value)) continue;  // counts are advisory

    auto toks = tokenize(line);
    if (toks.size() == 2 && toks[1] == "terminal") {
      out.terminals.push_back(toks[0]);
      continue;
    }
    if (toks.size() >= 2 && toks[1] == "softrectangular") {
      if (toks.size() != 5)
        throw ParseError(path, lineno, "softrectangular expects area/minAR/maxAR");
      BlockDecl b;
      b.name = toks[0];
      b.soft = true;
      try {
        b.area = std::stod(toks[2]);
        b.min_aspect = std::stod(toks[3]);
        b.max_aspect = std::stod(toks[4]);
      } catch (const std::exception &) {
        throw ParseError(path, lineno, "bad numeric field");
      }
      if (b.area <= 0) throw ParseError(path, lineno, "non-positive area");
      out.blocks.push_back(b);
      continue;
    }
    if (toks.size() >= 2 && toks[1] == "hardrectilinear") {
      // name hardrectilinear 4 (x, y) (x, y) (x, y) (x, y)
      std::string rest = line.substr(line.find("hardrectilinear") + 15);
      std::size_t vertex_count_end = rest.find('(');
      if (vertex_count_end == std::string::npos)
        throw ParseError(path, lineno, "hardrectilinear expects vertex list");
      int nv = 0;
      try {
        nv = std::stoi(strip(rest.substr(0, vertex_count_end)));
      } catch (const std::exception &) {
        throw ParseError(path, lineno, "bad vertex count");
      }
      std::vector<std::pair<double, double>> verts;
      std::size_t pos = vertex_count_end;
      while ((pos = rest.find('(', pos)) != std::string::npos) {
        std::size_t close = rest.find(')', pos);
        if (close == std::string::npos)
          throw ParseError(path, lineno, "unterminated vertex");
        std::string body = rest.substr(pos + 1, close - pos - 1);
        std::size_t comma = body.find(',');
        if (comma == std::string::npos)
          throw ParseError(path, lineno, "vertex expects x,y");
        try {
          verts.emplace_back(std::stod(strip(body.substr(0, comma))),
                             std::stod(strip(body.substr(comma + 1))));
        } catch (const std::exception &) {
          throw ParseError(path, lineno, "bad vertex coordinate");
        }
        pos = close;
      }
      if (static_cast<int>(verts.size()) != nv)
        throw ParseError(path, lineno, "vertex count mismatch");
      if (verts.empty()) throw ParseError(path, lineno, "empty vertex list");
      double minx = verts[0].first, maxx = verts[0].first;
      double miny = verts[0].second, maxy = verts[0].second;
      for (auto &[x, y] : verts) {
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
      }
      BlockDecl b;
      b.name = toks[0];
      b.soft = false;
      b.w = maxx - minx;
      b.h = maxy - miny;
      b.area = b.w * b.h;
      if (b.area <= 0) throw ParseError(path, lineno, "degenerate hard block");
      out.blocks.push_back(b);
      continue;
    }
    throw ParseError(path, lineno, "unrecognized line: " + line);
  }
  return out;
}

NetsFile parse_nets(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open nets file: " + path);
  NetsFile out;
  std::string raw;
  int lineno = 0;
  int pending = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (is_comment(line)) continue;
    std::string key;
    long long value;
    if (parse_header(line, key, value)) {
      if (key == "NumNets") out.declared_net_count = static_cast<int>(value);
      if (key == "NetDegree") {
        if (value < 1) throw ParseError(path, lineno, "NetDegree < 1");
        out.nets.emplace_back();
        pending = static_cast<int>(value);
      }
      continue;
    }
    if (pending <= 0)
      throw ParseError(path, lineno, "endpoint outside a NetDegree block");
    auto toks = tokenize(line);
    out.nets.back().push_back(toks[0]);  // trailing pin attributes ignored
    --pending;
  }
  if (pending > 0)
    throw ParseError(path, lineno, "unexpected EOF inside a NetDegree block");
  return out;
}

namespace {

// Largest-remainder apportionment of `total` cells proportional to areas;
// every module gets at least one cell.
std::vector<int> apportion_cells(const std::vector<double> &areas,
                                 long long total) {
  std::size_t n = areas.size();
  double sum = std::accumulate(areas.begin(), areas.end(), 0.0);
  std::vector<int> cells(n, 0);
  std::vector<std::pair<double, std::size_t>> remainders(n);
  long long assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double quota = total * areas[i] / sum;
    cells[i] = static_cast<int>(quota);
    remainders[i] = {quota - cells[i], i};
    assigned += cells[i];
  }
  std::sort(remainders.begin(), remainders.end(), [](auto &a, auto &b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (long long k = 0; k < total - assigned; ++k)
    ++cells[remainders[k % n].second];
  // Every module needs at least one cell; steal from the largest.
  for (std::size_t i = 0; i < n; ++i) {
    while (cells[i] < 1) {
      auto big = std::max_element(cells.begin(), cells.end());
      if (*big <= 1) throw std::runtime_error("grid too small for module count");
      --*big;
      ++cells[i];
    }
  }
  return cells;
}

}  // namespace

Netlist build_netlist(const BlocksFile &blocks, const NetsFile &nets,
                      const InstanceConfig &config) {
  if (config.grid < 1) throw std::invalid_argument("grid must be >= 1");
  if (config.target_util <= 0.0 || config.target_util > 1.0)
    throw std::invalid_argument("target_util must be in (0, 1]");

  Netlist out;
  for (const auto &b : blocks.blocks) {
    ModuleSpec m;
    m.name = b.name;
    m.raw_area = b.area;
    out.modules.push_back(std::move(m));
  }
  out.terminals = blocks.terminals;
  out.rebuild_index();

  if (!out.modules.empty()) {
    std::vector<double> areas;
    areas.reserve(out.modules.size());
    for (const auto &m : out.modules) areas.push_back(m.raw_area);
    long long total = std::llround(static_cast<double>(config.grid) *
                                   config.grid * config.target_util);
    auto cells = apportion_cells(areas, total);
    for (std::size_t i = 0; i < cells.size(); ++i)
      out.modules[i].budget_cells = cells[i];
  }

  std::unordered_map<std::string, int> terminal_index;
  for (std::size_t i = 0; i < out.terminals.size(); ++i)
    terminal_index[out.terminals[i]] = static_cast<int>(i);

  for (const auto &endpoints : nets.nets) {
    Net net;
    std::unordered_set<int> seen_modules, seen_terminals;
    for (const auto &name : endpoints) {
      int mid = out.module_id(name);
      if (mid >= 0) {
        if (seen_modules.insert(mid).second) net.modules.push_back(mid);
        continue;
      }
      auto it = terminal_index.find(name);
      if (it == terminal_index.end())
        throw std::runtime_error("net references undeclared block: " + name);
      if (seen_terminals.insert(it->second).second)
        net.terminals.push_back(it->second);
    }
    std::sort(net.modules.begin(), net.modules.end());
    std::sort(net.terminals.begin(), net.terminals.end());
    out.nets.push_back(std::move(net));
  }
  return out;
}

namespace {

// Snap a target area to integer dims near aspect ratio `ar`, keeping
// |w*h - target| <= 1 (w' = 1 always realizes the area exactly, so the
// search terminates).
std::pair<int, int> snap_dims(long long target, double ar, bool swap_wh) {
  double wf = std::sqrt(static_cast<double>(target) * ar);
  int base = std::max(1, static_cast<int>(std::llround(wf)));
  std::pair<int, int> best{-1, -1};
  long long best_err = -1;
  for (int radius = 0; radius < base + 2; ++radius) {
    for (int w : {base - radius, base + radius}) {
      if (w < 1 || static_cast<long long>(w) > target) continue;
      for (long long h :
           {target / w, target / w + 1}) {
        if (h < 1) continue;
        long long err = std::llabs(static_cast<long long>(w) * h - target);
        if (best_err < 0 || err < best_err) {
          best = {w, static_cast<int>(h)};
          best_err = err;
        }
      }
    }
    if (best_err == 0) break;
    if (best_err >= 0 && best_err <= 1 && radius >= 2) break;
  }
  if (swap_wh) std::swap(best.first, best.second);
  return best;
}

}  // namespace

void synthesize_components(Netlist &netlist, std::uint64_t seed,
                           const SynthesisConfig &config) {
  if (config.fill_ratio <= 0.0 || config.fill_ratio > 1.0)
    throw std::invalid_argument("fill_ratio must be in (0, 1]");
  if (config.min_components < 1 || config.max_components < config.min_components)
    throw std::invalid_argument("bad component count range");

  for (std::size_t mi = 0; mi < netlist.modules.size(); ++mi) {
    ModuleSpec &mod = netlist.modules[mi];
    Rng rng(derive_seed(seed, "synth/" + mod.name));
    long long fill = std::llround(config.fill_ratio * mod.budget_cells);
    if (fill < config.min_components)
      throw std::runtime_error("module " + mod.name +
                               " too small to host components");
    int k = static_cast<int>(
        rng.uniform_int(config.min_components, config.max_components));
    k = std::min<int>(k, static_cast<int>(fill));

    // Random proportions, then largest remainder for an exact integer sum.
    std::vector<double> weights(k);
    for (auto &w : weights) w = 0.25 + rng.uniform_real();
    double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
    std::vector<long long> targets(k);
    std::vector<std::pair<double, int>> rem(k);
    long long assigned = 0;
    for (int j = 0; j < k; ++j) {
      double quota = fill * weights[j] / wsum;
      targets[j] = static_cast<long long>(quota);
      rem[j] = {quota - targets[j], j};
      assigned += targets[j];
    }
    std::sort(rem.begin(), rem.end(),
              [](auto &a, auto &b) { return a.first > b.first; });
    for (long long r = 0; r < fill - assigned; ++r) ++targets[rem[r % k].second];
    for (int j = 0; j < k; ++j)
      if (targets[j] < 1) {
        auto big = std::max_element(targets.begin(), targets.end());
        --*big;
        targets[j] = 1;
      }

    mod.comps.clear();
    long long carry = 0;
    for (int j = 0; j < k; ++j) {
      long long goal = std::max<long long>(1, targets[j] + carry);
      double ar = rng.uniform_real(1.0, 3.0);
      bool swap_wh = rng.uniform_int(0, 1) == 1;
      auto [w, h] = snap_dims(goal, ar, swap_wh);
      carry = goal - static_cast<long long>(w) * h;
      ComponentSpec c;
      c.name = mod.name + "_c" + std::to_string(j);
      c.w = w;
      c.h = h;
      mod.comps.push_back(c);
    }
    // Tag the smallest component as the standard-cell cluster.
    auto smallest = std::min_element(
        mod.comps.begin(), mod.comps.end(),
        [](const ComponentSpec &a, const ComponentSpec &b) {
          return a.area() != b.area() ? a.area() < b.area() : a.name < b.name;
        });
    smallest->is_cluster = true;
  }
}

}  // namespace flora
