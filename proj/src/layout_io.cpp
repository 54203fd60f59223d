#include "flora/layout_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace flora {

namespace {

struct Run {
  int y, x, len;
};

std::vector<Run> region_runs(const Layout &layout, int m) {
  std::vector<Run> runs;
  if (layout.cell_count(m) == 0) return runs;
  Rect bb = layout.bbox(m);
  const auto &canvas = layout.canvas();
  for (int y = bb.y; y < bb.y2(); ++y) {
    int x = bb.x;
    while (x < bb.x2()) {
      if (canvas.owner(x, y) != m) {
        ++x;
        continue;
      }
      int start = x;
      while (x < bb.x2() && canvas.owner(x, y) == m) ++x;
      runs.push_back({y, start, x - start});
    }
  }
  return runs;
}

}  // namespace

void save_layout(const Layout &layout, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write layout file: " + path);
  out << "flora-layout 1\n";
  out << "canvas " << layout.width() << " " << layout.height() << "\n";
  out << "stage " << stage_name(layout.stage()) << "\n";
  out << "modules " << layout.module_count() << "\n";
  for (int m = 0; m < layout.module_count(); ++m) {
    const ModuleState &mod = layout.module(m);
    out << "module " << mod.name << " budget " << mod.budget_cells << "\n";
    out << "components " << mod.comps.size() << "\n";
    for (const auto &pc : mod.comps) {
      out << "component " << pc.spec.name << " "
          << (pc.spec.is_cluster ? "cluster" : "macro") << " " << pc.spec.w
          << " " << pc.spec.h;
      if (pc.placed)
        out << " placed " << pc.placed->x << " " << pc.placed->y << " "
            << pc.placed->w << " " << pc.placed->h;
      else
        out << " unplaced";
      out << "\n";
    }
    auto runs = region_runs(layout, m);
    out << "runs " << runs.size() << "\n";
    for (const auto &r : runs)
      out << "run " << r.y << " " << r.x << " " << r.len << "\n";
    out << "endmodule\n";
  }
  out << "end\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

struct LineReader {
  std::ifstream in;
  std::string path;
  int lineno = 0;

  explicit LineReader(const std::string &p) : in(p), path(p) {
    if (!in) throw std::runtime_error("cannot open layout file: " + p);
  }
  std::vector<std::string> next() {
    std::string raw;
    while (std::getline(in, raw)) {
      ++lineno;
      std::istringstream ss(raw);
      std::vector<std::string> toks;
      std::string t;
      while (ss >> t) toks.push_back(t);
      if (!toks.empty()) return toks;
    }
    throw std::runtime_error(path + ": unexpected end of file");
  }
  [[noreturn]] void fail(const std::string &msg) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + msg);
  }
};

int to_int(LineReader &r, const std::string &s) {
  try {
    return std::stoi(s);
  } catch (const std::exception &) {
    r.fail("expected integer, got '" + s + "'");
  }
}

}  // namespace

Layout load_layout(const std::string &path) {
  LineReader r(path);
  auto toks = r.next();
  if (toks.size() != 2 || toks[0] != "flora-layout" || toks[1] != "1")
    r.fail("expected 'flora-layout 1' header");
  toks = r.next();
  if (toks.size() != 3 || toks[0] != "canvas") r.fail("expected canvas W H");
  int w = to_int(r, toks[1]), h = to_int(r, toks[2]);
  Layout layout(w, h);
  toks = r.next();
  if (toks.size() != 2 || toks[0] != "stage") r.fail("expected stage line");
  auto stage = stage_from_name(toks[1]);
  if (!stage) r.fail("unknown stage tag: " + toks[1]);
  layout.set_stage(*stage);
  toks = r.next();
  if (toks.size() != 2 || toks[0] != "modules") r.fail("expected modules N");
  int n = to_int(r, toks[1]);

  std::vector<ModuleState> modules;
  struct PendingRun {
    int m, y, x, len;
  };
  std::vector<PendingRun> runs;
  for (int m = 0; m < n; ++m) {
    toks = r.next();
    if (toks.size() != 4 || toks[0] != "module" || toks[2] != "budget")
      r.fail("expected module <name> budget <cells>");
    ModuleState mod;
    mod.name = toks[1];
    mod.budget_cells = to_int(r, toks[3]);
    toks = r.next();
    if (toks.size() != 2 || toks[0] != "components")
      r.fail("expected components K");
    int k = to_int(r, toks[1]);
    for (int c = 0; c < k; ++c) {
      toks = r.next();
      if (toks.size() < 6 || toks[0] != "component")
        r.fail("expected component line");
      PlacedComponent pc;
      pc.spec.name = toks[1];
      if (toks[2] == "cluster")
        pc.spec.is_cluster = true;
      else if (toks[2] != "macro")
        r.fail("component kind must be macro or cluster");
      pc.spec.w = to_int(r, toks[3]);
      pc.spec.h = to_int(r, toks[4]);
      if (toks[5] == "placed") {
        if (toks.size() != 10) r.fail("placed expects x y w h");
        pc.placed = Rect{to_int(r, toks[6]), to_int(r, toks[7]),
                         to_int(r, toks[8]), to_int(r, toks[9])};
      } else if (toks[5] != "unplaced") {
        r.fail("expected placed/unplaced");
      }
      mod.comps.push_back(std::move(pc));
    }
    toks = r.next();
    if (toks.size() != 2 || toks[0] != "runs") r.fail("expected runs R");
    int nruns = to_int(r, toks[1]);
    for (int i = 0; i < nruns; ++i) {
      toks = r.next();
      if (toks.size() != 4 || toks[0] != "run") r.fail("expected run y x len");
      runs.push_back({m, to_int(r, toks[1]), to_int(r, toks[2]),
                      to_int(r, toks[3])});
    }
    toks = r.next();
    if (toks.size() != 1 || toks[0] != "endmodule") r.fail("expected endmodule");
    modules.push_back(std::move(mod));
  }
  toks = r.next();
  if (toks.size() != 1 || toks[0] != "end") r.fail("expected end");

  // Paint runs, collecting module pairs that claim the same cell.
  LayoutIO::set_modules(layout, std::move(modules));
  GridCanvas &canvas = LayoutIO::canvas(layout);
  std::set<std::pair<int, int>> overlaps;
  for (const auto &run : runs) {
    if (run.y < 0 || run.y >= h || run.x < 0 || run.len < 1 ||
        run.x + run.len > w)
      throw std::runtime_error(path + ": run outside canvas in module " +
                               layout.module(run.m).name);
    for (int x = run.x; x < run.x + run.len; ++x) {
      std::int16_t prev = canvas.owner(x, run.y);
      if (prev != GridCanvas::kBlank && prev != run.m)
        overlaps.insert({std::min<int>(prev, run.m), std::max<int>(prev, run.m)});
      canvas.set_owner(x, run.y, static_cast<std::int16_t>(run.m));
    }
  }
  if (!overlaps.empty()) {
    std::string msg = path + ": overlapping module regions:";
    for (auto [a, b] : overlaps)
      msg += " (" + layout.module(a).name + "," + layout.module(b).name + ")";
    throw std::runtime_error(msg);
  }
  layout.rebuild_caches();
  return layout;
}

void emit_svg(const Layout &layout, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write svg: " + path);
  int scale = std::max(1, 896 / std::max(layout.width(), layout.height()));
  int W = layout.width() * scale, H = layout.height() * scale;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H
      << "\">\n";
  out << "<rect width=\"" << W << "\" height=\"" << H
      << "\" fill=\"#ffffff\"/>\n";
  // y flipped so cell (0,0) renders bottom-left.
  auto rect_attr = [&](const Rect &r) {
    std::ostringstream ss;
    ss << "x=\"" << r.x * scale << "\" y=\"" << (layout.height() - r.y2()) * scale
       << "\" width=\"" << r.w * scale << "\" height=\"" << r.h * scale << "\"";
    return ss.str();
  };
  for (int m = 0; m < layout.module_count(); ++m) {
    out << "<g>\n";
    for (const auto &run : region_runs(layout, m))
      out << "  <rect " << rect_attr(Rect{run.x, run.y, run.len, 1})
          << " fill=\"#fdf6c9\" stroke=\"none\"/>\n";
    out << "</g>\n";
  }
  // Module boundaries: draw unit edges where ownership changes.
  out << "<g stroke=\"#5d5d5d\" stroke-width=\"1\">\n";
  const auto &canvas = layout.canvas();
  for (int y = 0; y <= layout.height(); ++y)
    for (int x = 0; x < layout.width(); ++x) {
      std::int16_t a = y > 0 ? canvas.owner(x, y - 1) : GridCanvas::kBlank;
      std::int16_t b = y < layout.height() ? canvas.owner(x, y)
                                           : GridCanvas::kBlank;
      if (a != b || y == 0 || y == layout.height()) {
        int sy = (layout.height() - y) * scale;
        out << "  <line x1=\"" << x * scale << "\" y1=\"" << sy << "\" x2=\""
            << (x + 1) * scale << "\" y2=\"" << sy << "\"/>\n";
      }
    }
  for (int x = 0; x <= layout.width(); ++x)
    for (int y = 0; y < layout.height(); ++y) {
      std::int16_t a = x > 0 ? canvas.owner(x - 1, y) : GridCanvas::kBlank;
      std::int16_t b = x < layout.width() ? canvas.owner(x, y)
                                          : GridCanvas::kBlank;
      if (a != b || x == 0 || x == layout.width()) {
        int sx = x * scale;
        out << "  <line x1=\"" << sx << "\" y1=\""
            << (layout.height() - y) * scale << "\" x2=\"" << sx << "\" y2=\""
            << (layout.height() - y - 1) * scale << "\"/>\n";
      }
    }
  out << "</g>\n";
  for (int m = 0; m < layout.module_count(); ++m)
    for (const auto &pc : layout.module(m).comps) {
      if (!pc.placed) continue;
      const char *fill = pc.spec.is_cluster ? "#d63031" : "#8e44ad";
      out << "<rect " << rect_attr(*pc.placed) << " fill=\"" << fill
          << "\" fill-opacity=\"0.85\" stroke=\"#2d2d2d\" stroke-width=\"0.5\">"
          << "<title>" << pc.spec.name << "</title></rect>\n";
    }
  out << "</svg>\n";
}

const char *const kReportHeader =
    "design,seed,stage,hpwl,ftpin,ftmod,ws_pct,pd_pct,rt_s,rt_cum_s";

std::string format_report_row(const ReportRow &row) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s,%llu,%s,%.1f,%lld,%.1f,%.4f,%.4f,%.3f,%.3f",
                row.design.c_str(),
                static_cast<unsigned long long>(row.seed), row.stage.c_str(),
                row.metrics.hpwl, static_cast<long long>(row.metrics.ftpin),
                row.metrics.ftmod, row.metrics.ws_pct, row.metrics.pd_pct,
                row.metrics.rt_s, row.rt_cum_s);
  return buf;
}

void emit_report(const std::vector<ReportRow> &rows, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  out << kReportHeader << "\n";
  for (const auto &row : rows) out << format_report_row(row) << "\n";
}

std::vector<ReportRow> read_report(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open report: " + path);
  std::string line;
  if (!std::getline(in, line) || line != kReportHeader)
    throw std::runtime_error(path + ": unexpected report header");
  std::vector<ReportRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (fields.size() != 10)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 10 fields");
    ReportRow row;
    try {
      row.design = fields[0];
      row.seed = std::stoull(fields[1]);
      row.stage = fields[2];
      row.metrics.hpwl = std::stod(fields[3]);
      row.metrics.ftpin = std::stoll(fields[4]);
      row.metrics.ftmod = std::stod(fields[5]);
      row.metrics.ws_pct = std::stod(fields[6]);
      row.metrics.pd_pct = std::stod(fields[7]);
      row.metrics.rt_s = std::stod(fields[8]);
      row.rt_cum_s = std::stod(fields[9]);
    } catch (const std::exception &) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": bad field");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace flora
