#pragma once

#include <string>
#include <vector>

#include "flora/layout.hpp"
#include "flora/metrics_types.hpp"

namespace flora {

/// Text snapshot format, versioned header "flora-layout 1". See
/// docs/layout-format.md for the grammar.
void save_layout(const Layout &layout, const std::string &path);
Layout load_layout(const std::string &path);

/// One SVG per snapshot: module regions in light yellow with outlines,
/// macros in purple, standard-cell clusters in red.
void emit_svg(const Layout &layout, const std::string &path);

struct ReportRow {
  std::string design;
  std::uint64_t seed = 0;
  std::string stage;
  MetricRow metrics;
  double rt_cum_s = 0.0;
};

extern const char *const kReportHeader;

std::string format_report_row(const ReportRow &row);
void emit_report(const std::vector<ReportRow> &rows, const std::string &path);
std::vector<ReportRow> read_report(const std::string &path);

}  // namespace flora
