#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flora/layout.hpp"
#include "flora/metrics_types.hpp"
#include "flora/netlist.hpp"

namespace flora {

/// Region centroid per module; nullopt for modules that own no cells.
std::vector<std::optional<std::pair<double, double>>> module_centroids(
    const Layout &layout);

/// Half-perimeter bounding box of the net over member centroids and any
/// fixed points; nullopt when the net has no located endpoint.
struct NetBox {
  double min_x, max_x, min_y, max_y;
};
std::optional<NetBox> net_box(
    const Net &net,
    const std::vector<std::optional<std::pair<double, double>>> &centroids);

double hpwl(const Layout &layout, const std::vector<Net> &nets);

/// Eq.-style feedthrough module count for one net: half the number of
/// non-member modules whose region intersects the net bounding box.
double ftmod(const Layout &layout, const Net &net);
double ftmod_total(const Layout &layout, const std::vector<Net> &nets);

long long ftpin_pair(long long ce, int y_demand, int u);
long long ftpin(const Layout &layout, int i, int j,
                const FeedthroughParams &params);
long long ftpin_total(const Layout &layout, const FeedthroughParams &params);

/// Common-edge lengths between all module pairs in one grid pass;
/// result[i][j] == result[j][i].
std::vector<std::vector<long long>> ce_matrix(const Layout &layout);

double whitespace_pct(const Layout &layout);

/// Placement density of one module: placed component area / total
/// component area; 1 for a component-free module.
double pd(const ModuleState &module);
/// Component-area-weighted mean over modules, in percent.
double pd_total(const Layout &layout);

struct SaWeights {
  double w_mod = 0.5;
  double w_pin = 0.5;
};

struct SaObjectiveRefs {
  double ftmod_ref = 1.0;
  double ftpin_ref = 1.0;
};

inline double sa_objective(double ftmod_value, double ftpin_value,
                           const SaObjectiveRefs &refs, const SaWeights &w) {
  return w.w_mod * (ftmod_value / refs.ftmod_ref) +
         w.w_pin * (ftpin_value / refs.ftpin_ref);
}

double sa_objective(const Layout &layout, const std::vector<Net> &nets,
                    const FeedthroughParams &params,
                    const SaObjectiveRefs &refs, const SaWeights &weights);

MetricRow compute_metrics(const Layout &layout, const std::vector<Net> &nets,
                          const FeedthroughParams &params);

}  // namespace flora
