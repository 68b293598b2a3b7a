#pragma once

#include <map>
#include <optional>
#include <set>

#include "rscuc/milp.hpp"
#include "rscuc/network.hpp"

namespace rscuc {

enum class Formulation { BTheta, Ptdf };

struct GtKey {
  int g = 0;
  int t = 0;
  auto operator<=>(const GtKey&) const = default;
};

struct BuildOptions {
  Formulation formulation = Formulation::BTheta;
  bool reserve_enabled = true;
  std::map<GtKey, int> fixed_commitments;  // (g,t) -> {0,1}, pinned via bounds
  std::map<GtKey, int> warm_starts;        // (g,t) -> {0,1}, hints only
  std::set<int> inactive_thermal;          // line ids whose limit rows are omitted
};

// Builds the SCUC MILP for one demand matrix (N x T, MW).
//
// Both formulations share the generator constraints: capacity coupling,
// ramp-restricted reserve sized to cover any single unit's output, hourly
// up/down ramps with start/shut allowances, minimum up/down windows
// (truncated at the horizon boundaries), and the start-up logic row. BTheta
// adds angle variables, the flow-definition rows, nodal balance, and the
// reference-angle pin; Ptdf defines each flow from net nodal injections
// through the sensitivity matrix and keeps one system balance row per period.
// Thermal limit rows are emitted per line and period unless the line is
// listed inactive.
MilpModel build_scuc(const Network& network, const Matrix& demand, const BuildOptions& options);

ModelStats model_stats(const MilpModel& model);

}  // namespace rscuc
