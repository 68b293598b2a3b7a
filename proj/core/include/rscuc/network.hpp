#pragma once

#include <string>
#include <vector>

#include "rscuc/matrix.hpp"

namespace rscuc {

struct Bus {
  int id = 0;
  bool is_slack = false;
};

struct Generator {
  int id = 0;
  int bus = 0;
  double p_min = 0.0;        // MW
  double p_max = 0.0;        // MW
  double cost_linear = 0.0;  // $/MWh
  double cost_no_load = 0.0; // $/h
  double cost_startup = 0.0; // $
  double ramp_hr = 0.0;      // MW/h
  double ramp_10 = 0.0;      // MW/10min
  double ramp_su = 0.0;      // MW
  double ramp_sd = 0.0;      // MW
  int min_up = 1;            // hours
  int min_down = 1;          // hours
  bool initial_on = false;
  double initial_output = 0.0;  // MW, 0 when initially off
};

struct Line {
  int id = 0;
  int from_bus = 0;
  int to_bus = 0;
  double susceptance = 0.0;  // p.u., > 0
  double limit = 0.0;        // MW, > 0
};

// Physical network after ingestion: bus ids contiguous 0..N-1, exactly one
// slack, lines merged so no unordered endpoint pair repeats. Immutable in
// practice: construct once, share read-only.
struct Network {
  std::vector<Bus> buses;
  std::vector<Generator> generators;
  std::vector<Line> lines;
  Matrix base_demand;  // N x T, MW

  int n_buses() const { return static_cast<int>(buses.size()); }
  int n_gens() const { return static_cast<int>(generators.size()); }
  int n_lines() const { return static_cast<int>(lines.size()); }
  int horizon() const { return base_demand.cols(); }

  int slack_bus() const;
  // Position of the line with the given id; -1 when absent.
  int line_index(int line_id) const;
  // Generators attached to bus n.
  std::vector<int> gens_at_bus(int n) const;
  // Checks the structural invariants; throws std::invalid_argument on violation.
  void validate() const;
};

// Sensitivity of each line flow to a 1 MW injection at each bus, withdrawn at
// the reference bus. Row order follows Network::lines, column order bus ids.
struct PtdfMatrix {
  Matrix values;  // K x N
  int ref_bus = 0;
};

// Collapses parallel lines (same unordered endpoint pair) into one line with
// summed susceptance and the minimum limit. First-occurrence order is kept and
// the merged line takes the id of its first member. Idempotent.
std::vector<Line> merge_parallel_lines(const std::vector<Line>& raw_lines);

// DC sensitivities via dense factorization of the slack-reduced susceptance
// matrix. Throws if the network is disconnected, naming the unreachable buses.
PtdfMatrix compute_ptdf(const Network& network);

// Flows for one period from PTDF and a nodal net-injection vector (length N).
std::vector<double> ptdf_flows(const PtdfMatrix& ptdf, const std::vector<double>& injection);

// Case ingestion from the documented JSON schema. Line reactance x is
// converted to susceptance b = 1/x. Bus ids are remapped to 0..N-1 in sorted
// order; generator/line references follow. demand is stored transposed
// (file is per-hour rows, Network keeps N x T).
Network load_case(const std::string& json_text);
Network load_case_file(const std::string& path);
std::string dump_case(const Network& network);  // inverse of load_case, for tooling

}  // namespace rscuc
