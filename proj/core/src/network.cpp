#include "rscuc/network.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rscuc {

using nlohmann::json;

int Network::slack_bus() const {
  for (const Bus& b : buses)
    if (b.is_slack) return b.id;
  return -1;
}

int Network::line_index(int line_id) const {
  for (int k = 0; k < n_lines(); ++k)
    if (lines[k].id == line_id) return k;
  return -1;
}

std::vector<int> Network::gens_at_bus(int n) const {
  std::vector<int> out;
  for (int g = 0; g < n_gens(); ++g)
    if (generators[g].bus == n) out.push_back(g);
  return out;
}

void Network::validate() const {
  const int n = n_buses();
  if (n == 0) throw std::invalid_argument("network: no buses");
  int slack_count = 0;
  for (int i = 0; i < n; ++i) {
    if (buses[i].id != i) throw std::invalid_argument("network: bus ids not contiguous 0..N-1");
    if (buses[i].is_slack) ++slack_count;
  }
  if (slack_count != 1) throw std::invalid_argument("network: exactly one slack bus required");
  for (const Generator& g : generators) {
    if (g.bus < 0 || g.bus >= n) throw std::invalid_argument("network: generator references missing bus");
    if (g.p_min < 0 || g.p_min > g.p_max) throw std::invalid_argument("network: generator limits violate 0 <= pmin <= pmax");
    if (g.ramp_hr < 0 || g.ramp_10 < 0 || g.ramp_su < 0 || g.ramp_sd < 0)
      throw std::invalid_argument("network: negative ramp");
    if (g.min_up < 1 || g.min_down < 1) throw std::invalid_argument("network: min_up/min_down must be >= 1");
    if (!g.initial_on && g.initial_output != 0.0)
      throw std::invalid_argument("network: initial_output must be 0 when initially off");
    if (g.initial_output < 0 || g.initial_output > g.p_max)
      throw std::invalid_argument("network: initial_output outside [0, pmax]");
  }
  std::set<std::pair<int, int>> seen;
  for (const Line& l : lines) {
    if (l.from_bus < 0 || l.from_bus >= n || l.to_bus < 0 || l.to_bus >= n)
      throw std::invalid_argument("network: line references missing bus");
    if (l.from_bus == l.to_bus) throw std::invalid_argument("network: line endpoints coincide");
    if (l.susceptance <= 0) throw std::invalid_argument("network: susceptance must be > 0");
    if (l.limit <= 0) throw std::invalid_argument("network: line limit must be > 0");
    auto key = std::minmax(l.from_bus, l.to_bus);
    if (!seen.insert({key.first, key.second}).second)
      throw std::invalid_argument("network: parallel lines not merged");
  }
  if (base_demand.rows() != n) throw std::invalid_argument("network: demand rows != bus count");
}

std::vector<Line> merge_parallel_lines(const std::vector<Line>& raw_lines) {
  std::vector<Line> out;
  std::map<std::pair<int, int>, int> pos;  // unordered endpoints -> index in out
  for (const Line& l : raw_lines) {
    auto key = std::minmax(l.from_bus, l.to_bus);
    auto it = pos.find({key.first, key.second});
    if (it == pos.end()) {
      pos[{key.first, key.second}] = static_cast<int>(out.size());
      out.push_back(l);
    } else {
      Line& m = out[it->second];
      m.susceptance += l.susceptance;
      m.limit = std::min(m.limit, l.limit);
    }
  }
  return out;
}

PtdfMatrix compute_ptdf(const Network& network) {
  const int n = network.n_buses();
  const int k = network.n_lines();
  const int ref = network.slack_bus();
  if (ref < 0) throw std::invalid_argument("compute_ptdf: no slack bus designated");

  // Connectivity check first: a disconnected network makes the reduced
  // susceptance matrix singular, and we want to name the isolated buses.
  std::vector<std::vector<int>> adj(n);
  for (const Line& l : network.lines) {
    adj[l.from_bus].push_back(l.to_bus);
    adj[l.to_bus].push_back(l.from_bus);
  }
  std::vector<char> reach(n, 0);
  std::queue<int> q;
  q.push(ref);
  reach[ref] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (!reach[v]) { reach[v] = 1; q.push(v); }
  }
  std::vector<int> isolated;
  for (int i = 0; i < n; ++i)
    if (!reach[i]) isolated.push_back(i);
  if (!isolated.empty()) {
    std::ostringstream os;
    os << "compute_ptdf: disconnected network; buses unreachable from slack:";
    for (int b : isolated) os << ' ' << b;
    throw std::runtime_error(os.str());
  }

  // Reduced nodal susceptance matrix (slack row/column deleted).
  std::vector<int> red(n, -1);  // bus -> reduced index
  int idx = 0;
  for (int i = 0; i < n; ++i)
    if (i != ref) red[i] = idx++;
  const int nr = n - 1;
  Matrix b_red(nr, nr);
  for (const Line& l : network.lines) {
    const int i = l.from_bus, j = l.to_bus;
    if (i != ref) b_red(red[i], red[i]) += l.susceptance;
    if (j != ref) b_red(red[j], red[j]) += l.susceptance;
    if (i != ref && j != ref) {
      b_red(red[i], red[j]) -= l.susceptance;
      b_red(red[j], red[i]) -= l.susceptance;
    }
  }

  PtdfMatrix out;
  out.ref_bus = ref;
  out.values = Matrix(k, n);
  if (nr == 0) return out;  // single-bus network: no lines possible

  LuSolver lu(b_red);
  // Column for bus m: angles theta = B_red^{-1} e_m (theta_ref = 0), then
  // flow on line k is b_k (theta_from - theta_to).
  for (int m = 0; m < n; ++m) {
    if (m == ref) continue;  // slack column stays identically zero
    std::vector<double> e(nr, 0.0);
    e[red[m]] = 1.0;
    std::vector<double> theta = lu.solve(e);
    for (int kk = 0; kk < k; ++kk) {
      const Line& l = network.lines[kk];
      const double ti = (l.from_bus == ref) ? 0.0 : theta[red[l.from_bus]];
      const double to = (l.to_bus == ref) ? 0.0 : theta[red[l.to_bus]];
      out.values(kk, m) = l.susceptance * (ti - to);
    }
  }
  return out;
}

std::vector<double> ptdf_flows(const PtdfMatrix& ptdf, const std::vector<double>& injection) {
  const int k = ptdf.values.rows();
  const int n = ptdf.values.cols();
  if (static_cast<int>(injection.size()) != n)
    throw std::invalid_argument("ptdf_flows: injection length != bus count");
  std::vector<double> f(k, 0.0);
  for (int kk = 0; kk < k; ++kk) {
    const double* row = ptdf.values.row(kk);
    double s = 0.0;
    for (int m = 0; m < n; ++m) s += row[m] * injection[m];
    f[kk] = s;
  }
  return f;
}

namespace {

double require_number(const json& j, const char* field, const char* where) {
  if (!j.contains(field) || !j.at(field).is_number()) {
    std::ostringstream os;
    os << "case: missing or non-numeric field '" << field << "' in " << where;
    throw std::invalid_argument(os.str());
  }
  return j.at(field).get<double>();
}

}  // namespace

Network load_case(const std::string& json_text) {
  json doc = json::parse(json_text);
  Network net;

  if (!doc.contains("buses") || !doc["buses"].is_array() || doc["buses"].empty())
    throw std::invalid_argument("case: 'buses' array required");

  // Remap arbitrary bus ids to contiguous 0..N-1 in sorted order.
  std::map<int, int> bus_map;
  std::vector<std::pair<int, bool>> raw_buses;
  for (const auto& jb : doc["buses"]) {
    const int id = static_cast<int>(require_number(jb, "id", "buses"));
    const bool slack = jb.value("slack", false);
    raw_buses.push_back({id, slack});
  }
  std::sort(raw_buses.begin(), raw_buses.end());
  for (size_t i = 0; i < raw_buses.size(); ++i) {
    if (bus_map.count(raw_buses[i].first))
      throw std::invalid_argument("case: duplicate bus id");
    bus_map[raw_buses[i].first] = static_cast<int>(i);
    net.buses.push_back({static_cast<int>(i), raw_buses[i].second});
  }

  auto mapped_bus = [&](int id, const char* where) {
    auto it = bus_map.find(id);
    if (it == bus_map.end()) {
      std::ostringstream os;
      os << "case: " << where << " references unknown bus " << id;
      throw std::invalid_argument(os.str());
    }
    return it->second;
  };

  if (doc.contains("generators"))
    for (const auto& jg : doc["generators"]) {
      Generator g;
      g.id = static_cast<int>(require_number(jg, "id", "generators"));
      g.bus = mapped_bus(static_cast<int>(require_number(jg, "bus", "generators")), "generator");
      g.p_min = require_number(jg, "pmin", "generators");
      g.p_max = require_number(jg, "pmax", "generators");
      g.cost_linear = require_number(jg, "c", "generators");
      g.cost_no_load = require_number(jg, "c_nl", "generators");
      g.cost_startup = require_number(jg, "c_su", "generators");
      g.ramp_hr = require_number(jg, "ramp_hr", "generators");
      g.ramp_10 = require_number(jg, "ramp_10", "generators");
      g.ramp_su = require_number(jg, "ramp_su", "generators");
      g.ramp_sd = require_number(jg, "ramp_sd", "generators");
      g.min_up = static_cast<int>(require_number(jg, "min_up", "generators"));
      g.min_down = static_cast<int>(require_number(jg, "min_down", "generators"));
      g.initial_on = jg.value("init_on", false);
      g.initial_output = jg.value("init_p", 0.0);
      net.generators.push_back(g);
    }

  std::vector<Line> raw_lines;
  if (doc.contains("lines"))
    for (const auto& jl : doc["lines"]) {
      Line l;
      l.id = static_cast<int>(require_number(jl, "id", "lines"));
      l.from_bus = mapped_bus(static_cast<int>(require_number(jl, "from", "lines")), "line");
      l.to_bus = mapped_bus(static_cast<int>(require_number(jl, "to", "lines")), "line");
      if (l.from_bus == l.to_bus) {
        std::ostringstream os;
        os << "case: line " << l.id << " endpoints coincide";
        throw std::invalid_argument(os.str());
      }
      const double x = require_number(jl, "x", "lines");
      if (x <= 0) throw std::invalid_argument("case: line reactance must be > 0");
      l.susceptance = 1.0 / x;
      l.limit = require_number(jl, "limit", "lines");
      raw_lines.push_back(l);
    }
  net.lines = merge_parallel_lines(raw_lines);

  if (!doc.contains("demand") || !doc["demand"].is_array() || doc["demand"].empty())
    throw std::invalid_argument("case: 'demand' array (per-hour rows) required");
  const int t_count = static_cast<int>(doc["demand"].size());
  const int n = net.n_buses();
  net.base_demand = Matrix(n, t_count);
  for (int t = 0; t < t_count; ++t) {
    const auto& row = doc["demand"][t];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("case: each demand row must list one MW value per bus");
    for (int b = 0; b < n; ++b) net.base_demand(b, t) = row[b].get<double>();
  }

  net.validate();
  return net;
}

Network load_case_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open case file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_case(ss.str());
}

std::string dump_case(const Network& network) {
  json doc;
  for (const Bus& b : network.buses) {
    json jb{{"id", b.id}};
    if (b.is_slack) jb["slack"] = true;
    doc["buses"].push_back(jb);
  }
  for (const Generator& g : network.generators)
    doc["generators"].push_back(json{
        {"id", g.id}, {"bus", g.bus}, {"pmin", g.p_min}, {"pmax", g.p_max},
        {"c", g.cost_linear}, {"c_nl", g.cost_no_load}, {"c_su", g.cost_startup},
        {"ramp_hr", g.ramp_hr}, {"ramp_10", g.ramp_10}, {"ramp_su", g.ramp_su},
        {"ramp_sd", g.ramp_sd}, {"min_up", g.min_up}, {"min_down", g.min_down},
        {"init_on", g.initial_on}, {"init_p", g.initial_output}});
  for (const Line& l : network.lines)
    doc["lines"].push_back(json{{"id", l.id}, {"from", l.from_bus}, {"to", l.to_bus},
                                {"x", 1.0 / l.susceptance}, {"limit", l.limit}});
  for (int t = 0; t < network.horizon(); ++t) {
    json row = json::array();
    for (int b = 0; b < network.n_buses(); ++b) row.push_back(network.base_demand(b, t));
    doc["demand"].push_back(row);
  }
  return doc.dump(2);
}

}  // namespace rscuc
