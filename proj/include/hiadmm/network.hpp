#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <vector>

#include "hiadmm/common.hpp"

namespace hiadmm {

// All electrical quantities are per-unit on the case base. Loads are stored
// with injection sign: a consuming bus has negative p_load/q_load, so that
// load + generation balances the power flowing into the network.
struct Bus {
  int id = 0;  // original label from the case file
  double p_load = 0.0;
  double q_load = 0.0;
  bool is_reference = false;
};

struct Branch {
  int from_bus = 0;
  int to_bus = 0;
  double resistance = 0.0;
  double reactance = 0.0;
  double charging = 0.0;   // total line charging susceptance
  double tap_ratio = 1.0;  // off-nominal turns ratio on the from side
  // Angle-difference limits in radians; NaN means "use the case default".
  double angle_min = std::numeric_limits<double>::quiet_NaN();
  double angle_max = std::numeric_limits<double>::quiet_NaN();
};

struct Generator {
  int id = 0;
  int bus = 0;
  double cost = 0.0;  // linear cost per p.u. active power
  double p_min = 0.0;
  double p_max = 0.0;
  double q_min = 0.0;
  double q_max = 0.0;
  bool is_artificial_slack = false;
};

struct NetworkCase {
  std::vector<Bus> buses;
  std::vector<Branch> branches;
  std::vector<Generator> generators;
  double angle_min = -M_PI / 3.0;  // case-wide default angle-difference box
  double angle_max = M_PI / 3.0;
  double v_min = 0.94;
  double v_max = 1.06;
  double base_mva = 100.0;

  int num_buses() const { return static_cast<int>(buses.size()); }

  // Dense 0-based index of a bus label, ordered by ascending label.
  int bus_index(int bus_id) const {
    auto it = std::lower_bound(sorted_ids_.begin(), sorted_ids_.end(), bus_id);
    if (it == sorted_ids_.end() || *it != bus_id)
      throw IntegrityError("unknown bus id " + std::to_string(bus_id));
    return static_cast<int>(it - sorted_ids_.begin());
  }

  bool has_bus(int bus_id) const {
    return std::binary_search(sorted_ids_.begin(), sorted_ids_.end(), bus_id);
  }

  // Sorts buses by label, rebuilds the index map, and checks invariants.
  void finalize() {
    std::sort(buses.begin(), buses.end(),
              [](const Bus& a, const Bus& b) { return a.id < b.id; });
    sorted_ids_.resize(buses.size());
    for (std::size_t i = 0; i < buses.size(); ++i) sorted_ids_[i] = buses[i].id;
    for (std::size_t i = 1; i < sorted_ids_.size(); ++i)
      if (sorted_ids_[i] == sorted_ids_[i - 1])
        throw IntegrityError("duplicate bus id " + std::to_string(sorted_ids_[i]));
    validate();
  }

 private:
  std::vector<int> sorted_ids_;

  void validate() const {
    if (buses.empty()) throw IntegrityError("case has no buses");
    for (const Bus& b : buses)
      if (!std::isfinite(b.p_load) || !std::isfinite(b.q_load))
        throw IntegrityError("non-finite load at bus " + std::to_string(b.id));
    bool any_ref = false;
    for (const Bus& b : buses) any_ref = any_ref || b.is_reference;
    if (!any_ref) throw IntegrityError("case has no reference bus");
    for (const Branch& br : branches) {
      if (!has_bus(br.from_bus))
        throw IntegrityError("branch references unknown bus " + std::to_string(br.from_bus));
      if (!has_bus(br.to_bus))
        throw IntegrityError("branch references unknown bus " + std::to_string(br.to_bus));
      if (br.from_bus == br.to_bus)
        throw IntegrityError("branch is a self-loop at bus " + std::to_string(br.from_bus));
    }
    for (const Generator& g : generators) {
      if (!has_bus(g.bus))
        throw IntegrityError("generator " + std::to_string(g.id) +
                             " references unknown bus " + std::to_string(g.bus));
      if (g.p_min > g.p_max || g.q_min > g.q_max)
        throw IntegrityError("generator " + std::to_string(g.id) + " has inverted bounds");
    }
    if (!(angle_min < 0.0 && angle_max > 0.0))
      throw IntegrityError("angle limits must straddle zero");
    if (!(v_min > 0.0 && v_min < v_max))
      throw IntegrityError("voltage limits out of order");
    check_connected();
  }

  void check_connected() const {
    const int n = num_buses();
    std::vector<std::vector<int>> adj(n);
    for (const Branch& br : branches) {
      int u = bus_index(br.from_bus), v = bus_index(br.to_bus);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
    }
    if (count != n) throw IntegrityError("network graph is not connected");
  }
};

// Sparse nodal admittance matrix over dense bus indices. The pattern is the
// closed neighborhood structure: entry (i,j) exists iff {i,j} is an edge or
// i == j, and it is mirrored at (j,i).
class AdmittanceMatrix {
 public:
  struct Term {
    int col = 0;
    double g = 0.0;
    double b = 0.0;
  };

  explicit AdmittanceMatrix(int n = 0) : rows_(n) {}

  int size() const { return static_cast<int>(rows_.size()); }

  // Terms of row i sorted by column, diagonal included.
  const std::vector<Term>& row(int i) const { return rows_[i]; }

  const Term* find(int i, int j) const {
    const auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Term& t, int col) { return t.col < col; });
    if (it == r.end() || it->col != j) return nullptr;
    return &*it;
  }

  void add(int i, int j, double g, double b) {
    auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Term& t, int col) { return t.col < col; });
    if (it != r.end() && it->col == j) {
      it->g += g;
      it->b += b;
    } else {
      r.insert(it, Term{j, g, b});
    }
  }

 private:
  std::vector<std::vector<Term>> rows_;
};

// Standard Y-bus assembly with the two-port tap model: for a branch with
// series admittance y = 1/(r + jx), charging b_c, and from-side ratio tau,
//   Y_ff += (y + j b_c/2)/tau^2,  Y_tt += y + j b_c/2,
//   Y_ft = Y_tf += -y/tau.
// Parallel branches accumulate.
inline AdmittanceMatrix build_admittance(const NetworkCase& net) {
  AdmittanceMatrix ybus(net.num_buses());
  for (int i = 0; i < net.num_buses(); ++i) ybus.add(i, i, 0.0, 0.0);
  for (const Branch& br : net.branches) {
    if (br.resistance == 0.0 && br.reactance == 0.0)
      throw IntegrityError("branch " + std::to_string(br.from_bus) + "-" +
                           std::to_string(br.to_bus) + " has zero series impedance");
    const std::complex<double> y = 1.0 / std::complex<double>(br.resistance, br.reactance);
    const std::complex<double> shunt(0.0, br.charging / 2.0);
    const double tau = br.tap_ratio != 0.0 ? br.tap_ratio : 1.0;
    const int f = net.bus_index(br.from_bus);
    const int t = net.bus_index(br.to_bus);
    const std::complex<double> yff = (y + shunt) / (tau * tau);
    const std::complex<double> ytt = y + shunt;
    const std::complex<double> yft = -y / tau;
    ybus.add(f, f, yff.real(), yff.imag());
    ybus.add(t, t, ytt.real(), ytt.imag());
    ybus.add(f, t, yft.real(), yft.imag());
    ybus.add(t, f, yft.real(), yft.imag());
  }
  return ybus;
}

// Appends one artificial slack generator per bus so every subproblem stays
// feasible; wide symmetric bounds cover any load imbalance at this scale.
inline NetworkCase add_slack_generators(const NetworkCase& net, double slack_cost = 1e4) {
  double max_cost = 0.0;
  for (const Generator& g : net.generators) max_cost = std::max(max_cost, g.cost);
  if (slack_cost <= max_cost)
    throw ArgumentError("slack cost " + std::to_string(slack_cost) +
                        " does not dominate the dearest generator (" +
                        std::to_string(max_cost) + ")");
  NetworkCase out = net;
  int next_id = 0;
  for (const Generator& g : out.generators) next_id = std::max(next_id, g.id + 1);
  for (const Bus& b : out.buses) {
    Generator slack;
    slack.id = next_id++;
    slack.bus = b.id;
    slack.cost = slack_cost;
    slack.p_min = -10.0;
    slack.p_max = 10.0;
    slack.q_min = -10.0;
    slack.q_max = 10.0;
    slack.is_artificial_slack = true;
    out.generators.push_back(slack);
  }
  out.finalize();
  return out;
}

}  // namespace hiadmm
