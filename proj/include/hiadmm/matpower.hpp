#pragma once

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hiadmm/common.hpp"
#include "hiadmm/network.hpp"

namespace hiadmm {
namespace detail {

// Rows of a "name = [ ... ];" matrix block, one vector<double> per row.
inline std::vector<std::vector<double>> parse_matrix_block(const std::string& text,
                                                           const std::string& name) {
  const std::string key = "mpc." + name;
  std::size_t pos = 0;
  while (true) {
    pos = text.find(key, pos);
    if (pos == std::string::npos)
      throw ParseError("missing section '" + name + "' in case text");
    std::size_t after = pos + key.size();
    // Reject partial matches such as mpc.buses or mpc.gencost when
    // searching for mpc.gen.
    if (after < text.size() && (std::isalnum(static_cast<unsigned char>(text[after])) ||
                                text[after] == '_')) {
      pos = after;
      continue;
    }
    std::size_t eq = text.find_first_not_of(" \t", after);
    if (eq == std::string::npos || text[eq] != '=') {
      pos = after;
      continue;
    }
    pos = eq + 1;
    break;
  }
  std::size_t open = text.find('[', pos);
  if (open == std::string::npos)
    throw ParseError("section '" + name + "' has no matrix body");
  std::size_t close = text.find(']', open);
  if (close == std::string::npos)
    throw ParseError("section '" + name + "' is not terminated");

  std::vector<std::vector<double>> rows;
  std::vector<double> row;
  std::string token;
  auto flush_token = [&] {
    if (token.empty()) return;
    char* end = nullptr;
    double value = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0')
      throw ParseError("bad numeric token '" + token + "' in section '" + name + "'");
    row.push_back(value);
    token.clear();
  };
  auto flush_row = [&] {
    flush_token();
    if (!row.empty()) {
      rows.push_back(row);
      row.clear();
    }
  };
  bool in_comment = false;
  for (std::size_t i = open + 1; i < close; ++i) {
    char c = text[i];
    if (in_comment) {
      if (c == '\n') in_comment = false;
      if (c != '\n') continue;
    }
    if (c == '%') {
      in_comment = true;
      continue;
    }
    if (c == ';' || c == '\n') {
      flush_row();
    } else if (c == ' ' || c == '\t' || c == ',' || c == '\r') {
      flush_token();
    } else {
      token += c;
    }
  }
  flush_row();
  return rows;
}

inline double parse_scalar(const std::string& text, const std::string& name,
                           double fallback) {
  const std::string key = "mpc." + name;
  std::size_t pos = text.find(key);
  if (pos == std::string::npos) return fallback;
  std::size_t eq = text.find('=', pos);
  if (eq == std::string::npos) return fallback;
  return std::strtod(text.c_str() + eq + 1, nullptr);
}

}  // namespace detail

// Parses MATPOWER m-file case text into a validated NetworkCase. Quantities
// come out in p.u. on baseMVA; loads carry injection sign (consumption is
// negative). Bus type 3 marks the reference. Quadratic and constant cost
// terms are dropped in favor of the linear coefficient.
inline NetworkCase parse_matpower(const std::string& text) {
  NetworkCase net;
  net.base_mva = detail::parse_scalar(text, "baseMVA", 100.0);
  const double base = net.base_mva;
  if (base <= 0.0) throw ParseError("baseMVA must be positive");

  const auto bus_rows = detail::parse_matrix_block(text, "bus");
  const auto gen_rows = detail::parse_matrix_block(text, "gen");
  const auto branch_rows = detail::parse_matrix_block(text, "branch");
  const auto cost_rows = detail::parse_matrix_block(text, "gencost");

  bool shunts_ignored = false;
  double v_min = 0.0, v_max = 0.0;
  bool v_uniform = true, v_first = true;
  for (const auto& row : bus_rows) {
    if (row.size() < 13) throw ParseError("bus row has fewer than 13 columns");
    Bus b;
    b.id = static_cast<int>(row[0]);
    const int type = static_cast<int>(row[1]);
    if (type == 4)
      log_warn("bus %d is marked isolated (type 4)", b.id);
    b.p_load = -row[2] / base;
    b.q_load = -row[3] / base;
    if (row[4] != 0.0 || row[5] != 0.0) shunts_ignored = true;
    b.is_reference = (type == 3);
    net.buses.push_back(b);
    const double bus_vmax = row[11], bus_vmin = row[12];
    if (v_first) {
      v_min = bus_vmin;
      v_max = bus_vmax;
      v_first = false;
    } else {
      if (bus_vmin != v_min || bus_vmax != v_max) v_uniform = false;
      v_min = std::min(v_min, bus_vmin);
      v_max = std::max(v_max, bus_vmax);
    }
  }
  if (shunts_ignored)
    log_warn("bus shunt elements (Gs/Bs) are outside the model and were ignored");
  if (!v_uniform)
    log_warn("per-bus voltage limits are not uniform; using the loosest box [%g, %g]",
             v_min, v_max);
  net.v_min = v_min;
  net.v_max = v_max;

  for (const auto& row : branch_rows) {
    if (row.size() < 11) throw ParseError("branch row has fewer than 11 columns");
    Branch br;
    br.from_bus = static_cast<int>(row[0]);
    br.to_bus = static_cast<int>(row[1]);
    br.resistance = row[2];
    br.reactance = row[3];
    br.charging = row[4];
    br.tap_ratio = row[8] != 0.0 ? row[8] : 1.0;
    if (row[9] != 0.0)
      throw ParseError("branch " + std::to_string(br.from_bus) + "-" +
                       std::to_string(br.to_bus) + " has a phase shift; unsupported");
    if (row[10] == 0.0) {
      log_warn("dropping out-of-service branch %d-%d", br.from_bus, br.to_bus);
      continue;
    }
    if (row.size() >= 13) {
      const double amin = row[11], amax = row[12];
      const bool unconstrained =
          (amin == 0.0 && amax == 0.0) || amin <= -360.0 || amax >= 360.0;
      if (!unconstrained) {
        br.angle_min = amin * M_PI / 180.0;
        br.angle_max = amax * M_PI / 180.0;
      }
    }
    net.branches.push_back(br);
  }

  if (cost_rows.size() != gen_rows.size() && cost_rows.size() != 2 * gen_rows.size())
    throw ParseError("gencost row count does not match gen row count");
  if (cost_rows.size() == 2 * gen_rows.size())
    log_warn("reactive cost rows present in gencost; ignored");

  bool poly_terms_dropped = false;
  for (std::size_t gi = 0; gi < gen_rows.size(); ++gi) {
    const auto& row = gen_rows[gi];
    if (row.size() < 10) throw ParseError("gen row has fewer than 10 columns");
    Generator g;
    g.id = static_cast<int>(gi);
    g.bus = static_cast<int>(row[0]);
    g.q_max = row[3] / base;
    g.q_min = row[4] / base;
    g.p_max = row[8] / base;
    g.p_min = row[9] / base;
    if (row[7] == 0.0) {
      log_warn("dropping out-of-service generator at bus %d", g.bus);
      continue;
    }
    const auto& cost = cost_rows[gi];
    if (cost.size() < 4) throw ParseError("gencost row has fewer than 4 columns");
    const int model = static_cast<int>(cost[0]);
    const int n = static_cast<int>(cost[3]);
    if (static_cast<int>(cost.size()) < 4 + (model == 1 ? 2 * n : n))
      throw ParseError("gencost row is shorter than its declared length");
    if (model == 2) {
      // Polynomial c_{n-1} ... c_0 in MW; keep the linear term, per-unit it.
      double linear = 0.0;
      for (int k = 0; k < n; ++k) {
        const double coeff = cost[4 + k];
        const int degree = n - 1 - k;
        if (degree == 1) {
          linear = coeff;
        } else if (coeff != 0.0) {
          poly_terms_dropped = true;
        }
      }
      g.cost = linear * base;
    } else if (model == 1) {
      // Piecewise-linear: use the chord slope between first and last points.
      const double x0 = cost[4], y0 = cost[5];
      const double x1 = cost[4 + 2 * (n - 1)], y1 = cost[5 + 2 * (n - 1)];
      if (x1 == x0) throw ParseError("degenerate piecewise cost for generator");
      g.cost = (y1 - y0) / (x1 - x0) * base;
      poly_terms_dropped = true;
    } else {
      throw ParseError("unknown gencost model " + std::to_string(model));
    }
    net.generators.push_back(g);
  }
  if (poly_terms_dropped)
    log_warn("cost curves reduced to their linear term; higher-order and "
             "constant terms were dropped");

  net.finalize();
  return net;
}

}  // namespace hiadmm
