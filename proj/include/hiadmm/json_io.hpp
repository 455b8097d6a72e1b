#pragma once

#include <cmath>
#include <fstream>
#include <string>

#include <json.hpp>

#include "hiadmm/common.hpp"
#include "hiadmm/network.hpp"

namespace hiadmm {

using Json = nlohmann::ordered_json;

inline Json to_json(const NetworkCase& net) {
  Json j;
  j["base_mva"] = net.base_mva;
  j["angle_limits"] = {net.angle_min, net.angle_max};
  j["voltage_limits"] = {net.v_min, net.v_max};
  j["buses"] = Json::array();
  for (const Bus& b : net.buses)
    j["buses"].push_back({{"id", b.id},
                          {"p_load", b.p_load},
                          {"q_load", b.q_load},
                          {"is_reference", b.is_reference}});
  j["branches"] = Json::array();
  for (const Branch& br : net.branches) {
    Json jb = {{"from_bus", br.from_bus},   {"to_bus", br.to_bus},
               {"resistance", br.resistance}, {"reactance", br.reactance},
               {"charging", br.charging},   {"tap_ratio", br.tap_ratio}};
    if (!std::isnan(br.angle_min)) jb["angle_min"] = br.angle_min;
    if (!std::isnan(br.angle_max)) jb["angle_max"] = br.angle_max;
    j["branches"].push_back(jb);
  }
  j["generators"] = Json::array();
  for (const Generator& g : net.generators)
    j["generators"].push_back({{"id", g.id},
                               {"bus", g.bus},
                               {"cost", g.cost},
                               {"p_min", g.p_min},
                               {"p_max", g.p_max},
                               {"q_min", g.q_min},
                               {"q_max", g.q_max},
                               {"is_artificial_slack", g.is_artificial_slack}});
  return j;
}

inline NetworkCase network_from_json(const Json& j) {
  NetworkCase net;
  net.base_mva = j.at("base_mva").get<double>();
  net.angle_min = j.at("angle_limits").at(0).get<double>();
  net.angle_max = j.at("angle_limits").at(1).get<double>();
  net.v_min = j.at("voltage_limits").at(0).get<double>();
  net.v_max = j.at("voltage_limits").at(1).get<double>();
  for (const Json& jb : j.at("buses")) {
    Bus b;
    b.id = jb.at("id").get<int>();
    b.p_load = jb.at("p_load").get<double>();
    b.q_load = jb.at("q_load").get<double>();
    b.is_reference = jb.at("is_reference").get<bool>();
    net.buses.push_back(b);
  }
  for (const Json& jb : j.at("branches")) {
    Branch br;
    br.from_bus = jb.at("from_bus").get<int>();
    br.to_bus = jb.at("to_bus").get<int>();
    br.resistance = jb.at("resistance").get<double>();
    br.reactance = jb.at("reactance").get<double>();
    br.charging = jb.at("charging").get<double>();
    br.tap_ratio = jb.at("tap_ratio").get<double>();
    if (jb.contains("angle_min")) br.angle_min = jb.at("angle_min").get<double>();
    if (jb.contains("angle_max")) br.angle_max = jb.at("angle_max").get<double>();
    net.branches.push_back(br);
  }
  for (const Json& jg : j.at("generators")) {
    Generator g;
    g.id = jg.at("id").get<int>();
    g.bus = jg.at("bus").get<int>();
    g.cost = jg.at("cost").get<double>();
    g.p_min = jg.at("p_min").get<double>();
    g.p_max = jg.at("p_max").get<double>();
    g.q_min = jg.at("q_min").get<double>();
    g.q_max = jg.at("q_max").get<double>();
    g.is_artificial_slack = jg.at("is_artificial_slack").get<bool>();
    net.generators.push_back(g);
  }
  net.finalize();
  return net;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write file: " + path);
  out << text;
}

}  // namespace hiadmm
