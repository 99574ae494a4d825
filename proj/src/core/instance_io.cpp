#include "snd/core/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "snd/core/errors.hpp"

namespace snd::core {

namespace {

using nlohmann::ordered_json;

ordered_json capacity_to_json(double c) {
  if (std::isinf(c)) return nullptr;
  return c;
}

double capacity_from_json(const ordered_json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

}  // namespace

nlohmann::ordered_json instance_to_json(const Instance& inst) {
  ordered_json j;
  j["name"] = inst.name;
  j["params"] = {{"l40", inst.params.l40},
                 {"l53", inst.params.l53},
                 {"horizon_weeks", inst.params.horizon_weeks},
                 {"period_days", inst.params.period_days}};
  j["commodities"] = ordered_json::array();
  for (const Commodity& c : inst.commodities)
    j["commodities"].push_back({{"id", c.id},
                                {"origin", c.origin},
                                {"destination", c.destination},
                                {"type", to_string(c.type)}});
  j["nodes"] = ordered_json::array();
  for (const GraphNode& n : inst.graph.nodes)
    j["nodes"].push_back({{"id", n.id},
                          {"kind", to_string(n.kind)},
                          {"terminal", n.terminal},
                          {"time", n.time},
                          {"label", n.label}});
  j["arcs"] = ordered_json::array();
  for (const GraphArc& a : inst.graph.arcs)
    j["arcs"].push_back({{"id", a.id},
                         {"tail", a.tail},
                         {"head", a.head},
                         {"kind", to_string(a.kind)},
                         {"capacity_feet", capacity_to_json(a.capacity_feet)}});
  j["blocks"] = ordered_json::array();
  for (const Block& b : inst.blocks) {
    ordered_json fc = ordered_json::object();
    for (const auto& [k, v] : b.flow_cost) fc[std::to_string(k)] = v;
    j["blocks"].push_back({{"id", b.id},
                           {"arcs", b.arcs},
                           {"design_cost", b.design_cost},
                           {"artificial", b.artificial},
                           {"admissible", b.admissible},
                           {"flow_cost", std::move(fc)}});
  }
  return j;
}

Instance instance_from_json(const nlohmann::ordered_json& j) {
  Instance inst;
  try {
    inst.name = j.at("name").get<std::string>();
    const auto& p = j.at("params");
    inst.params.l40 = p.at("l40").get<double>();
    inst.params.l53 = p.at("l53").get<double>();
    inst.params.horizon_weeks = p.at("horizon_weeks").get<int>();
    inst.params.period_days = p.at("period_days").get<int>();
    for (const auto& c : j.at("commodities")) {
      Commodity com;
      com.id = c.at("id").get<int>();
      com.origin = c.at("origin").get<std::string>();
      com.destination = c.at("destination").get<std::string>();
      com.type = container_type_from_string(c.at("type").get<std::string>());
      inst.commodities.push_back(std::move(com));
    }
    for (const auto& n : j.at("nodes")) {
      GraphNode node;
      node.id = n.at("id").get<int>();
      node.kind = node_kind_from_string(n.at("kind").get<std::string>());
      node.terminal = n.at("terminal").get<std::string>();
      node.time = n.at("time").get<int>();
      node.label = n.at("label").get<std::string>();
      inst.graph.nodes.push_back(std::move(node));
    }
    for (const auto& a : j.at("arcs")) {
      GraphArc arc;
      arc.id = a.at("id").get<int>();
      arc.tail = a.at("tail").get<int>();
      arc.head = a.at("head").get<int>();
      arc.kind = arc_kind_from_string(a.at("kind").get<std::string>());
      arc.capacity_feet = capacity_from_json(a.at("capacity_feet"));
      inst.graph.arcs.push_back(arc);
    }
    for (const auto& b : j.at("blocks")) {
      Block blk;
      blk.id = b.at("id").get<int>();
      blk.arcs = b.at("arcs").get<std::vector<int>>();
      blk.design_cost = b.at("design_cost").get<double>();
      blk.artificial = b.at("artificial").get<bool>();
      blk.admissible = b.at("admissible").get<std::vector<int>>();
      for (const auto& [key, val] : b.at("flow_cost").items())
        blk.flow_cost[std::stoi(key)] = val.get<double>();
      inst.blocks.push_back(std::move(blk));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("instance JSON is malformed: ") + e.what());
  }
  inst.validate();
  return inst;
}

void save_instance(const std::string& path, const Instance& inst) {
  write_json_file(path, instance_to_json(inst));
}

Instance load_instance(const std::string& path) {
  return instance_from_json(parse_json_file(path));
}

nlohmann::ordered_json matrix_to_json(const DemandMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int t = 0; t < m.periods; ++t) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < m.commodities; ++k) row.push_back(m.at(t, k));
    rows.push_back(std::move(row));
  }
  return ordered_json{{"periods", m.periods}, {"commodities", m.commodities},
                      {"values", std::move(rows)}};
}

DemandMatrix matrix_from_json(const nlohmann::ordered_json& j) {
  DemandMatrix m;
  try {
    m.periods = j.at("periods").get<int>();
    m.commodities = j.at("commodities").get<int>();
    const auto& rows = j.at("values");
    if (static_cast<int>(rows.size()) != m.periods)
      throw ValidationError("matrix JSON row count does not match 'periods'");
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != m.commodities)
        throw ValidationError("matrix JSON row width does not match 'commodities'");
      for (const auto& v : row) m.values.push_back(v.get<std::int64_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("matrix JSON is malformed: ") + e.what());
  }
  m.validate();
  return m;
}

void save_matrix(const std::string& path, const DemandMatrix& m) {
  write_json_file(path, matrix_to_json(m));
}

DemandMatrix load_matrix(const std::string& path) {
  return matrix_from_json(parse_json_file(path));
}

nlohmann::ordered_json parse_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path + ": not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace snd::core
