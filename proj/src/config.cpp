#include "shellbar/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "shellbar/error.hpp"

namespace shellbar {

using nlohmann::json;

namespace {

constexpr const char* kEdgeNames[] = {"xi0", "xi1", "eta0", "eta1"};
constexpr const char* kSlotNames[] = {"u", "v", "w", "rx", "ry", "rz"};
constexpr const char* kAxisNames[] = {"x", "y", "z"};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

std::vector<double> number_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(number(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

Eigen::Vector3d vec3(const json& j, const std::string& where) {
  const auto v = number_list(j, where);
  if (v.size() != 3) fail(where, "expected 3 components");
  return {v[0], v[1], v[2]};
}

std::vector<int> parse_axes(const std::string& s, const std::string& where) {
  std::vector<int> axes;
  for (char c : s) {
    if (c < 'x' || c > 'z') fail(where, "axis letters must be x, y or z");
    axes.push_back(c - 'x');
  }
  return axes;
}

std::string axes_string(const std::vector<int>& axes) {
  std::string s;
  for (int a : axes) s += kAxisNames[a];
  return s;
}

ConstraintSpec parse_constraint(const json& j, const std::string& where) {
  ConstraintSpec c;
  const std::string type = require(j, "type", where).get<std::string>();
  if (type == "clamp") {
    c.type = ConstraintType::clamp;
  } else if (type == "simple_support") {
    c.type = ConstraintType::simple_support;
  } else if (type == "symmetry") {
    c.type = ConstraintType::symmetry;
    c.axes = parse_axes(require(j, "normal", where).get<std::string>(), where + ".normal");
    if (c.axes.size() != 1) fail(where, "symmetry normal must be a single axis");
  } else if (type == "rigid_diaphragm") {
    c.type = ConstraintType::rigid_diaphragm;
    c.axes = parse_axes(require(j, "plane", where).get<std::string>(), where + ".plane");
    if (c.axes.size() != 2 || c.axes[0] == c.axes[1]) fail(where, "diaphragm plane must name two axes");
  } else if (type == "fix") {
    c.type = ConstraintType::fix;
    for (const auto& s : require(j, "dofs", where)) {
      auto slot = slot_from_string(s.get<std::string>());
      if (!slot) fail(where, "unknown dof '" + s.get<std::string>() + "'");
      c.slots.push_back(*slot);
    }
    if (j.contains("value")) c.value = number(j.at("value"), where + ".value");
  } else {
    fail(where, "unknown constraint type '" + type + "'");
  }
  if (j.contains("edge")) {
    auto e = edge_from_string(j.at("edge").get<std::string>());
    if (!e) fail(where, "unknown edge '" + j.at("edge").get<std::string>() + "'");
    c.edge = e;
  }
  if (j.contains("corner")) {
    const auto v = number_list(j.at("corner"), where + ".corner");
    if (v.size() != 2 || (v[0] != 0 && v[0] != 1) || (v[1] != 0 && v[1] != 1)) {
      fail(where, "corner must be [0|1, 0|1]");
    }
    c.corner = std::array<int, 2>{static_cast<int>(v[0]), static_cast<int>(v[1])};
  }
  if (c.edge.has_value() == c.corner.has_value()) fail(where, "exactly one of 'edge' or 'corner' is required");
  return c;
}

json constraint_to_json(const ConstraintSpec& c) {
  json j;
  switch (c.type) {
    case ConstraintType::clamp: j["type"] = "clamp"; break;
    case ConstraintType::simple_support: j["type"] = "simple_support"; break;
    case ConstraintType::symmetry:
      j["type"] = "symmetry";
      j["normal"] = axes_string(c.axes);
      break;
    case ConstraintType::rigid_diaphragm:
      j["type"] = "rigid_diaphragm";
      j["plane"] = axes_string(c.axes);
      break;
    case ConstraintType::fix: {
      j["type"] = "fix";
      json dofs = json::array();
      for (Slot s : c.slots) dofs.push_back(to_string(s));
      j["dofs"] = dofs;
      j["value"] = c.value;
      break;
    }
  }
  if (c.edge) j["edge"] = to_string(*c.edge);
  if (c.corner) j["corner"] = {(*c.corner)[0], (*c.corner)[1]};
  return j;
}

LoadSpec parse_load(const json& j, const std::string& where) {
  LoadSpec l;
  const std::string type = require(j, "type", where).get<std::string>();
  l.magnitude = number(require(j, "magnitude", where), where + ".magnitude");
  const json& dir = require(j, "direction", where);
  if (type == "pressure") {
    l.type = LoadType::pressure;
  } else if (type == "point") {
    l.type = LoadType::point;
    const auto at = number_list(require(j, "at", where), where + ".at");
    if (at.size() != 2) fail(where, "'at' must be [xi, eta]");
    l.at = {at[0], at[1]};
  } else {
    fail(where, "unknown load type '" + type + "'");
  }
  if (dir.is_string()) {
    if (dir.get<std::string>() != "normal" || l.type != LoadType::pressure) {
      fail(where, "only pressure loads accept direction \"normal\"");
    }
    l.along_normal = true;
  } else {
    l.direction = vec3(dir, where + ".direction");
  }
  return l;
}

json load_to_json(const LoadSpec& l) {
  json j;
  j["type"] = l.type == LoadType::pressure ? "pressure" : "point";
  j["magnitude"] = l.magnitude;
  if (l.along_normal) {
    j["direction"] = "normal";
  } else {
    j["direction"] = {l.direction.x(), l.direction.y(), l.direction.z()};
  }
  if (l.type == LoadType::point) j["at"] = {l.at[0], l.at[1]};
  return j;
}

MonitorSpec parse_monitor(const json& j, const std::string& where) {
  MonitorSpec m;
  const auto at = number_list(require(j, "at", where), where + ".at");
  if (at.size() != 2) fail(where, "'at' must be [xi, eta]");
  m.at = {at[0], at[1]};
  auto slot = slot_from_string(require(j, "dof", where).get<std::string>());
  if (!slot) fail(where, "unknown dof");
  m.dof = *slot;
  m.reference = number(require(j, "reference", where), where + ".reference");
  if (m.reference == 0.0) fail(where, "reference value must be nonzero");
  if (j.contains("secondary_reference")) {
    m.secondary_reference = number(j.at("secondary_reference"), where + ".secondary_reference");
  }
  return m;
}

}  // namespace

const char* to_string(Edge edge) { return kEdgeNames[static_cast<int>(edge)]; }
const char* to_string(Slot slot) { return kSlotNames[static_cast<int>(slot)]; }

std::optional<Edge> edge_from_string(const std::string& s) {
  for (int k = 0; k < 4; ++k) {
    if (s == kEdgeNames[k]) return static_cast<Edge>(k);
  }
  return std::nullopt;
}

std::optional<Slot> slot_from_string(const std::string& s) {
  for (int k = 0; k < 6; ++k) {
    if (s == kSlotNames[k]) return static_cast<Slot>(k);
  }
  return std::nullopt;
}

ModelConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    ModelConfig c;
    if (!doc.is_object()) fail("config", "top level must be an object");
    if (doc.contains("name")) c.name = doc.at("name").get<std::string>();
    const auto deg = number_list(require(doc, "degree", "config"), "degree");
    if (deg.size() != 2) fail("degree", "expected [p, q]");
    c.degree_xi = static_cast<int>(deg[0]);
    c.degree_eta = static_cast<int>(deg[1]);
    if (c.degree_xi != deg[0] || c.degree_eta != deg[1]) fail("degree", "degrees must be integers");
    c.knots_xi = number_list(require(doc, "knots_xi", "config"), "knots_xi");
    c.knots_eta = number_list(require(doc, "knots_eta", "config"), "knots_eta");
    const json& pts = require(doc, "points", "config");
    if (!pts.is_array()) fail("points", "expected an array of [x, y, z]");
    for (std::size_t k = 0; k < pts.size(); ++k) c.points.push_back(vec3(pts[k], "points[" + std::to_string(k) + "]"));
    c.weights = number_list(require(doc, "weights", "config"), "weights");
    c.thickness = number(require(doc, "thickness", "config"), "thickness");
    const json& mat = require(doc, "material", "config");
    c.material.E = number(require(mat, "E", "material"), "material.E");
    c.material.nu = number(require(mat, "nu", "material"), "material.nu");
    if (mat.contains("kappa")) c.material.kappa = number(mat.at("kappa"), "material.kappa");
    const std::string kind = require(doc, "kind", "config").get<std::string>();
    if (kind == "plate") {
      c.kind = ShellKind::plate;
    } else if (kind == "shell") {
      c.kind = ShellKind::shell;
    } else {
      fail("kind", "must be \"plate\" or \"shell\"");
    }
    if (doc.contains("bcs")) {
      const json& bcs = doc.at("bcs");
      for (std::size_t k = 0; k < bcs.size(); ++k) c.bcs.push_back(parse_constraint(bcs[k], "bcs[" + std::to_string(k) + "]"));
    }
    if (doc.contains("loads")) {
      const json& loads = doc.at("loads");
      for (std::size_t k = 0; k < loads.size(); ++k) c.loads.push_back(parse_load(loads[k], "loads[" + std::to_string(k) + "]"));
    }
    if (doc.contains("monitor")) c.monitor = parse_monitor(doc.at("monitor"), "monitor");
    return c;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config has a field of the wrong type: ") + e.what());
  }
}

ModelConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const ModelConfig& c) {
  json doc;
  doc["name"] = c.name;
  doc["degree"] = {c.degree_xi, c.degree_eta};
  doc["knots_xi"] = c.knots_xi;
  doc["knots_eta"] = c.knots_eta;
  json pts = json::array();
  for (const auto& p : c.points) pts.push_back({p.x(), p.y(), p.z()});
  doc["points"] = pts;
  doc["weights"] = c.weights;
  doc["thickness"] = c.thickness;
  doc["material"] = {{"E", c.material.E}, {"nu", c.material.nu}, {"kappa", c.material.kappa}};
  doc["kind"] = c.kind == ShellKind::plate ? "plate" : "shell";
  json bcs = json::array();
  for (const auto& b : c.bcs) bcs.push_back(constraint_to_json(b));
  doc["bcs"] = bcs;
  json loads = json::array();
  for (const auto& l : c.loads) loads.push_back(load_to_json(l));
  doc["loads"] = loads;
  if (c.monitor) {
    json m;
    m["at"] = {c.monitor->at[0], c.monitor->at[1]};
    m["dof"] = to_string(c.monitor->dof);
    m["reference"] = c.monitor->reference;
    if (c.monitor->secondary_reference) m["secondary_reference"] = *c.monitor->secondary_reference;
    doc["monitor"] = m;
  }
  return doc.dump(2) + "\n";
}

void write_config_file(const ModelConfig& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write config file '" + path + "'");
  out << serialize_config(config);
}

LoadedModel load_model(const ModelConfig& c) {
  try {
    ControlNet net;
    net.n = static_cast<int>(c.knots_xi.size()) - c.degree_xi - 1;
    net.m = static_cast<int>(c.knots_eta.size()) - c.degree_eta - 1;
    net.points = c.points;
    net.weights = c.weights;
    ShellModel model(KnotVector(c.degree_xi, c.knots_xi), KnotVector(c.degree_eta, c.knots_eta), std::move(net),
                     c.thickness, c.material, c.kind);
    for (const auto& l : c.loads) {
      if (l.type == LoadType::point && (l.at[0] < model.basis().xi().front() || l.at[0] > model.basis().xi().back() ||
                                        l.at[1] < model.basis().eta().front() || l.at[1] > model.basis().eta().back())) {
        throw ConfigError("point load location outside the parametric domain");
      }
      if (!l.along_normal && l.direction.norm() == 0.0) throw ConfigError("load direction must be nonzero");
    }
    if (c.kind == ShellKind::plate) {
      for (const auto& b : c.bcs) {
        for (Slot s : b.slots) {
          if (s == Slot::rz) throw ConfigError("plates carry no drilling rotation 'rz'");
        }
      }
    }
    return LoadedModel{std::move(model), c.bcs, c.loads, c.monitor};
  } catch (const ArgumentError& e) {
    throw ConfigError(std::string("invalid model: ") + e.what());
  } catch (const GeometryError& e) {
    throw ConfigError(std::string("invalid geometry: ") + e.what());
  }
}

LoadedModel load_model(const std::string& json_text) { return load_model(parse_config(json_text)); }

ModelConfig make_config(const std::string& name, const ShellModel& model, std::vector<ConstraintSpec> bcs,
                        std::vector<LoadSpec> loads, std::optional<MonitorSpec> monitor) {
  ModelConfig c;
  c.name = name;
  c.degree_xi = model.degree_xi();
  c.degree_eta = model.degree_eta();
  c.knots_xi = model.basis().xi().knots();
  c.knots_eta = model.basis().eta().knots();
  c.points = model.net().points;
  c.weights = model.net().weights;
  c.thickness = model.thickness();
  c.material = model.material();
  c.kind = model.kind();
  c.bcs = std::move(bcs);
  c.loads = std::move(loads);
  c.monitor = std::move(monitor);
  return c;
}

}  // namespace shellbar
