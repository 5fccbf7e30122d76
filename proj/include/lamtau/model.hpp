#pragma once

// System definition: components with failure/repair data and the AND/OR
// gate tree over them, parsed from and serialized to the JSON model format.

#include <json.hpp>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lamtau {

/// Raised for malformed or inconsistent model files; the message carries the
/// JSON path of the offending element.
struct ModelError : std::runtime_error {
  explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A basic event: constant failure rate (failures/hour) and mean repair
/// time (hours).
struct Component {
  std::string id;
  double lambda = 0.0;
  double tau = 0.0;
};

enum class GateKind { And, Or };

inline const char* to_string(GateKind k) { return k == GateKind::And ? "AND" : "OR"; }

/// One node of the gate tree: either a leaf referencing a component by id,
/// or a gate with a nonempty child list. Arity-1 gates act as identity.
struct Node {
  std::string ref;  // nonempty exactly for leaves
  GateKind gate = GateKind::And;
  std::vector<Node> children;

  bool is_leaf() const { return !ref.empty(); }

  static Node leaf(std::string id) {
    Node n;
    n.ref = std::move(id);
    return n;
  }
  static Node make(GateKind kind, std::vector<Node> children) {
    Node n;
    n.gate = kind;
    n.children = std::move(children);
    return n;
  }

  friend bool operator==(const Node& a, const Node& b) {
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return a.ref == b.ref;
    return a.gate == b.gate && a.children == b.children;
  }
};

/// A validated system model: every reference resolves, ids are unique,
/// rates are positive, and every declared component is reachable from top.
class SystemModel {
 public:
  SystemModel(std::vector<Component> components, Node top)
      : components_(std::move(components)), top_(std::move(top)) {
    for (std::size_t i = 0; i < components_.size(); ++i) {
      const Component& c = components_[i];
      if (c.id.empty()) throw ModelError("component #" + std::to_string(i) + ": empty id");
      if (!(c.lambda > 0.0))
        throw ModelError("component '" + c.id + "': lambda must be > 0");
      if (!(c.tau > 0.0)) throw ModelError("component '" + c.id + "': tau must be > 0");
      if (!index_.emplace(c.id, i).second)
        throw ModelError("duplicate component id '" + c.id + "'");
    }
    std::vector<bool> seen(components_.size(), false);
    validate_node(top_, "system", seen);
    for (std::size_t i = 0; i < components_.size(); ++i)
      if (!seen[i])
        throw ModelError("component '" + components_[i].id +
                         "' is not reachable from the system tree");
  }

  const std::vector<Component>& components() const { return components_; }
  const Node& top() const { return top_; }

  bool has_component(const std::string& id) const { return index_.count(id) != 0; }

  std::size_t component_index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ModelError("unknown component id '" + id + "'");
    return it->second;
  }

  const Component& component(const std::string& id) const {
    return components_[component_index(id)];
  }

  friend bool operator==(const SystemModel& a, const SystemModel& b) {
    if (a.components_.size() != b.components_.size()) return false;
    for (std::size_t i = 0; i < a.components_.size(); ++i) {
      const Component &x = a.components_[i], &y = b.components_[i];
      if (x.id != y.id || x.lambda != y.lambda || x.tau != y.tau) return false;
    }
    return a.top_ == b.top_;
  }

 private:
  void validate_node(const Node& n, const std::string& path, std::vector<bool>& seen) const {
    if (n.is_leaf()) {
      auto it = index_.find(n.ref);
      if (it == index_.end())
        throw ModelError(path + ": reference to undeclared component '" + n.ref + "'");
      seen[it->second] = true;
      return;
    }
    if (n.children.empty()) throw ModelError(path + ": gate has no children");
    for (std::size_t i = 0; i < n.children.size(); ++i)
      validate_node(n.children[i], path + "/children/" + std::to_string(i), seen);
  }

  std::vector<Component> components_;
  Node top_;
  std::map<std::string, std::size_t> index_;
};

namespace detail {

inline Node node_from_json(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object()) throw ModelError(path + ": node must be a JSON object");
  if (j.contains("ref")) {
    if (!j["ref"].is_string()) throw ModelError(path + "/ref: must be a string");
    return Node::leaf(j["ref"].get<std::string>());
  }
  if (!j.contains("gate")) throw ModelError(path + ": node needs either 'ref' or 'gate'");
  const std::string kind = j["gate"].is_string() ? j["gate"].get<std::string>() : "";
  GateKind gate;
  if (kind == "AND")
    gate = GateKind::And;
  else if (kind == "OR")
    gate = GateKind::Or;
  else
    throw ModelError(path + "/gate: expected \"AND\" or \"OR\"");
  if (!j.contains("children") || !j["children"].is_array() || j["children"].empty())
    throw ModelError(path + "/children: gate needs a nonempty child array");
  std::vector<Node> children;
  for (std::size_t i = 0; i < j["children"].size(); ++i)
    children.push_back(
        node_from_json(j["children"][i], path + "/children/" + std::to_string(i)));
  return Node::make(gate, std::move(children));
}

inline nlohmann::json node_to_json(const Node& n) {
  nlohmann::json j;
  if (n.is_leaf()) {
    j["ref"] = n.ref;
    return j;
  }
  j["gate"] = to_string(n.gate);
  auto& arr = j["children"] = nlohmann::json::array();
  for (const Node& c : n.children) arr.push_back(node_to_json(c));
  return j;
}

}  // namespace detail

/// Parses and validates a model file. The format is a JSON object with
/// "components" (list of {id, lambda, tau}) and "system" (recursive node:
/// {"ref": id} or {"gate": "AND"|"OR", "children": [...]}).
inline SystemModel parse_model(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ModelError("model file must be a JSON object");
  if (!j.contains("components") || !j["components"].is_array())
    throw ModelError("/components: required array is missing");
  if (!j.contains("system")) throw ModelError("/system: required node is missing");

  std::vector<Component> components;
  for (std::size_t i = 0; i < j["components"].size(); ++i) {
    const auto& cj = j["components"][i];
    const std::string path = "/components/" + std::to_string(i);
    if (!cj.is_object() || !cj.contains("id") || !cj.contains("lambda") || !cj.contains("tau"))
      throw ModelError(path + ": component needs id, lambda and tau");
    if (!cj["id"].is_string()) throw ModelError(path + "/id: must be a string");
    if (!cj["lambda"].is_number()) throw ModelError(path + "/lambda: must be a number");
    if (!cj["tau"].is_number()) throw ModelError(path + "/tau: must be a number");
    components.push_back({cj["id"].get<std::string>(), cj["lambda"].get<double>(),
                          cj["tau"].get<double>()});
  }
  Node top = detail::node_from_json(j["system"], "/system");
  return SystemModel(std::move(components), std::move(top));
}

/// Serializes a model back to the file format; parse(serialize(m)) == m.
inline std::string serialize_model(const SystemModel& m, int indent = 2) {
  nlohmann::json j;
  auto& comps = j["components"] = nlohmann::json::array();
  for (const Component& c : m.components())
    comps.push_back({{"id", c.id}, {"lambda", c.lambda}, {"tau", c.tau}});
  j["system"] = detail::node_to_json(m.top());
  return j.dump(indent) + "\n";
}

}  // namespace lamtau
