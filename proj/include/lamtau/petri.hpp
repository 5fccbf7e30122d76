#pragma once

// Structural Petri-net view of a system model. Only the static part is kept:
// places, transitions and arcs. Component places map 1:1 to components; each
// gate contributes an output place, with one transition consuming all child
// places (AND) or one transition per child place (OR).

#include "lamtau/model.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lamtau {

struct PetriNet {
  struct Place {
    std::string label;
    int component = -1;  // index into the source model, -1 for event places

    bool is_component() const { return component >= 0; }
  };

  /// Arcs of one transition: consumes every input place, feeds one output.
  struct Transition {
    std::string label;
    std::vector<std::size_t> inputs;
    std::size_t output = 0;
  };

  std::vector<Place> places;
  std::vector<Transition> transitions;
  std::size_t top_place = 0;

  /// Transitions whose output arc feeds the given place.
  std::vector<std::size_t> feeders(std::size_t place) const {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < transitions.size(); ++t)
      if (transitions[t].output == place) out.push_back(t);
    return out;
  }
};

namespace detail {

inline std::size_t build_net(const Node& n, const SystemModel& m, PetriNet& net,
                             std::size_t& next_event) {
  if (n.is_leaf()) return m.component_index(n.ref);
  std::vector<std::size_t> child_places;
  child_places.reserve(n.children.size());
  for (const Node& c : n.children) child_places.push_back(build_net(c, m, net, next_event));

  const std::size_t out = net.places.size();
  net.places.push_back({"E" + std::to_string(++next_event), -1});
  if (n.gate == GateKind::And) {
    net.transitions.push_back(
        {"t" + std::to_string(net.transitions.size() + 1), child_places, out});
  } else {
    for (std::size_t p : child_places)
      net.transitions.push_back({"t" + std::to_string(net.transitions.size() + 1), {p}, out});
  }
  return out;
}

}  // namespace detail

/// Structure-preserving translation of the gate tree. The top event place is
/// the only place with no outgoing arc.
inline PetriNet to_petri_net(const SystemModel& m) {
  PetriNet net;
  net.places.reserve(m.components().size());
  for (std::size_t i = 0; i < m.components().size(); ++i)
    net.places.push_back({m.components()[i].id, static_cast<int>(i)});
  std::size_t next_event = 0;
  net.top_place = detail::build_net(m.top(), m, net, next_event);
  // A bare-leaf system keeps the component label on its top place.
  if (!net.places[net.top_place].is_component()) net.places[net.top_place].label = "TOP";
  return net;
}

}  // namespace lamtau
