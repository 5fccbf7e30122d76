#include "lamtau/cutsets.hpp"

#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace lamtau;
using lamtau_test::dual_model;
using lamtau_test::TreeGen;

namespace {

SystemModel robot() {
  return parse_model(R"({
    "components": [
      {"id": "S1", "lambda": 0.000182, "tau": 3},
      {"id": "M1", "lambda": 0.0092, "tau": 5},
      {"id": "S2", "lambda": 0.000182, "tau": 3},
      {"id": "M2", "lambda": 0.0092, "tau": 5}
    ],
    "system": {"gate": "OR", "children": [
      {"gate": "OR", "children": [{"ref": "S1"}, {"ref": "M1"}]},
      {"gate": "OR", "children": [{"ref": "S2"}, {"ref": "M2"}]}
    ]}
  })");
}

SystemModel two_leaf(GateKind kind) {
  Node top = Node::make(kind, {Node::leaf("a"), Node::leaf("b")});
  return SystemModel({{"a", 0.1, 1.0}, {"b", 0.2, 2.0}}, std::move(top));
}

bool is_antichain(const CutSetFamily& f) {
  for (std::size_t i = 0; i < f.sets.size(); ++i)
    for (std::size_t j = 0; j < f.sets.size(); ++j) {
      if (i == j) continue;
      const std::set<std::string> a(f.sets[i].begin(), f.sets[i].end());
      const std::set<std::string> b(f.sets[j].begin(), f.sets[j].end());
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
    }
  return true;
}

bool canonical_order(const CutSetFamily& f) {
  for (std::size_t i = 1; i < f.sets.size(); ++i) {
    const auto& a = f.sets[i - 1];
    const auto& b = f.sets[i];
    if (a.size() != b.size() ? a.size() > b.size() : a >= b) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("robot cut sets are the four singletons") {
  const CutSetFamily cuts = minimal_cut_sets(to_petri_net(robot()));
  REQUIRE(cuts.kind == CutSetFamily::Kind::cut);
  REQUIRE(cuts.sets ==
          std::vector<std::vector<std::string>>{{"M1"}, {"M2"}, {"S1"}, {"S2"}});
  REQUIRE(brute_force_cut_sets(robot()).sets == cuts.sets);
}

TEST_CASE("robot path set is the full series chain") {
  const CutSetFamily paths = minimal_path_sets(to_petri_net(robot()));
  REQUIRE(paths.kind == CutSetFamily::Kind::path);
  REQUIRE(paths.sets == std::vector<std::vector<std::string>>{{"M1", "M2", "S1", "S2"}});
}

TEST_CASE("small gates expand as expected") {
  REQUIRE(minimal_cut_sets(to_petri_net(two_leaf(GateKind::And))).sets ==
          std::vector<std::vector<std::string>>{{"a", "b"}});
  REQUIRE(minimal_path_sets(to_petri_net(two_leaf(GateKind::And))).sets ==
          std::vector<std::vector<std::string>>{{"a"}, {"b"}});
  REQUIRE(minimal_path_sets(to_petri_net(two_leaf(GateKind::Or))).sets ==
          std::vector<std::vector<std::string>>{{"a", "b"}});
}

TEST_CASE("absorption keeps only the minimal sets") {
  // OR(AND(a,b), AND(a,c), a) collapses to {a}
  Node top = Node::make(GateKind::Or,
                        {Node::make(GateKind::And, {Node::leaf("a"), Node::leaf("b")}),
                         Node::make(GateKind::And, {Node::leaf("a"), Node::leaf("c")}),
                         Node::leaf("a")});
  const SystemModel m({{"a", 0.1, 1.0}, {"b", 0.1, 1.0}, {"c", 0.1, 1.0}}, std::move(top));
  const CutSetFamily expansion = minimal_cut_sets(to_petri_net(m));
  REQUIRE(expansion.sets == std::vector<std::vector<std::string>>{{"a"}});
  REQUIRE(brute_force_cut_sets(m).sets == expansion.sets);
}

TEST_CASE("top event evaluation") {
  const SystemModel m = robot();
  REQUIRE(top_event_state(m, {"S1"}));
  REQUIRE_FALSE(top_event_state(m, {}));
  REQUIRE_FALSE(top_event_state(two_leaf(GateKind::And), {"a"}));
  REQUIRE(top_event_state(two_leaf(GateKind::And), {"a", "b"}));
  REQUIRE_THROWS_AS(top_event_state(m, {"nope"}), ModelError);
}

TEST_CASE("brute force handles the trivial cases") {
  const SystemModel single({{"leaf", 0.1, 1.0}}, Node::leaf("leaf"));
  REQUIRE(brute_force_cut_sets(single).sets == std::vector<std::vector<std::string>>{{"leaf"}});

  Node top = Node::make(GateKind::Or,
                        {Node::make(GateKind::And, {Node::leaf("a"), Node::leaf("b")}),
                         Node::make(GateKind::And, {Node::leaf("c"), Node::leaf("d")})});
  const SystemModel m(
      {{"a", 0.1, 1.0}, {"b", 0.1, 1.0}, {"c", 0.1, 1.0}, {"d", 0.1, 1.0}}, std::move(top));
  REQUIRE(brute_force_cut_sets(m).sets ==
          std::vector<std::vector<std::string>>{{"a", "b"}, {"c", "d"}});
}

TEST_CASE("brute force rejects oversized models") {
  std::vector<Component> comps;
  std::vector<Node> leaves;
  for (int i = 0; i < 21; ++i) {
    comps.push_back({"c" + std::to_string(i), 0.1, 1.0});
    leaves.push_back(Node::leaf(comps.back().id));
  }
  const SystemModel m(std::move(comps), Node::make(GateKind::Or, std::move(leaves)));
  REQUIRE_THROWS_AS(brute_force_cut_sets(m), std::invalid_argument);
}

TEST_CASE("matrix expansion equals brute force on random trees") {
  TreeGen gen(101);
  for (int i = 0; i < 100; ++i) {
    const SystemModel m = gen.random_model(12);
    const PetriNet net = to_petri_net(m);
    const CutSetFamily expansion = minimal_cut_sets(net);
    const CutSetFamily oracle = brute_force_cut_sets(m);
    REQUIRE(expansion.sets == oracle.sets);
    REQUIRE(is_antichain(expansion));
    REQUIRE(canonical_order(expansion));

    // duality: path sets are the cut sets of the AND/OR-swapped tree
    const CutSetFamily paths = minimal_path_sets(net);
    REQUIRE(paths.sets == brute_force_cut_sets(dual_model(m)).sets);
    REQUIRE(is_antichain(paths));
    REQUIRE(canonical_order(paths));

    // soundness and minimality witness for every reported cut set
    for (const auto& set : expansion.sets) {
      std::set<std::string> failed(set.begin(), set.end());
      REQUIRE(top_event_state(m, failed));
      for (const std::string& id : set) {
        std::set<std::string> reduced = failed;
        reduced.erase(id);
        REQUIRE_FALSE(top_event_state(m, reduced));
      }
    }
  }
}
