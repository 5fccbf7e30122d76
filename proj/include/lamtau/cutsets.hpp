#pragma once

// Qualitative analysis: minimal cut and path sets from the structural Petri
// net. The expansion works top-down from the top place as a row matrix: an
// OR structure multiplies rows (alternatives), an AND structure concatenates
// within a row (conjuncts), and supersets are absorbed along the way.

#include "lamtau/model.hpp"
#include "lamtau/petri.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamtau {

/// An antichain of component-id sets in canonical order: by cardinality,
/// then lexicographically.
struct CutSetFamily {
  enum class Kind { cut, path };

  Kind kind = Kind::cut;
  std::vector<std::vector<std::string>> sets;

  friend bool operator==(const CutSetFamily& a, const CutSetFamily& b) {
    return a.kind == b.kind && a.sets == b.sets;
  }
};

namespace detail {

using Row = std::uint64_t;

/// Drops duplicate rows and any row that is a superset of another.
inline std::vector<Row> absorb(std::vector<Row> rows) {
  std::sort(rows.begin(), rows.end(), [](Row a, Row b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<Row> kept;
  for (Row r : rows) {
    bool subsumed = false;
    for (Row k : kept)
      if ((r & k) == k) {
        subsumed = true;
        break;
      }
    if (!subsumed) kept.push_back(r);
  }
  return kept;
}

inline std::vector<Row> cross(const std::vector<Row>& a, const std::vector<Row>& b) {
  std::vector<Row> out;
  out.reserve(a.size() * b.size());
  for (Row x : a)
    for (Row y : b) out.push_back(x | y);
  return absorb(std::move(out));
}

struct NetExpander {
  const PetriNet& net;
  bool dual = false;
  std::vector<std::vector<Row>> memo;
  std::vector<bool> done;

  explicit NetExpander(const PetriNet& n, bool dual_)
      : net(n), dual(dual_), memo(n.places.size()), done(n.places.size(), false) {}

  const std::vector<Row>& expand(std::size_t place) {
    if (done[place]) return memo[place];
    const PetriNet::Place& p = net.places[place];
    std::vector<Row> rows;
    if (p.is_component()) {
      rows = {Row{1} << p.component};
    } else if (!dual) {
      // Alternatives across feeding transitions, conjunction within one.
      for (std::size_t t : net.feeders(place)) {
        std::vector<Row> conj = {Row{0}};
        for (std::size_t q : net.transitions[t].inputs) conj = cross(conj, expand(q));
        rows.insert(rows.end(), conj.begin(), conj.end());
      }
      rows = absorb(std::move(rows));
    } else {
      // Dual structure: conjunction across transitions, alternatives within.
      rows = {Row{0}};
      for (std::size_t t : net.feeders(place)) {
        std::vector<Row> alt;
        for (std::size_t q : net.transitions[t].inputs) {
          const std::vector<Row>& sub = expand(q);
          alt.insert(alt.end(), sub.begin(), sub.end());
        }
        rows = cross(rows, absorb(std::move(alt)));
      }
    }
    memo[place] = std::move(rows);
    done[place] = true;
    return memo[place];
  }
};

inline CutSetFamily family_from_rows(const std::vector<Row>& rows, CutSetFamily::Kind kind,
                                     const std::vector<std::string>& ids) {
  CutSetFamily family;
  family.kind = kind;
  for (Row r : rows) {
    std::vector<std::string> set;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (r & (Row{1} << i)) set.push_back(ids[i]);
    std::sort(set.begin(), set.end());
    family.sets.push_back(std::move(set));
  }
  std::sort(family.sets.begin(), family.sets.end(),
            [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return family;
}

inline std::vector<std::string> component_ids(const PetriNet& net) {
  std::size_t n = 0;
  for (const PetriNet::Place& p : net.places)
    if (p.is_component()) ++n;
  if (n > 64) throw std::invalid_argument("cut-set expansion supports at most 64 components");
  std::vector<std::string> ids(n);
  for (const PetriNet::Place& p : net.places)
    if (p.is_component()) ids[static_cast<std::size_t>(p.component)] = p.label;
  return ids;
}

inline CutSetFamily expand_net(const PetriNet& net, bool dual, CutSetFamily::Kind kind) {
  const std::vector<std::string> ids = component_ids(net);
  NetExpander ex(net, dual);
  return family_from_rows(ex.expand(net.top_place), kind, ids);
}

}  // namespace detail

/// Minimal cut sets of the net by the matrix expansion above.
inline CutSetFamily minimal_cut_sets(const PetriNet& net) {
  return detail::expand_net(net, false, CutSetFamily::Kind::cut);
}

/// Minimal path sets: cut sets of the dual structure (AND and OR swapped).
inline CutSetFamily minimal_path_sets(const PetriNet& net) {
  return detail::expand_net(net, true, CutSetFamily::Kind::path);
}

namespace detail {

inline bool eval_top(const Node& n, const SystemModel& m, std::uint64_t failed) {
  if (n.is_leaf()) return failed & (std::uint64_t{1} << m.component_index(n.ref));
  if (n.gate == GateKind::And) {
    for (const Node& c : n.children)
      if (!eval_top(c, m, failed)) return false;
    return true;
  }
  for (const Node& c : n.children)
    if (eval_top(c, m, failed)) return true;
  return false;
}

}  // namespace detail

/// True iff the top event occurs when exactly the given components are
/// failed (AND = all children failed, OR = any child failed).
inline bool top_event_state(const SystemModel& m, const std::set<std::string>& failed) {
  std::uint64_t mask = 0;
  for (const std::string& id : failed) mask |= std::uint64_t{1} << m.component_index(id);
  return detail::eval_top(m.top(), m, mask);
}

/// Exhaustive oracle: enumerates every failure subset and keeps the minimal
/// ones that raise the top event. Independent of the matrix expansion.
inline CutSetFamily brute_force_cut_sets(const SystemModel& m) {
  const std::size_t n = m.components().size();
  if (n > 20)
    throw std::invalid_argument("brute_force_cut_sets is limited to 20 components");
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = m.components()[i].id;

  std::vector<detail::Row> minimal;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < end; ++s) {
    if (!detail::eval_top(m.top(), m, s)) continue;
    bool is_minimal = true;
    for (std::uint64_t bits = s; bits; bits &= bits - 1) {
      const std::uint64_t e = bits & (~bits + 1);
      if (detail::eval_top(m.top(), m, s ^ e)) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back(s);
  }
  return detail::family_from_rows(minimal, CutSetFamily::Kind::cut, ids);
}

}  // namespace lamtau
