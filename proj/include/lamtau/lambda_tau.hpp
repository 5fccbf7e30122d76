#pragma once

// Lambda-tau gate expressions and the bottom-up reduction of a gate tree to
// system-level (lambda_s, tau_s), in crisp and fuzzy (alpha-cut) form.
//
//   AND:  lambda = prod(lambda_j) * sum_i prod_{j != i} tau_j
//         tau    = prod(tau_i) / sum_j prod_{i != j} tau_i
//   OR:   lambda = sum(lambda_i)
//         tau    = sum(lambda_i tau_i) / sum(lambda_i)

#include "lamtau/fuzzy.hpp"
#include "lamtau/model.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lamtau {

namespace detail {

inline void check_rates(std::span<const double> xs, const char* what) {
  require(!xs.empty(), std::string(what) + ": empty input");
  for (double x : xs) require(finite(x) && x > 0.0, std::string(what) + ": inputs must be > 0");
}

}  // namespace detail

inline double lambda_and(std::span<const double> lambdas, std::span<const double> taus) {
  detail::check_rates(lambdas, "lambda_and");
  detail::check_rates(taus, "lambda_and");
  detail::require(lambdas.size() == taus.size(), "lambda_and: length mismatch");
  double prod = 1.0;
  for (double l : lambdas) prod *= l;
  double bracket = 0.0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    double p = 1.0;
    for (std::size_t j = 0; j < taus.size(); ++j)
      if (j != i) p *= taus[j];
    bracket += p;
  }
  return prod * bracket;
}

inline double tau_and(std::span<const double> taus) {
  detail::check_rates(taus, "tau_and");
  double prod = 1.0;
  for (double t : taus) prod *= t;
  double denom = 0.0;
  for (std::size_t j = 0; j < taus.size(); ++j) {
    double p = 1.0;
    for (std::size_t i = 0; i < taus.size(); ++i)
      if (i != j) p *= taus[i];
    denom += p;
  }
  return prod / denom;
}

inline double lambda_or(std::span<const double> lambdas) {
  detail::check_rates(lambdas, "lambda_or");
  double sum = 0.0;
  for (double l : lambdas) sum += l;
  return sum;
}

inline double tau_or(std::span<const double> lambdas, std::span<const double> taus) {
  detail::check_rates(lambdas, "tau_or");
  detail::check_rates(taus, "tau_or");
  detail::require(lambdas.size() == taus.size(), "tau_or: length mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    num += lambdas[i] * taus[i];
    den += lambdas[i];
  }
  return num / den;
}

/// System-level failure rate (per hour), mean repair time (hours) and repair
/// rate mu = 1/tau.
struct SystemRates {
  double lambda_s = 0.0;
  double tau_s = 0.0;
  double mu_s = 0.0;

  SystemRates(double lambda, double tau) : lambda_s(lambda), tau_s(tau), mu_s(1.0 / tau) {
    detail::require(detail::finite(lambda) && lambda > 0.0, "lambda_s must be > 0");
    detail::require(detail::finite(tau) && tau > 0.0, "tau_s must be > 0");
  }
};

/// Fuzzy system rates as alpha-cut profiles on a shared grid, strictly
/// positive everywhere.
struct FuzzySystemRates {
  FuzzyProfile lambda_s;
  FuzzyProfile tau_s;

  FuzzySystemRates(FuzzyProfile lambda, FuzzyProfile tau)
      : lambda_s(std::move(lambda)), tau_s(std::move(tau)) {
    detail::require(lambda_s.same_grid(tau_s), "fuzzy system rates need a shared alpha grid");
    detail::require(lambda_s.support().lo > 0.0 && tau_s.support().lo > 0.0,
                    "fuzzy system rates must be strictly positive");
  }
};

/// How interval gate formulas are evaluated. naive applies interval
/// arithmetic to the expressions as written (repeated variables widen the
/// result); vertex evaluates the crisp formulas at every endpoint
/// combination of the child (lambda, tau) intervals and takes min/max.
enum class FuzzyMode { naive, vertex };

inline const char* to_string(FuzzyMode m) { return m == FuzzyMode::naive ? "naive" : "vertex"; }

namespace detail {

struct IntervalRates {
  Interval lambda;
  Interval tau;
};

inline IntervalRates combine_naive(GateKind kind, const std::vector<IntervalRates>& ch) {
  const std::size_t n = ch.size();
  if (kind == GateKind::And) {
    Interval prod{1.0, 1.0};
    for (const IntervalRates& c : ch) prod = prod * c.lambda;
    Interval bracket{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      Interval p{1.0, 1.0};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) p = p * ch[j].tau;
      bracket = bracket + p;
    }
    Interval tau_prod{1.0, 1.0};
    for (const IntervalRates& c : ch) tau_prod = tau_prod * c.tau;
    Interval denom{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      Interval p{1.0, 1.0};
      for (std::size_t i = 0; i < n; ++i)
        if (i != j) p = p * ch[i].tau;
      denom = denom + p;
    }
    return {prod * bracket, tau_prod / denom};
  }
  Interval lam{0.0, 0.0}, num{0.0, 0.0};
  for (const IntervalRates& c : ch) {
    lam = lam + c.lambda;
    num = num + c.lambda * c.tau;
  }
  return {lam, num / lam};
}

inline IntervalRates combine_vertex(GateKind kind, const std::vector<IntervalRates>& ch) {
  const std::size_t n = ch.size();
  require(2 * n <= 20, "vertex mode supports gate arity up to 10");
  std::vector<double> lam(n), tau(n);
  double lam_lo = 0.0, lam_hi = 0.0, tau_lo = 0.0, tau_hi = 0.0;
  const std::uint64_t combos = std::uint64_t{1} << (2 * n);
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    for (std::size_t j = 0; j < n; ++j) {
      lam[j] = (mask >> j) & 1 ? ch[j].lambda.hi : ch[j].lambda.lo;
      tau[j] = (mask >> (n + j)) & 1 ? ch[j].tau.hi : ch[j].tau.lo;
    }
    double l, t;
    if (kind == GateKind::And) {
      l = lambda_and(lam, tau);
      t = tau_and(tau);
    } else {
      l = lambda_or(lam);
      t = tau_or(lam, tau);
    }
    if (mask == 0) {
      lam_lo = lam_hi = l;
      tau_lo = tau_hi = t;
    } else {
      lam_lo = std::min(lam_lo, l);
      lam_hi = std::max(lam_hi, l);
      tau_lo = std::min(tau_lo, t);
      tau_hi = std::max(tau_hi, t);
    }
  }
  return {{lam_lo, lam_hi}, {tau_lo, tau_hi}};
}

struct LeafTfns {
  TriangularFuzzyNumber lambda;
  TriangularFuzzyNumber tau;
};

inline IntervalRates reduce_cut(const Node& n, const SystemModel& m,
                                const std::vector<LeafTfns>& leafs, double alpha,
                                FuzzyMode mode) {
  if (n.is_leaf()) {
    const LeafTfns& lt = leafs[m.component_index(n.ref)];
    return {lt.lambda.alpha_cut(alpha), lt.tau.alpha_cut(alpha)};
  }
  std::vector<IntervalRates> ch;
  ch.reserve(n.children.size());
  for (const Node& c : n.children) ch.push_back(reduce_cut(c, m, leafs, alpha, mode));
  if (ch.size() == 1) return ch.front();  // arity-1 gate is identity
  return mode == FuzzyMode::naive ? combine_naive(n.gate, ch) : combine_vertex(n.gate, ch);
}

inline std::pair<double, double> reduce_crisp_node(const Node& n, const SystemModel& m) {
  if (n.is_leaf()) {
    const Component& c = m.component(n.ref);
    return {c.lambda, c.tau};
  }
  std::vector<double> lam, tau;
  lam.reserve(n.children.size());
  tau.reserve(n.children.size());
  for (const Node& c : n.children) {
    auto [l, t] = reduce_crisp_node(c, m);
    lam.push_back(l);
    tau.push_back(t);
  }
  if (lam.size() == 1) return {lam.front(), tau.front()};
  if (n.gate == GateKind::And) return {lambda_and(lam, tau), tau_and(tau)};
  return {lambda_or(lam), tau_or(lam, tau)};
}

}  // namespace detail

/// Bottom-up crisp reduction of the gate tree to system rates.
inline SystemRates reduce_crisp(const SystemModel& m) {
  auto [lambda, tau] = detail::reduce_crisp_node(m.top(), m);
  return SystemRates(lambda, tau);
}

/// Fuzzifies every leaf with the given spread and propagates alpha-cut
/// intervals through the gate tree on a uniform alpha grid. At alpha = 1
/// both modes coincide with reduce_crisp.
inline FuzzySystemRates reduce_fuzzy(const SystemModel& m, const SpreadSpec& spread,
                                     int alpha_levels = 101,
                                     FuzzyMode mode = FuzzyMode::naive) {
  std::vector<detail::LeafTfns> leafs;
  leafs.reserve(m.components().size());
  for (const Component& c : m.components())
    leafs.push_back({tfn_from_spread(c.lambda, spread), tfn_from_spread(c.tau, spread)});

  std::vector<AlphaCut> lam_levels, tau_levels;
  for (double alpha : uniform_alpha_grid(alpha_levels)) {
    const detail::IntervalRates r = detail::reduce_cut(m.top(), m, leafs, alpha, mode);
    lam_levels.push_back({alpha, r.lambda});
    tau_levels.push_back({alpha, r.tau});
  }
  return FuzzySystemRates(FuzzyProfile(std::move(lam_levels)),
                          FuzzyProfile(std::move(tau_levels)));
}

}  // namespace lamtau
