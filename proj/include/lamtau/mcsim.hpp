#pragma once

// Monte Carlo oracle: alternating exponential up/down processes per
// component, merged into the system state through the gate tree. Every
// (trial, component) pair owns an independent counter-based random stream,
// so results do not depend on evaluation order and are reproducible from
// the seed alone.

#include "lamtau/cutsets.hpp"
#include "lamtau/fuzzy.hpp"
#include "lamtau/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lamtau {

/// Counter-based splittable PRNG: a Weyl counter pushed through a 64-bit
/// finalizer, keyed by (seed, trial, component).
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t component)
      : key_(mix(seed ^ mix(trial + 0x9E3779B97F4A7C15ull) ^
                 mix(component + 0xD1B54A32D192ED03ull))) {}

  std::uint64_t next_u64() {
    counter_ += 0x9E3779B97F4A7C15ull;
    return mix(key_ ^ counter_);
  }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Exponential variate with the given rate, by inverse CDF.
  double next_exponential(double rate) { return -std::log1p(-next_unit()) / rate; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

struct SimConfig {
  std::uint64_t trials = 0;
  double horizon = 0.0;  // hours
  std::uint64_t seed = 0;

  SimConfig(std::uint64_t trials_, double horizon_, std::uint64_t seed_)
      : trials(trials_), horizon(horizon_), seed(seed_) {
    detail::require(trials >= 1, "simulation needs at least one trial");
    detail::require(detail::finite(horizon) && horizon > 0.0, "horizon must be > 0");
  }
};

/// Point estimates with standard errors. Availability and reliability carry
/// binomial standard errors, the failure count a sample standard error.
struct SimEstimate {
  double availability = 0.0;
  double availability_se = 0.0;
  double reliability = 0.0;
  double reliability_se = 0.0;
  double expected_failures = 0.0;
  double expected_failures_se = 0.0;
};

namespace detail {

struct TrialOutcome {
  bool up_at_horizon = true;
  bool any_failure = false;
  double failures = 0.0;
};

inline SimEstimate aggregate(const std::vector<TrialOutcome>& outcomes) {
  const double n = static_cast<double>(outcomes.size());
  double up = 0.0, zero_fail = 0.0, fail_sum = 0.0, fail_sq = 0.0;
  for (const TrialOutcome& o : outcomes) {
    up += o.up_at_horizon ? 1.0 : 0.0;
    zero_fail += o.any_failure ? 0.0 : 1.0;
    fail_sum += o.failures;
    fail_sq += o.failures * o.failures;
  }
  SimEstimate e;
  e.availability = up / n;
  e.reliability = zero_fail / n;
  e.expected_failures = fail_sum / n;
  e.availability_se = std::sqrt(e.availability * (1.0 - e.availability) / n);
  e.reliability_se = std::sqrt(e.reliability * (1.0 - e.reliability) / n);
  if (outcomes.size() > 1) {
    const double var =
        std::max(0.0, (fail_sq - n * e.expected_failures * e.expected_failures) / (n - 1.0));
    e.expected_failures_se = std::sqrt(var / n);
  }
  return e;
}

struct ComponentEvent {
  double time = 0.0;
  std::uint32_t component = 0;
  bool fails = true;  // up -> down when true, repair otherwise
};

/// Alternating Exp(lambda) up / Exp(1/tau) down transitions in (0, horizon),
/// starting up at t = 0.
inline void component_timeline(double lambda, double tau, double horizon, CounterRng& rng,
                               std::uint32_t component, std::vector<ComponentEvent>& out) {
  double t = 0.0;
  bool up = true;
  while (true) {
    const double dwell = rng.next_exponential(up ? lambda : 1.0 / tau);
    t += dwell;
    if (t >= horizon) return;
    up = !up;
    out.push_back({t, component, !up});
  }
}

}  // namespace detail

/// Simulates a single repairable component. Availability is the fraction of
/// trials up at the horizon, reliability the fraction with no failure before
/// it, expected failures the mean failure count.
inline SimEstimate simulate_component(double lambda, double tau, const SimConfig& cfg) {
  detail::require(detail::finite(lambda) && lambda > 0.0, "lambda must be > 0");
  detail::require(detail::finite(tau) && tau > 0.0, "tau must be > 0");
  std::vector<detail::TrialOutcome> outcomes(cfg.trials);
  std::vector<detail::ComponentEvent> events;
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    events.clear();
    CounterRng rng(cfg.seed, trial, 0);
    detail::component_timeline(lambda, tau, cfg.horizon, rng, 0, events);
    detail::TrialOutcome& o = outcomes[trial];
    for (const detail::ComponentEvent& e : events) {
      if (e.fails) {
        o.any_failure = true;
        o.failures += 1.0;
      }
      o.up_at_horizon = !e.fails;
    }
  }
  return detail::aggregate(outcomes);
}

/// Simulates the whole system: components evolve independently and the
/// system state at any instant is the top event over the currently failed
/// set. Failure count is the number of system up -> down transitions.
inline SimEstimate simulate_system(const SystemModel& m, const SimConfig& cfg) {
  const std::size_t n = m.components().size();
  detail::require(n <= 64, "simulate_system supports at most 64 components");
  std::vector<detail::TrialOutcome> outcomes(cfg.trials);
  std::vector<detail::ComponentEvent> events;
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    events.clear();
    for (std::size_t c = 0; c < n; ++c) {
      CounterRng rng(cfg.seed, trial, c);
      detail::component_timeline(m.components()[c].lambda, m.components()[c].tau, cfg.horizon,
                                 rng, static_cast<std::uint32_t>(c), events);
    }
    std::sort(events.begin(), events.end(),
              [](const detail::ComponentEvent& a, const detail::ComponentEvent& b) {
                return a.time != b.time ? a.time < b.time : a.component < b.component;
              });
    std::uint64_t failed = 0;
    bool system_up = true;  // no gate fires on an empty failed set
    detail::TrialOutcome& o = outcomes[trial];
    for (const detail::ComponentEvent& e : events) {
      const std::uint64_t bit = std::uint64_t{1} << e.component;
      failed = e.fails ? (failed | bit) : (failed & ~bit);
      const bool now_up = !detail::eval_top(m.top(), m, failed);
      if (system_up && !now_up) {
        o.any_failure = true;
        o.failures += 1.0;
      }
      system_up = now_up;
    }
    o.up_at_horizon = system_up;
  }
  return detail::aggregate(outcomes);
}

}  // namespace lamtau
