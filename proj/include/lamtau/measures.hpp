#pragma once

// Reliability parameters of a repairable system with constant failure and
// repair rates, evaluated crisp, fuzzy (per alpha-cut) and defuzzified:
//
//   MTTF = 1/lambda          MTTR = tau = 1/mu        MTBF = MTTF + MTTR
//   R(t) = exp(-lambda t)
//   A(t) = mu/(lambda+mu) + lambda/(lambda+mu) exp(-(lambda+mu) t)
//   W(t) = lambda mu t/(lambda+mu) + lambda^2/(lambda+mu)^2 (1 - exp(-(lambda+mu) t))

#include "lamtau/fuzzy.hpp"
#include "lamtau/lambda_tau.hpp"
#include "lamtau/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lamtau {

struct MissionTime {
  double hours = 0.0;

  MissionTime() = default;
  explicit MissionTime(double t) : hours(t) {
    detail::require(detail::finite(t) && t >= 0.0, "mission time must be >= 0");
  }
};

inline double reliability_at(double lambda, double t) { return std::exp(-lambda * t); }

inline double availability_at(double lambda, double mu, double t) {
  const double s = lambda + mu;
  return mu / s + lambda / s * std::exp(-s * t);
}

inline double enof_at(double lambda, double mu, double t) {
  const double s = lambda + mu;
  return lambda * mu * t / s + lambda * lambda / (s * s) * (1.0 - std::exp(-s * t));
}

struct CrispMeasures {
  double failure_rate = 0.0;  // lambda_s, per hour
  double repair_time = 0.0;   // tau_s, hours
  double mttf = 0.0;
  double mttr = 0.0;
  double mtbf = 0.0;
  double reliability = 0.0;
  double availability = 0.0;
  double enof = 0.0;
};

inline CrispMeasures point_measures(const SystemRates& r, MissionTime t) {
  CrispMeasures m;
  m.failure_rate = r.lambda_s;
  m.repair_time = r.tau_s;
  m.mttf = 1.0 / r.lambda_s;
  m.mttr = r.tau_s;
  m.mtbf = m.mttf + m.mttr;
  m.reliability = reliability_at(r.lambda_s, t.hours);
  m.availability = availability_at(r.lambda_s, r.mu_s, t.hours);
  m.enof = enof_at(r.lambda_s, r.mu_s, t.hours);
  return m;
}

namespace detail {

/// Collapses endpoint pairs that cross by a rounding ulp (possible when a
/// near-degenerate cut goes through exp).
inline Interval ordered_cut(double lo, double hi) {
  if (lo > hi) {
    const double mid = 0.5 * (lo + hi);
    return {mid, mid};
  }
  return {lo, hi};
}

/// Range of f over the (lambda, mu) box, scanned on vertices plus edge
/// midpoints and center. A(t) and W(t) are monotone in each rate separately,
/// so the vertex points already attain the extrema; the interior points
/// guard the scan if that ever stops holding for a new formula.
template <typename F>
Interval scan_rate_box(const Interval& lam, const Interval& mu, F&& f) {
  const double ls[3] = {lam.lo, lam.mid(), lam.hi};
  const double ms[3] = {mu.lo, mu.mid(), mu.hi};
  double lo = f(ls[0], ms[0]);
  double hi = lo;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == 0 && j == 0) continue;
      const double v = f(ls[i], ms[j]);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  return {lo, hi};
}

}  // namespace detail

/// Alpha-cut profiles of the six reliability parameters.
struct FuzzyMeasures {
  FuzzyProfile failure_rate;
  FuzzyProfile repair_time;
  FuzzyProfile mtbf;
  FuzzyProfile enof;
  FuzzyProfile reliability;
  FuzzyProfile availability;
};

/// Evaluates every parameter per alpha level on the (lambda, mu = 1/tau)
/// box. MTBF and R are monotone and use direction-aware endpoints; A and W
/// are scanned over the box.
inline FuzzyMeasures fuzzy_measures(const FuzzySystemRates& fr, MissionTime t) {
  std::vector<AlphaCut> mtbf, enof, rel, avail;
  const std::size_t n = fr.lambda_s.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double alpha = fr.lambda_s.levels()[i].alpha;
    const Interval lam = fr.lambda_s.levels()[i].cut;
    const Interval tau = fr.tau_s.levels()[i].cut;
    const Interval mu{1.0 / tau.hi, 1.0 / tau.lo};

    mtbf.push_back({alpha, {1.0 / lam.hi + tau.lo, 1.0 / lam.lo + tau.hi}});
    rel.push_back({alpha, detail::ordered_cut(reliability_at(lam.hi, t.hours),
                                              reliability_at(lam.lo, t.hours))});
    avail.push_back({alpha, detail::scan_rate_box(lam, mu, [&](double l, double m) {
                       return availability_at(l, m, t.hours);
                     })});
    enof.push_back({alpha, detail::scan_rate_box(lam, mu, [&](double l, double m) {
                      return enof_at(l, m, t.hours);
                    })});
  }
  return {fr.lambda_s,
          fr.tau_s,
          FuzzyProfile(std::move(mtbf)),
          FuzzyProfile(std::move(enof)),
          FuzzyProfile(std::move(rel)),
          FuzzyProfile(std::move(avail))};
}

/// One parameter of the report: crisp value, fuzzy profile and its
/// center-of-area defuzzification.
struct ParameterReport {
  double crisp = 0.0;
  FuzzyProfile fuzzy;
  double defuzzified = 0.0;
};

struct ReliabilityReport {
  SystemRates rates;
  MissionTime time;
  SpreadSpec spread;
  FuzzyMode mode = FuzzyMode::naive;
  double mttf = 0.0;  // crisp only; mtbf = mttf + mttr
  double mttr = 0.0;

  ParameterReport failure_rate;
  ParameterReport repair_time;
  ParameterReport mtbf;
  ParameterReport enof;
  ParameterReport reliability;
  ParameterReport availability;

  /// Parameters in report row order.
  std::vector<std::pair<std::string, const ParameterReport*>> parameters() const {
    return {{"failure_rate", &failure_rate}, {"repair_time", &repair_time},
            {"enof", &enof},                 {"mtbf", &mtbf},
            {"reliability", &reliability},   {"availability", &availability}};
  }
};

namespace detail {

inline bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1e-300, std::abs(a), std::abs(b)});
}

inline void audit_parameter(const ReliabilityReport& r, const std::string& name,
                            const ParameterReport& p) {
  const Interval sup = p.fuzzy.support();
  const double slack = 1e-9 * std::max({1.0, std::abs(sup.lo), std::abs(sup.hi)});
  if (p.defuzzified < sup.lo - slack || p.defuzzified > sup.hi + slack)
    throw std::logic_error("report audit: defuzzified " + name + " escaped the fuzzy support");
  const Interval core = p.fuzzy.core();
  if (!rel_close(core.lo, p.crisp, 1e-12) || !rel_close(core.hi, p.crisp, 1e-12))
    throw std::logic_error("report audit: alpha=1 cut of " + name +
                           " does not collapse to the crisp value");
  (void)r;
}

inline void audit_report(const ReliabilityReport& r) {
  for (const auto& [name, p] : r.parameters()) audit_parameter(r, name, *p);
  if (r.reliability.crisp < 0.0 || r.reliability.crisp > 1.0)
    throw std::logic_error("report audit: reliability outside [0, 1]");
  if (r.availability.crisp < 0.0 || r.availability.crisp > 1.0)
    throw std::logic_error("report audit: availability outside [0, 1]");
  if (r.enof.crisp < 0.0) throw std::logic_error("report audit: negative ENOF");
  if (!rel_close(r.mtbf.crisp, r.mttf + r.mttr, 1e-12))
    throw std::logic_error("report audit: MTBF != MTTF + MTTR");
}

}  // namespace detail

/// Full pipeline for one spread: crisp reduction, fuzzy propagation, measure
/// evaluation and COA defuzzification. Deterministic for fixed inputs.
inline ReliabilityReport build_report(const SystemModel& m, MissionTime t,
                                      const SpreadSpec& spread, int alpha_levels = 101,
                                      FuzzyMode mode = FuzzyMode::naive,
                                      int grid_points = 2001) {
  const SystemRates rates = reduce_crisp(m);
  const CrispMeasures crisp = point_measures(rates, t);
  const FuzzySystemRates fr = reduce_fuzzy(m, spread, alpha_levels, mode);
  FuzzyMeasures fm = fuzzy_measures(fr, t);

  auto make = [grid_points](double crisp_value, FuzzyProfile profile) {
    const double defuzz = coa_defuzzify(profile, grid_points);
    return ParameterReport{crisp_value, std::move(profile), defuzz};
  };
  ReliabilityReport report{rates,
                           t,
                           spread,
                           mode,
                           crisp.mttf,
                           crisp.mttr,
                           make(crisp.failure_rate, std::move(fm.failure_rate)),
                           make(crisp.repair_time, std::move(fm.repair_time)),
                           make(crisp.mtbf, std::move(fm.mtbf)),
                           make(crisp.enof, std::move(fm.enof)),
                           make(crisp.reliability, std::move(fm.reliability)),
                           make(crisp.availability, std::move(fm.availability))};
  detail::audit_report(report);
  return report;
}

}  // namespace lamtau
