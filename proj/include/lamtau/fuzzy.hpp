#pragma once

// Triangular fuzzy numbers, alpha-cut interval arithmetic, fuzzy profiles
// (nested alpha-cut families) and center-of-area defuzzification.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lamtau {

namespace detail {

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

inline bool finite(double x) { return std::isfinite(x); }

}  // namespace detail

/// A closed real interval [lo, hi]; one alpha-cut of a fuzzy quantity.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    detail::require(detail::finite(lo) && detail::finite(hi),
                    "interval endpoints must be finite");
    detail::require(lo <= hi, "interval requires lo <= hi");
  }

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool degenerate() const { return lo == hi; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

inline Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

inline Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi;
  const double p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

/// Division requires a strictly positive divisor.
inline Interval operator/(const Interval& a, const Interval& b) {
  detail::require(b.lo > 0.0, "interval division requires divisor > 0");
  return {std::min(a.lo / b.lo, a.lo / b.hi), std::max(a.hi / b.lo, a.hi / b.hi)};
}

enum class IntervalOp { add, sub, mul, div };

inline Interval interval_arith(IntervalOp op, const Interval& a, const Interval& b) {
  switch (op) {
    case IntervalOp::add: return a + b;
    case IntervalOp::sub: return a - b;
    case IntervalOp::mul: return a * b;
    case IntervalOp::div: return a / b;
  }
  throw std::invalid_argument("unknown interval operation");
}

/// Symmetric relative half-width used to fuzzify a crisp value, e.g. 0.15
/// for +-15%. Must stay below 1 so positive quantities keep positive support.
struct SpreadSpec {
  double fraction = 0.0;

  SpreadSpec() = default;
  explicit SpreadSpec(double f) : fraction(f) {
    detail::require(detail::finite(f) && f >= 0.0 && f < 1.0,
                    "spread fraction must lie in [0, 1)");
  }
};

/// Triangular fuzzy number: membership rises linearly from left to 1 at
/// mode, falls linearly to right, and is 0 outside [left, right].
class TriangularFuzzyNumber {
 public:
  TriangularFuzzyNumber(double left, double mode, double right)
      : left_(left), mode_(mode), right_(right) {
    detail::require(detail::finite(left) && detail::finite(mode) && detail::finite(right),
                    "triangular fuzzy number requires finite parameters");
    detail::require(left <= mode && mode <= right,
                    "triangular fuzzy number requires left <= mode <= right");
  }

  double left() const { return left_; }
  double mode() const { return mode_; }
  double right() const { return right_; }

  Interval alpha_cut(double alpha) const {
    detail::require(alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0, 1]");
    if (alpha == 1.0) return {mode_, mode_};
    double lo = left_ + alpha * (mode_ - left_);
    double hi = right_ - alpha * (right_ - mode_);
    if (lo > hi) lo = hi = 0.5 * (lo + hi);  // rounding on a very thin triangle
    return {lo, hi};
  }

  double membership(double x) const {
    if (x < left_ || x > right_) return 0.0;
    if (x == mode_) return 1.0;
    if (x < mode_) return (x - left_) / (mode_ - left_);
    return (right_ - x) / (right_ - mode_);
  }

 private:
  double left_;
  double mode_;
  double right_;
};

/// Fuzzifies a positive crisp value into a symmetric triangle
/// (mode*(1-s), mode, mode*(1+s)).
inline TriangularFuzzyNumber tfn_from_spread(double mode, const SpreadSpec& spread) {
  detail::require(detail::finite(mode) && mode > 0.0,
                  "tfn_from_spread requires a positive mode");
  const double s = spread.fraction;
  return {mode * (1.0 - s), mode, mode * (1.0 + s)};
}

struct AlphaCut {
  double alpha = 0.0;
  Interval cut;
};

/// Uniform alpha grid {0, 1/(n-1), ..., 1}; n >= 2.
inline std::vector<double> uniform_alpha_grid(int levels) {
  detail::require(levels >= 2, "alpha grid needs at least 2 levels");
  std::vector<double> grid(static_cast<std::size_t>(levels));
  for (int k = 0; k < levels; ++k)
    grid[static_cast<std::size_t>(k)] = static_cast<double>(k) / (levels - 1);
  grid.front() = 0.0;
  grid.back() = 1.0;
  return grid;
}

/// A fuzzy quantity stored as its nested alpha-cuts. Levels run from
/// alpha = 0 (support) up to alpha = 1 (core), strictly increasing in alpha,
/// with every higher cut contained in every lower one.
class FuzzyProfile {
 public:
  explicit FuzzyProfile(std::vector<AlphaCut> levels) : levels_(std::move(levels)) {
    detail::require(levels_.size() >= 2, "fuzzy profile needs at least 2 levels");
    detail::require(levels_.front().alpha == 0.0, "fuzzy profile must start at alpha = 0");
    detail::require(levels_.back().alpha == 1.0, "fuzzy profile must end at alpha = 1");
    for (std::size_t i = 1; i < levels_.size(); ++i) {
      detail::require(levels_[i - 1].alpha < levels_[i].alpha,
                      "fuzzy profile alphas must be strictly increasing");
      // Monotone formulas evaluated in floating point can wobble by an ulp
      // between adjacent levels; snap those, reject anything larger.
      const Interval& prev = levels_[i - 1].cut;
      Interval& cur = levels_[i].cut;
      const double tol =
          1e-12 * std::max({1.0, std::abs(prev.lo), std::abs(prev.hi)});
      detail::require(cur.lo >= prev.lo - tol && cur.hi <= prev.hi + tol,
                      "fuzzy profile alpha-cuts must be nested");
      cur.lo = std::max(cur.lo, prev.lo);
      cur.hi = std::min(cur.hi, prev.hi);
    }
  }

  /// Samples a triangular number on a uniform alpha grid.
  static FuzzyProfile from_tfn(const TriangularFuzzyNumber& t, int alpha_levels = 101) {
    std::vector<AlphaCut> levels;
    for (double alpha : uniform_alpha_grid(alpha_levels))
      levels.push_back({alpha, t.alpha_cut(alpha)});
    return FuzzyProfile(std::move(levels));
  }

  const std::vector<AlphaCut>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }
  Interval support() const { return levels_.front().cut; }
  Interval core() const { return levels_.back().cut; }

  /// Membership grade at x: the largest alpha whose cut contains x,
  /// linearly interpolated between stored levels; 0 outside the support.
  double membership_at(double x) const {
    if (!support().contains(x)) return 0.0;
    if (levels_.back().cut.contains(x)) return levels_.back().alpha;
    // Nesting makes the levels containing x a prefix; binary search its end.
    std::size_t lo = 0, hi = levels_.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      (levels_[mid].cut.contains(x) ? lo : hi) = mid;
    }
    const AlphaCut& a = levels_[lo];
    const AlphaCut& b = levels_[hi];
    const double t = (x < b.cut.lo) ? (x - a.cut.lo) / (b.cut.lo - a.cut.lo)
                                    : (a.cut.hi - x) / (a.cut.hi - b.cut.hi);
    return a.alpha + t * (b.alpha - a.alpha);
  }

  bool same_grid(const FuzzyProfile& other) const {
    if (levels_.size() != other.levels_.size()) return false;
    for (std::size_t i = 0; i < levels_.size(); ++i)
      if (levels_[i].alpha != other.levels_[i].alpha) return false;
    return true;
  }

 private:
  std::vector<AlphaCut> levels_;
};

/// Center-of-area defuzzification: x_bar = integral(x mu(x)) / integral(mu(x))
/// over the support, by the trapezoidal rule on a uniform grid.
inline double coa_defuzzify(const FuzzyProfile& p, int grid_points = 2001) {
  detail::require(grid_points >= 2, "coa_defuzzify needs at least 2 grid points");
  const Interval sup = p.support();
  if (sup.degenerate()) return sup.lo;
  const double h = sup.width() / (grid_points - 1);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = (i == grid_points - 1) ? sup.hi : sup.lo + i * h;
    const double w = (i == 0 || i == grid_points - 1) ? 0.5 : 1.0;
    const double mu = p.membership_at(x);
    num += w * x * mu;
    den += w * mu;
  }
  if (den == 0.0) return sup.mid();  // 2-point grid of a strict triangle
  return num / den;
}

}  // namespace lamtau
