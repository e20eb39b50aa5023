#pragma once

// Primitives for the two-drone delivery model.
//
// A starter drone carries a package from S = (0,0) toward T = (1,0) at unit
// speed and halts at an unknown time t in [0,1], leaving the package at
// (t,0). A finisher drone, also unit speed, starts at P = (x,y) and must get
// the package to T. Everything else in the library (closed-form competitive
// ratios, the event simulator, region maps) is built on the few types here.

#include <cmath>
#include <stdexcept>
#include <string>

namespace fdel {

// Default comparison tolerance for closed-form cross-checks.
inline constexpr double kDefaultTol = 1e-9;

// Co-location predicate tolerance; also the slack FailTime accepts at 0/1.
inline constexpr double kCoincidentTol = 1e-12;

// Radicands may round slightly negative; anything below this throws.
inline constexpr double kRadicandClamp = -1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline constexpr Point kSource{0.0, 0.0};       // where the starter lifts off
inline constexpr Point kDestination{1.0, 0.0};  // where the package must land

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline bool almost_equal(double a, double b, double tol = kDefaultTol) {
  return std::fabs(a - b) <= tol;
}

// sqrt that forgives rounding-level negative arguments. A radicand below
// kRadicandClamp is not rounding noise but misuse, so it throws.
inline double safe_sqrt(double v) {
  if (v < 0.0) {
    if (v < kRadicandClamp)
      throw std::domain_error("safe_sqrt: radicand " + std::to_string(v) + " below clamp");
    v = 0.0;
  }
  return std::sqrt(v);
}

// Moment the starter halts, as a fraction of the S->T run. Accepts rounding
// slop of kCoincidentTol beyond [0,1] and clamps it away; anything further is
// a domain error (this also rejects NaN).
class FailTime {
 public:
  explicit FailTime(double t) : t_(t) {
    if (!(t >= -kCoincidentTol && t <= 1.0 + kCoincidentTol))
      throw std::domain_error("fail time outside [0,1]: " + std::to_string(t));
    if (t_ < 0.0) t_ = 0.0;
    if (t_ > 1.0) t_ = 1.0;
  }
  double value() const { return t_; }

 private:
  double t_;
};

// A problem instance is just the finisher's start. The model is symmetric
// about the segment axis, so y is folded to be non-negative; `folded`
// remembers that a mirror happened (outputs are then for the mirrored point).
struct ProblemInstance {
  Point finisher_start;
  bool folded = false;
};

inline ProblemInstance normalize(Point finisher_start) {
  if (!std::isfinite(finisher_start.x) || !std::isfinite(finisher_start.y))
    throw std::invalid_argument("finisher start must be finite");
  if (finisher_start.y < 0.0) return {{finisher_start.x, -finisher_start.y}, true};
  return {finisher_start, false};
}

// (x-1)^2 + y^2: squared distance to the destination. The unit disk around T
// (value <= 1) is where the meet-in-the-middle handover beats going to T
// first; comparisons against 1 route the strategy choice.
inline double dest_disk_metric(Point p) {
  return (p.x - 1.0) * (p.x - 1.0) + p.y * p.y;
}

inline double dest_disk_metric(const ProblemInstance& inst) {
  return dest_disk_metric(inst.finisher_start);
}

// Offline optimum: fly straight to the drop point (t,0), wait for the package
// if early, carry it home. max{1,...} is the waiting: the package itself
// needs time 1 to reach T when relayed without detour.
inline double opt_delivery_time(const ProblemInstance& inst, FailTime t) {
  const Point p = inst.finisher_start;
  const double to_drop = std::hypot(p.x - t.value(), p.y);
  return std::max(1.0, to_drop + 1.0 - t.value());
}

// x-coordinate d of the head-on handover point: the finisher flying straight
// to (d,0) arrives exactly when the starter does, i.e. dist(P,(d,0)) = d.
// Needs x > 0 to be reachable; (0,0) maps to 0 by convention (the finisher
// is already riding the starter). Inside the closed unit disk around T the
// value never exceeds 1.
inline double meeting_point_x(const ProblemInstance& inst) {
  const Point p = inst.finisher_start;
  if (p.x <= 0.0) {
    if (p.x == 0.0 && p.y == 0.0) return 0.0;
    throw std::domain_error("meeting point needs x > 0 (finisher ahead of the source)");
  }
  return (p.x * p.x + p.y * p.y) / (2.0 * p.x);
}

}  // namespace fdel
