#pragma once

// Candidate finisher strategies and their closed-form worst-case ratios.
//
// Every strategy in play is "fly straight to some point (m,0) on the segment,
// then sweep": the competitive ratio of anything else is never better. The
// named candidates are
//   A0  retrace: head to the source S, then sweep toward T ("last point of
//       contact" — the package is always found on the way up),
//   A1  secure the far end: head to T, sweep back to S, return to T,
//   Ad  head-on handover: aim at the point (d,0) the starter reaches exactly
//       when the finisher does, so a live exchange happens when the starter
//       is still running; only meaningful for x > 0,
//   Generic(a, order)  first touch (a,0), then one of the two sweep orders.
//
// Closed forms below give sup_t ratio and the attaining fail time. cr_a1 is
// valid outside the open unit disk around T, cr_ad inside the closed one
// (x > 0); they agree on the boundary where both trajectories coincide.

#include <stdexcept>
#include <string>
#include <vector>

#include "fdel/geometry.hpp"

namespace fdel {

enum class CandidateTag { A0, A1, Ad, Generic };
enum class SweepOrder { DownThenUp, UpThenDown };  // down = toward S, up = toward T

inline const char* to_string(CandidateTag tag) {
  switch (tag) {
    case CandidateTag::A0: return "A0";
    case CandidateTag::A1: return "A1";
    case CandidateTag::Ad: return "Ad";
    case CandidateTag::Generic: return "Generic";
  }
  return "?";
}

struct CandidateKind {
  CandidateTag tag = CandidateTag::A0;
  double a = 0.0;           // Generic only: first-touch x-coordinate
  SweepOrder order = SweepOrder::DownThenUp;  // Generic only

  static CandidateKind a0() { return {CandidateTag::A0, 0.0, SweepOrder::DownThenUp}; }
  static CandidateKind a1() { return {CandidateTag::A1, 0.0, SweepOrder::DownThenUp}; }
  static CandidateKind ad() { return {CandidateTag::Ad, 0.0, SweepOrder::DownThenUp}; }
  static CandidateKind generic(double a, SweepOrder order) {
    if (!(a >= 0.0 && a <= 1.0))
      throw std::invalid_argument("generic first touch outside [0,1]: " + std::to_string(a));
    return {CandidateTag::Generic, a, order};
  }
};

// Finisher route as a waypoint polyline, walked at unit speed. Past the first
// waypoint the route stays on the axis (that is what makes the per-segment
// co-location equations linear); x may exceed 1 there (Ad aimed from outside
// the disk overshoots T), never undershoot 0.
struct Trajectory {
  std::vector<Point> waypoints;
};

inline Trajectory trajectory_of(const ProblemInstance& inst, const CandidateKind& kind) {
  const Point p = inst.finisher_start;
  switch (kind.tag) {
    case CandidateTag::A0:
      return {{p, kSource, kDestination}};
    case CandidateTag::A1:
      return {{p, kDestination, kSource, kDestination}};
    case CandidateTag::Ad: {
      const double d = meeting_point_x(inst);
      return {{p, Point{d, 0.0}, kSource, kDestination}};
    }
    case CandidateTag::Generic: {
      const Point touch{kind.a, 0.0};
      if (kind.order == SweepOrder::DownThenUp)
        return {{p, touch, kSource, kDestination}};
      return {{p, touch, kDestination, kSource, kDestination}};
    }
  }
  throw std::invalid_argument("unknown candidate tag");
}

// --- closed-form delivery times ------------------------------------------

inline double delivery_a0(const ProblemInstance& inst) {
  const Point p = inst.finisher_start;
  return 1.0 + std::hypot(p.x, p.y);
}

// dist(P,T) + out-and-back to the drop. Once the sweep would cross the still
// -running starter (t past (1+z1)/2) the exchange happens mid-flight and the
// delivery lands at exactly 1, hence the clamp; it is inactive outside the
// unit disk around T.
inline double delivery_a1(const ProblemInstance& inst, FailTime t) {
  const Point p = inst.finisher_start;
  const double z1 = std::hypot(p.x - 1.0, p.y);
  return std::max(1.0, z1 + 2.0 * (1.0 - t.value()));
}

// Early failures (t < d) are fetched on the down sweep from (d,0); from t = d
// on, the live handover makes the run optimal.
inline double delivery_ad(const ProblemInstance& inst, FailTime t) {
  const double d = meeting_point_x(inst);
  if (t.value() >= d) return opt_delivery_time(inst, t);
  const Point p = inst.finisher_start;
  return std::hypot(p.x - d, p.y) + (d - t.value()) + (1.0 - t.value());
}

// --- worst-case ratios -----------------------------------------------------

struct CrResult {
  double ratio = 1.0;
  double worst_t = 0.0;      // a fail time attaining the sup
  double dist_to_dest = 0.0; // dist(P,T), cached for region routing
};

// A0's delivery time never depends on t, so the ratio peaks where the
// optimum bottoms out, at t = 1.
// Ratios are >= 1 by the analysis; the clamps below only strip sub-ulp dips
// where numerator and denominator are the same quantity computed two ways
// (e.g. the handover ratio on the axis).
inline CrResult cr_a0(const ProblemInstance& inst) {
  const Point p = inst.finisher_start;
  const double z1 = std::hypot(p.x - 1.0, p.y);
  return {std::max(1.0, delivery_a0(inst) / std::max(1.0, z1)), 1.0, z1};
}

// Below this |x-1| the general worst-time expression for A1 cancels to
// rounding noise and the dedicated x = 1 branch takes over (its own error
// across the window is ~|x-1|/16).
inline constexpr double kA1BranchWidth = 1e-6;

// Fail time maximizing A1's ratio. The expression is finite for every
// instance (the inner radicand equals z1*(z1+x-1) >= 0); the result is
// clamped into [0,1]. Negative stationary points mean the sup sits at t = 0.
inline FailTime worst_fail_time_a1(const ProblemInstance& inst) {
  const Point p = inst.finisher_start;
  const double x = p.x, y = p.y;
  double t;
  if (std::fabs(x - 1.0) < kA1BranchWidth) {
    t = 1.0 - 0.75 * y;
  } else {
    const double z1 = std::hypot(x - 1.0, y);
    const double radicand = z1 * (z1 + x - 1.0);
    t = (x * x + y * y + z1 * (1.0 - x) - 1.0 - z1 * safe_sqrt(radicand)) / (2.0 * (x - 1.0));
  }
  return FailTime(std::min(1.0, std::max(0.0, t)));
}

// Ratio formula without the validity guard; callers own the region check.
inline CrResult cr_a1_unchecked(const ProblemInstance& inst) {
  const FailTime worst = worst_fail_time_a1(inst);
  const double ratio = delivery_a1(inst, worst) / opt_delivery_time(inst, worst);
  const Point p = inst.finisher_start;
  return {std::max(1.0, ratio), worst.value(), std::hypot(p.x - 1.0, p.y)};
}

inline CrResult cr_a1(const ProblemInstance& inst) {
  if (dest_disk_metric(inst) < 1.0 - kDefaultTol)
    throw std::domain_error("cr_a1 needs the finisher outside the unit disk around T");
  return cr_a1_unchecked(inst);
}

// Fail time maximizing Ad's ratio; 0 whenever the start lies in the disk of
// radius 1/2 around (1/2, 0) (x^2+y^2 <= x), strictly less than 1 otherwise.
inline FailTime worst_fail_time_ad(const ProblemInstance& inst) {
  const Point p = inst.finisher_start;
  if (p.x <= 0.0) {
    if (p.x == 0.0 && p.y == 0.0) return FailTime(0.0);
    throw std::domain_error("worst_fail_time_ad needs x > 0");
  }
  const double t = (p.x * (p.x - 1.0) + p.y * p.y) / (2.0 * (p.x + std::sqrt(p.x)));
  return FailTime(std::min(1.0, std::max(0.0, t)));
}

// Ratio formula without the disk guard; still needs x > 0 (or the origin).
inline CrResult cr_ad_unchecked(const ProblemInstance& inst) {
  const Point p = inst.finisher_start;
  if (p.x == 0.0 && p.y == 0.0) return {1.0, 0.0, 1.0};
  if (p.x <= 0.0) throw std::domain_error("cr_ad needs x > 0");
  const double sq = p.x * p.x + p.y * p.y;
  const double z1 = std::hypot(p.x - 1.0, p.y);
  double ratio;
  if (sq <= p.x) {
    ratio = (sq + p.x) / (p.x * (1.0 + std::sqrt(sq)));
  } else {
    const double root = std::sqrt(p.x) + 1.0;
    ratio = 1.0 + p.y * p.y / (p.x * root * root);
  }
  return {std::max(1.0, ratio), worst_fail_time_ad(inst).value(), z1};
}

inline CrResult cr_ad(const ProblemInstance& inst) {
  const Point p = inst.finisher_start;
  if (!(p.x == 0.0 && p.y == 0.0) && dest_disk_metric(inst) > 1.0 + kDefaultTol)
    throw std::domain_error("cr_ad needs the finisher inside the closed unit disk around T");
  return cr_ad_unchecked(inst);
}

}  // namespace fdel
