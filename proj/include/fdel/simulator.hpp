#pragma once

// Exact event-driven execution of a finisher trajectory against a fail time.
//
// No time stepping: the starter runs along the axis until it halts at (t,0),
// and past its first waypoint the finisher's polyline lies on the axis too,
// so every possible co-location is the root of a linear equation per segment.
// The first (descending) segment stays strictly above the axis and can only
// hand off at its endpoint, which the following segment's equations catch.
//
// Exchange semantics: if the finisher runs into the still-running starter
// (head-on, or arriving at the same spot at the same moment), both continue
// at unit speed toward T until the starter halts, so the delivery lands at
// exactly 1 and the pickup is recorded at the drop point (t,0). That keeps
// the invariant pickup_point.x = t for every outcome.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdel/strategies.hpp"

namespace fdel {

struct AgentState {
  Point position;
  bool carrying = false;  // still transporting the package
  bool failed = false;
};

// Starter at wall-clock `now`: runs right at unit speed, halts at (t,0).
inline AgentState starter_state(FailTime t, double now) {
  const bool failed = now >= t.value();
  return {{std::min(now, t.value()), 0.0}, !failed, failed};
}

struct SimEvent {
  double time = 0.0;
  std::string name;  // start | waypoint | meet | pickup | deliver
  Point starter;
  Point finisher;
};

struct SimOutcome {
  double delivery_time = 0.0;
  double pickup_time = 0.0;
  Point pickup_point;
  std::vector<SimEvent> events;
};

// Trajectory finished without ever holding the package.
struct NoDeliveryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

template <bool kLog>
SimOutcome simulate_impl(const ProblemInstance& inst, const Trajectory& traj, FailTime t,
                         double tol) {
  const auto& wp = traj.waypoints;
  if (wp.empty()) throw std::invalid_argument("empty trajectory");
  if (wp.front().y < -tol) throw std::invalid_argument("trajectory starts below the axis");
  if (distance(wp.front(), inst.finisher_start) > 1e-9)
    throw std::invalid_argument("trajectory is not anchored at the finisher start");

  const double tv = t.value();
  SimOutcome out;
  auto log = [&](double time, const char* name, Point fin) {
    if constexpr (kLog)
      out.events.push_back({time, name, starter_state(t, time).position, fin});
  };

  double tau = 0.0;
  Point pos = wp.front();
  log(0.0, "start", pos);

  double pickup = -1.0;

  for (std::size_t i = 1; i < wp.size(); ++i) {
    Point next = wp[i];
    if (std::fabs(next.y) > tol || next.x < -tol)
      throw std::invalid_argument("trajectory leaves the axis after the first waypoint");
    next.y = 0.0;
    next.x = std::max(next.x, 0.0);

    const Point a = pos;
    const bool on_axis = a.y == 0.0;
    const double len = on_axis ? std::fabs(next.x - a.x) : distance(a, next);
    if (len <= tol) {
      pos = next;
      continue;
    }
    const double ta = tau, tb = tau + len;

    if (on_axis) {
      const int dir = next.x > a.x ? 1 : -1;
      double hit = -1.0;
      bool live = false;  // hit the starter while it was still running
      if (tv > ta - tol) {
        if (dir > 0) {
          // Same direction, same speed: contact only if already riding it.
          if (std::fabs(a.x - ta) <= tol && ta <= tv + tol) {
            hit = ta;
            live = true;
          }
        } else {
          const double head_on = 0.5 * (a.x + ta);
          if (head_on >= ta - tol && head_on <= std::min(tb, tv) + tol) {
            hit = head_on;
            live = true;
          }
        }
      }
      const double reach = dir > 0 ? ta + (tv - a.x) : ta + (a.x - tv);
      if (reach >= std::max(ta, tv) - tol && reach <= tb + tol && (hit < 0.0 || reach < hit)) {
        hit = reach;
        live = false;
      }
      if (hit >= 0.0) {
        if (live && hit < tv - tol) {
          log(hit, "meet", {std::min(hit, tv), 0.0});
          pickup = tv;  // ride along until the starter halts
        } else {
          pickup = std::max(hit, tv);
        }
        break;
      }
    }
    // A descending segment stays strictly above the axis until its endpoint;
    // whatever happens there is caught at the next segment's start (or by the
    // rest position below).

    tau = tb;
    pos = next;
    log(tau, "waypoint", pos);
  }

  if (pickup < 0.0) {
    // Finisher parks at its last waypoint; a package arriving right there is
    // still collected (this is the waiting case), anything else is a miss.
    if (pos.y == 0.0 && std::fabs(pos.x - tv) <= tol) {
      pickup = std::max(tau, tv);
    } else {
      throw NoDeliveryError("trajectory ends at (" + std::to_string(pos.x) + "," +
                            std::to_string(pos.y) + ") away from the package at (" +
                            std::to_string(tv) + ",0)");
    }
  }

  out.pickup_time = pickup;
  out.pickup_point = {tv, 0.0};
  out.delivery_time = pickup + (1.0 - tv);
  log(pickup, "pickup", out.pickup_point);
  log(out.delivery_time, "deliver", kDestination);
  return out;
}

}  // namespace detail

inline SimOutcome simulate(const ProblemInstance& inst, const Trajectory& traj, FailTime t,
                           double tol = kCoincidentTol) {
  return detail::simulate_impl<true>(inst, traj, t, tol);
}

// Allocation-free variant for grid sweeps.
inline double simulate_delivery_time(const ProblemInstance& inst, const Trajectory& traj,
                                     FailTime t, double tol = kCoincidentTol) {
  return detail::simulate_impl<false>(inst, traj, t, tol).delivery_time;
}

// Closed forms where they exist; Generic strategies run through the simulator.
inline double delivery_time(const ProblemInstance& inst, const CandidateKind& kind, FailTime t) {
  switch (kind.tag) {
    case CandidateTag::A0: return delivery_a0(inst);
    case CandidateTag::A1: return delivery_a1(inst, t);
    case CandidateTag::Ad: return delivery_ad(inst, t);
    case CandidateTag::Generic:
      return simulate_delivery_time(inst, trajectory_of(inst, kind), t);
  }
  throw std::invalid_argument("unknown candidate tag");
}

inline double cr_at(const ProblemInstance& inst, const CandidateKind& kind, FailTime t) {
  return delivery_time(inst, kind, t) / opt_delivery_time(inst, t);
}

// --- brute-force worst case over the fail time ------------------------------

struct SupOptions {
  double t_step = 1e-4;        // fail-time grid pitch
  double refine_width = 1e-8;  // golden-section bracket width to stop at
};

struct SupResult {
  double ratio = 0.0;
  double worst_t = 0.0;
};

// sup_t simulated/optimal on a uniform grid (lowest-t tie break), then a
// golden-section polish of the winning bracket. Purely simulation-driven, so
// it double-checks the closed forms rather than restating them.
inline SupResult numeric_sup_cr(const ProblemInstance& inst, const Trajectory& traj,
                                SupOptions options = {}) {
  if (!(options.t_step > 0.0 && options.t_step <= 0.5))
    throw std::invalid_argument("t_step must be in (0, 0.5]");
  auto ratio_at = [&](double tv) {
    const FailTime ft(tv);
    return simulate_delivery_time(inst, traj, ft) / opt_delivery_time(inst, ft);
  };

  const long n = std::lround(1.0 / options.t_step);
  double best_t = 0.0, best_r = -1.0;
  for (long i = 0; i <= n; ++i) {
    const double tv = std::min(1.0, static_cast<double>(i) * options.t_step);
    const double r = ratio_at(tv);
    if (r > best_r) {
      best_r = r;
      best_t = tv;
    }
  }

  double lo = std::max(0.0, best_t - options.t_step);
  double hi = std::min(1.0, best_t + options.t_step);
  static const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - invphi * (hi - lo), d = lo + invphi * (hi - lo);
  double fc = ratio_at(c), fd = ratio_at(d);
  while (hi - lo > options.refine_width) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = ratio_at(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = ratio_at(d);
    }
  }
  for (const auto& [tt, rr] : {std::pair{c, fc}, std::pair{d, fd}}) {
    if (rr > best_r) {
      best_r = rr;
      best_t = tt;
    }
  }
  const double mid = 0.5 * (lo + hi);
  if (const double rm = ratio_at(mid); rm > best_r) {
    best_r = rm;
    best_t = mid;
  }
  return {best_r, best_t};
}

}  // namespace fdel
