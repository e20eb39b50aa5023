#pragma once

// Strategy selection and the geometry of the three regions.
//
// The decision is a two-way comparison per branch of the destination disk:
// outside, retrace (A0) competes with the far-end sweep (A1); inside, with
// the head-on handover (Ad). Ties go to retrace. On the disk boundary the
// sweep and the handover are the same route, so the boundary is routed to
// the handover branch and the labeling stays consistent.
//
// Region frontiers are where the compared ratios tie. Two are genuine
// curves (retrace/sweep outside, retrace/handover inside); the third is the
// arc of the disk boundary above the point where all three ratios tie at
// once. bangbang_trace recovers all of them by sign-change bisection on the
// ratio difference, independently of the closed frontier algebra.

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "fdel/strategies.hpp"

namespace fdel {

enum class RegionLabel { ZA0, ZA1, ZAd };

inline const char* to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::ZA0: return "A0";
    case RegionLabel::ZA1: return "A1";
    case RegionLabel::ZAd: return "Ad";
  }
  return "?";
}

struct AnalysisReport {
  ProblemInstance instance;
  RegionLabel label = RegionLabel::ZA0;
  double chosen_cr = 1.0;
  double chosen_worst_t = 0.0;
  // The candidates the rule actually compared, in comparison order.
  std::vector<std::pair<CandidateTag, CrResult>> per_candidate;
  // Handover aim point, when the handover branch applies.
  std::optional<double> meet_x;
};

inline AnalysisReport select_strategy(const ProblemInstance& inst) {
  AnalysisReport rep;
  rep.instance = inst;
  const CrResult a0 = cr_a0(inst);
  rep.per_candidate.emplace_back(CandidateTag::A0, a0);
  if (dest_disk_metric(inst) > 1.0) {
    const CrResult a1 = cr_a1(inst);
    rep.per_candidate.emplace_back(CandidateTag::A1, a1);
    const bool keep_a0 = a0.ratio <= a1.ratio;
    rep.label = keep_a0 ? RegionLabel::ZA0 : RegionLabel::ZA1;
    const CrResult& chosen = keep_a0 ? a0 : a1;
    rep.chosen_cr = chosen.ratio;
    rep.chosen_worst_t = chosen.worst_t;
  } else {
    const CrResult ad = cr_ad(inst);
    rep.per_candidate.emplace_back(CandidateTag::Ad, ad);
    rep.meet_x = meeting_point_x(inst);
    const bool keep_a0 = a0.ratio <= ad.ratio;
    rep.label = keep_a0 ? RegionLabel::ZA0 : RegionLabel::ZAd;
    const CrResult& chosen = keep_a0 ? a0 : ad;
    rep.chosen_cr = chosen.ratio;
    rep.chosen_worst_t = chosen.worst_t;
  }
  return rep;
}

inline CandidateKind kind_of(RegionLabel label) {
  switch (label) {
    case RegionLabel::ZA0: return CandidateKind::a0();
    case RegionLabel::ZA1: return CandidateKind::a1();
    case RegionLabel::ZAd: return CandidateKind::ad();
  }
  throw std::invalid_argument("unknown region label");
}

// --- region map --------------------------------------------------------------

struct Bounds {
  double xmin = -1.0, xmax = 3.0;
  double ymin = 0.0, ymax = 2.0;
};

struct RegionSample {
  Point p;
  RegionLabel label = RegionLabel::ZA0;
  double cr = 1.0;
  double worst_t = 0.0;
};

// Uniform sweep, rows by ascending y, columns by ascending x. Degenerate
// (single-point) bounds are fine; negative y folds through normalize.
inline std::vector<RegionSample> region_map(const Bounds& b, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  if (!(b.xmin <= b.xmax && b.ymin <= b.ymax))
    throw std::invalid_argument("bounds are empty");
  const long nx = static_cast<long>(std::floor((b.xmax - b.xmin) / step + 1e-9));
  const long ny = static_cast<long>(std::floor((b.ymax - b.ymin) / step + 1e-9));
  std::vector<RegionSample> out;
  out.reserve(static_cast<std::size_t>((nx + 1) * (ny + 1)));
  for (long iy = 0; iy <= ny; ++iy) {
    const double y = b.ymin + static_cast<double>(iy) * step;
    for (long ix = 0; ix <= nx; ++ix) {
      const double x = b.xmin + static_cast<double>(ix) * step;
      const AnalysisReport rep = select_strategy(normalize({x, y}));
      out.push_back({{x, y}, rep.label, rep.chosen_cr, rep.chosen_worst_t});
    }
  }
  return out;
}

// --- frontier curves ---------------------------------------------------------

// Height of the retrace/sweep tie above x, from eliminating the radicals in
// cr_a0 = cr_a1 when the sweep's worst failure is immediate. Returns nullopt
// where the quartic under the root goes negative (no such height). The locus
// is the actual frontier only while it stays outside the disk and the
// sweep's worst time clamps at 0; past that it is spurious, which is why
// consumers cross-check with bangbang_trace.
inline std::optional<double> outer_bangbang_y(double x) {
  if (x <= 0.0) throw std::domain_error("outer frontier needs x > 0");
  const double radicand = 1.0 + x * (-4.0 + x * (2.0 + x * (4.0 - 3.0 * x)));
  if (radicand < kRadicandClamp) return std::nullopt;
  return safe_sqrt(radicand) / (2.0 * x);
}

enum class BangBangPair { A0A1, A0Ad, AdBoundary };

// All three candidate ratios tie here; it sits on the disk boundary, where
// the inner frontier meets the arc. Found by bisecting the retrace/sweep
// difference along the arc, no frontier algebra involved.
inline Point triple_point() {
  auto diff = [](double theta) {
    const ProblemInstance inst = normalize({1.0 - std::cos(theta), std::sin(theta)});
    return cr_a0(inst).ratio - cr_a1_unchecked(inst).ratio;
  };
  double lo = 0.3, hi = 3.0;  // diff < 0 near the source end, > 0 near (2,0)
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    (diff(mid) < 0.0 ? lo : hi) = mid;
  }
  const double theta = 0.5 * (lo + hi);
  return {1.0 - std::cos(theta), std::sin(theta)};
}

namespace detail {

// Bisect f over [lo, hi]; requires a sign change.
template <typename F>
double bisect(F&& f, double lo, double hi, double tol) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

// Numeric trace of one frontier, sampled along its natural parameter. Points
// where the tie does not exist (or has drifted off the branch's validity)
// are filtered out, so the result may hold fewer than `samples` points.
inline std::vector<Point> bangbang_trace(BangBangPair pair, int samples = 50,
                                         double tol = 1e-8) {
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(samples));
  switch (pair) {
    case BangBangPair::A0A1: {
      // x in (0, 0.34]: past ~0.23 the sweep's worst time leaves 0 and the
      // closed locus stops being the frontier; those samples drop out.
      const double xlo = 0.005, xhi = 0.34;
      for (int i = 0; i < samples; ++i) {
        const double x = xlo + (xhi - xlo) * i / (samples - 1);
        const std::optional<double> seed = outer_bangbang_y(x);
        if (!seed) continue;
        const ProblemInstance on_curve = normalize({x, *seed});
        if (dest_disk_metric(on_curve) <= 1.0) continue;
        if (worst_fail_time_a1(on_curve).value() > 0.0) continue;
        auto f = [x](double y) {
          const ProblemInstance inst = normalize({x, y});
          return cr_a0(inst).ratio - cr_a1_unchecked(inst).ratio;
        };
        const double lo = *seed - 0.5, hi = *seed + 0.5;
        if (f(lo) * f(hi) >= 0.0) continue;
        out.push_back({x, detail::bisect(f, lo, hi, tol)});
      }
      return out;
    }
    case BangBangPair::A0Ad: {
      // x in (0, 0.3]: the tie lives under the disk arc until the triple
      // point; past it there is no sign change and samples drop out.
      const double xlo = 0.01, xhi = 0.3;
      for (int i = 0; i < samples; ++i) {
        const double x = xlo + (xhi - xlo) * i / (samples - 1);
        const double arc = safe_sqrt(1.0 - (x - 1.0) * (x - 1.0));
        auto f = [x](double y) {
          const ProblemInstance inst = normalize({x, y});
          return cr_a0(inst).ratio - cr_ad_unchecked(inst).ratio;
        };
        const double lo = 1e-9, hi = arc - 1e-9;
        if (f(lo) * f(hi) >= 0.0) continue;
        out.push_back({x, detail::bisect(f, lo, hi, tol)});
      }
      return out;
    }
    case BangBangPair::AdBoundary: {
      // The disk arc from (2,0) up to the triple point, seen from T.
      const Point tp = triple_point();
      const double theta_hi = std::atan2(tp.y, tp.x - 1.0);
      for (int i = 0; i < samples; ++i) {
        const double theta = theta_hi * i / (samples - 1);
        out.push_back({1.0 + std::cos(theta), std::sin(theta)});
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown frontier pair");
}

}  // namespace fdel
