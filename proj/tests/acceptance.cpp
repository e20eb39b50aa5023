// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Tolerances are pinned here on purpose; loosening them is not a fix.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "fdel/fdel.hpp"

using namespace fdel;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%s] %d. %s%s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
              detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// 1. Worst start point over the unit box: ratio 1.74197 at (0.275257, 0.689019).
void criterion_1() {
  Timer timer;
  const GlobalWorstCase w = global_worst_case({0.0, 1.0, 0.0, 1.0}, 0.01, 1e-6);
  const double dt = timer.secs();
  const bool ok = std::fabs(w.cr - 1.74197) <= 1e-3 &&
                  std::fabs(w.argmax.x - 0.275257) <= 5e-3 &&
                  std::fabs(w.argmax.y - 0.689019) <= 5e-3 && dt < 30.0;
  report(1, ok, "global worst case in [0,1]^2",
         fmt("cr=%.6f at (%.6f, %.6f)", w.cr, w.argmax.x, w.argmax.y) +
             fmt(", %.1fs", dt));
}

// 2. Ratios over [-3,3]x[0,3] stay in [1,3]; labels respect the disk; the
//    retrace formula attains 3 at (2,0) and approaches it monotonically on
//    the axis from the right.
void criterion_2() {
  Timer timer;
  const std::vector<RegionSample> map = region_map({-3.0, 3.0, 0.0, 3.0}, 0.01);
  double max_cr = 1.0, min_cr = 1e300;
  int partition_bad = 0;
  for (const RegionSample& s : map) {
    max_cr = std::max(max_cr, s.cr);
    min_cr = std::min(min_cr, s.cr);
    const double metric = dest_disk_metric(s.p);
    if (s.label == RegionLabel::ZA1 && metric <= 1.0) ++partition_bad;
    if (s.label == RegionLabel::ZAd && metric > 1.0 + 1e-12) ++partition_bad;
  }
  bool approach_ok = cr_a0(normalize({2.0, 0.0})).ratio == 3.0;
  double prev = 0.0;  // (3+h)/(1+h) climbs toward 3 as h drops
  for (const double h : {0.5, 0.25, 0.1, 0.05, 0.01, 0.001}) {
    const double r = cr_a0(normalize({2.0 + h, 0.0})).ratio;
    const double gap = 2.0 * h / (1.0 + h);
    approach_ok = approach_ok && r > prev && r < 3.0 && std::fabs(3.0 - r - gap) < 1e-12;
    prev = r;
  }
  const double dt = timer.secs();
  const bool ok = max_cr <= 3.0 && min_cr >= 1.0 && partition_bad == 0 && approach_ok &&
                  dt < 60.0;
  report(2, ok, "ratio bound 3 over [-3,3]x[0,3]",
         fmt("max=%.6f min=%.6f", max_cr, min_cr) +
             fmt(", partition violations=%.0f, %.1fs", partition_bad, dt));
}

// 3. Each closed-form worst case matches a simulation sweep on 1000 random
//    starts per validity region.
void criterion_3() {
  Timer timer;
  bool ok = true;
  std::ostringstream detail;
  for (const CandidateTag tag : {CandidateTag::A0, CandidateTag::A1, CandidateTag::Ad}) {
    const VerificationReport rep = verify_candidate_cr(tag, 1000, 42, SupOptions{1e-4, 1e-8});
    ok = ok && rep.passed;
    detail << to_string(tag) << " err=" << fmt("%.2e", rep.max_abs_error)
           << (rep.passed ? "" : " FAILED") << "  ";
  }
  const double dt = timer.secs();
  ok = ok && dt < 120.0;
  report(3, ok, "closed-form ratios vs simulation, 1000 samples each",
         detail.str() + fmt("%.1fs", dt));
}

// 4. Sweep and handover tie on 100 circle points to 1e-9 and dominate each
//    other on the correct sides.
void criterion_4() {
  const VerificationReport rep = check_ad_vs_a1(100, 42);
  const bool ok = rep.passed && rep.max_abs_error <= 1e-9;
  report(4, ok, "disk-boundary tie and dominance",
         fmt("boundary err=%.2e, violations=%.0f", rep.max_abs_error,
             static_cast<double>(rep.violations.size())));
}

// 5. No single-turn route beats the selected strategy by more than 1e-4 on
//    200 random instances (a-grid 1e-3, both sweep orders).
void criterion_5() {
  Timer timer;
  const VerificationReport rep =
      verify_hybrid_optimality(200, 42, 1e-3, SupOptions{1e-3, 1e-8});
  report(5, rep.passed, "selection optimal among single-turn routes",
         fmt("max gap=%.2e, %.1fs", rep.max_abs_error, timer.secs()));
}

// 6. Simulator and closed forms agree to 1e-9 on 100 (instance, t) pairs per
//    candidate.
void criterion_6() {
  const VerificationReport rep = verify_simulator(100, 42);
  const bool ok = rep.passed && rep.max_abs_error <= 1e-9;
  report(6, ok, "simulated vs closed delivery times",
         fmt("max err=%.2e", rep.max_abs_error));
}

// 7. The traced outer boundary ties both ratios, matches the closed-form
//    curve, and reproduces the spot value at x = 0.2.
void criterion_7() {
  const std::vector<Point> trace = bangbang_trace(BangBangPair::A0A1, 50, 1e-10);
  bool ok = trace.size() >= 25;
  double max_tie = 0.0, max_curve = 0.0;
  for (const Point& p : trace) {
    const ProblemInstance inst = normalize(p);
    max_tie = std::max(max_tie,
                       std::fabs(cr_a0(inst).ratio - cr_a1_unchecked(inst).ratio));
    ok = ok && worst_fail_time_a1(inst).value() == 0.0;
    const auto closed = outer_bangbang_y(p.x);
    ok = ok && closed.has_value();
    if (closed) max_curve = std::max(max_curve, std::fabs(p.y - *closed));
  }
  ok = ok && max_tie <= 1e-8 && max_curve <= 1e-6;

  const auto y02 = outer_bangbang_y(0.2);
  ok = ok && y02 && std::fabs(*y02 - 1.3856406460551018) <= 1e-9;
  if (y02) {
    const ProblemInstance spot = normalize({0.2, *y02});
    ok = ok && std::fabs(cr_a0(spot).ratio - 1.5) <= 1e-12 &&
         std::fabs(cr_a1_unchecked(spot).ratio - 1.5) <= 1e-12;
  }
  report(7, ok, "outer boundary trace vs closed form",
         fmt("points=%.0f tie=%.2e curve gap=%.2e", static_cast<double>(trace.size()),
             max_tie, max_curve));
}

// 8. At x = 1 the worst fail time is max{1 - 3y/4, 0}: checked against a
//    brute-force argmax of the sweep-back ratio with the optimum not yet
//    clamped at 1 (the regime the branch formula solves).
void criterion_8() {
  bool ok = true;
  std::ostringstream detail;
  for (const double y : {0.4, 0.8, 1.2}) {
    const auto g = [y](double t) {
      return (y + 2.0 * (1.0 - t)) / (std::hypot(1.0 - t, y) + 1.0 - t);
    };
    double best_t = 0.0, best_v = g(0.0);
    for (long i = 1; i <= 100000; ++i) {
      const double t = static_cast<double>(i) * 1e-5;
      const double v = g(t);
      if (v > best_v) {
        best_v = v;
        best_t = t;
      }
    }
    const double formula = std::max(1.0 - 0.75 * y, 0.0);
    const double branch = worst_fail_time_a1(normalize({1.0, y})).value();
    ok = ok && std::fabs(best_t - formula) <= 1e-4 && branch == formula;
    detail << fmt("y=%.1f argmax=%.5f", y, best_t) << "  ";
  }
  report(8, ok, "worst fail time branch at x = 1", detail.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::printf("ACCEPTANCE: %d/8 passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
