#include <catch_amalgamated.hpp>

#include <cmath>

#include "fdel/geometry.hpp"
#include "fdel/hybrid.hpp"
#include "fdel/oracle.hpp"

using namespace fdel;
using Catch::Matchers::WithinAbs;

TEST_CASE("region samplers respect their regions and are deterministic") {
  SeededRng a(1), b(1);
  for (int i = 0; i < 50; ++i) {
    const Point out = sample_outside_disk(a);
    CHECK(dest_disk_metric(out) > 1.0);
    const Point in = sample_inside_disk(a);
    CHECK(dest_disk_metric(in) < 1.0);
    CHECK(in.x >= 1e-2);
    const Point re = sample_retrace_start(a);
    CHECK(re.y >= 1e-6);
  }
  SeededRng a2(1);
  for (int i = 0; i < 5; ++i) {
    const Point p = sample_outside_disk(a2), q = sample_outside_disk(b);
    CHECK(p.x == q.x);
    CHECK(p.y == q.y);
  }
}

TEST_CASE("closed worst cases survive a simulation sweep") {
  for (const CandidateTag tag : {CandidateTag::A0, CandidateTag::A1, CandidateTag::Ad}) {
    const VerificationReport rep = verify_candidate_cr(tag, 25, 42);
    INFO(rep.check);
    CHECK(rep.passed);
    CHECK(rep.samples == 25);
    CHECK(rep.violations.empty());
    CHECK(rep.max_abs_error < 1e-6);
  }
}

TEST_CASE("sweep and handover trade places exactly at the disk boundary") {
  const VerificationReport rep = check_ad_vs_a1(20, 7, SupOptions{1e-3, 1e-8});
  INFO(rep.check);
  CHECK(rep.passed);
  CHECK(rep.max_abs_error < 1e-9);
}

TEST_CASE("simulator agrees with closed delivery times at random fail times") {
  const VerificationReport rep = verify_simulator(40, 42);
  CHECK(rep.passed);
  CHECK(rep.samples == 120);
  CHECK(rep.max_abs_error < 1e-9);
}

TEST_CASE("exhaustive single-turn search lands on the handover route inside the disk") {
  const ProblemInstance inst = normalize({0.5, 0.5});
  const SingleTurnResult best = best_single_turn(inst, 0.01, SupOptions{1e-3, 1e-8});
  CHECK_THAT(best.best_ratio, WithinAbs(cr_ad(inst).ratio, 1e-3));
  CHECK_THAT(best.best_a, WithinAbs(0.5, 0.011));
  CHECK(best.best_order == SweepOrder::DownThenUp);

  CHECK_THROWS_AS(best_single_turn(inst, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(best_single_turn(inst, 0.7), std::invalid_argument);
}

TEST_CASE("selection is optimal among single-turn routes on a small draw") {
  const VerificationReport rep =
      verify_hybrid_optimality(4, 11, 5e-3, SupOptions{2e-3, 1e-6});
  INFO(rep.check);
  CHECK(rep.passed);
  CHECK(rep.max_abs_error < 1e-4);
}

TEST_CASE("global worst case over the failure segment's unit box") {
  const GlobalWorstCase w = global_worst_case({0.0, 1.0, 0.0, 1.0}, 0.02);
  const Point tp = triple_point();
  CHECK_THAT(w.cr, WithinAbs(1.7419653, 1e-5));
  CHECK_THAT(w.argmax.x, WithinAbs(tp.x, 1e-3));
  CHECK_THAT(w.argmax.y, WithinAbs(tp.y, 1e-3));

  const GlobalWorstCase pt = global_worst_case({0.3, 0.3, 0.4, 0.4}, 0.02);
  CHECK(pt.argmax.x == 0.3);
  CHECK(pt.argmax.y == 0.4);
  CHECK_THAT(pt.cr, WithinAbs(select_strategy(normalize({0.3, 0.4})).chosen_cr, 1e-12));

  CHECK_THROWS_AS(global_worst_case({1.0, 0.0, 0.0, 1.0}, 0.02), std::invalid_argument);
  CHECK_THROWS_AS(global_worst_case({0.0, 1.0, 0.0, 1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("Newton and arc bisection find the same three-way tie") {
  const TriplePointCheck c = check_triple_point();
  CHECK(c.converged);
  CHECK(c.passed);
  CHECK(c.max_pair_gap < 1e-9);
  CHECK_THAT(c.newton.x, WithinAbs(0.275257, 5e-6));
  CHECK_THAT(c.newton.y, WithinAbs(0.689019, 5e-6));
  CHECK_THAT(c.cr, WithinAbs(1.741965, 5e-6));
  CHECK_THAT(dest_disk_metric(c.newton), WithinAbs(1.0, 1e-9));
  CHECK_THAT(c.newton.x, WithinAbs(c.on_arc.x, 1e-6));
  CHECK_THAT(c.newton.y, WithinAbs(c.on_arc.y, 1e-6));
}
