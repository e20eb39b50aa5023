// A short tour: pick strategies for a few start points, replay one failure,
// and search a window for the worst start.

#include <cstdio>

#include "fdel/fdel.hpp"

int main() {
  using namespace fdel;

  for (const Point p : {Point{0.0, 1.0}, Point{0.5, 0.5}, Point{2.0, 0.0}, Point{0.5, 1.0}}) {
    const AnalysisReport rep = select_strategy(normalize(p));
    std::printf("start (%g, %g): run %s, worst ratio %.6f at fail time %.4f\n", p.x, p.y,
                to_string(rep.label), rep.chosen_cr, rep.chosen_worst_t);
  }

  const ProblemInstance inst = normalize({0.9, 0.4});
  const SimOutcome out =
      simulate(inst, trajectory_of(inst, CandidateKind::ad()), FailTime(0.7));
  std::printf("\nreplay from (0.9, 0.4), starter fails at t = 0.7:\n");
  for (const SimEvent& e : out.events)
    std::printf("  t=%.4f %-8s starter (%.3f, %.3f)  finisher (%.3f, %.3f)\n", e.time,
                e.name.c_str(), e.starter.x, e.starter.y, e.finisher.x, e.finisher.y);
  std::printf("delivered at t = %.6f\n", out.delivery_time);

  const GlobalWorstCase w = global_worst_case({0.0, 1.0, 0.0, 1.0}, 0.02);
  std::printf("\nworst start in [0,1]^2: (%.6f, %.6f), ratio %.6f, strategy %s\n", w.argmax.x,
              w.argmax.y, w.cr, to_string(w.label));
  return 0;
}
