// fdel: worst-case analysis of two-drone delivery with one faulty drone.
//
//   fdel analyze   --x 0.5 --y 0.5 [--t 0.3]   one start point in depth
//   fdel regions   [--xmin -1 ... --step 0.01] label/ratio map of the plane
//   fdel curve     --which a0a1|a0ad|adboundary region boundary polylines
//   fdel worstcase [--xmin 0 --xmax 1 ...]     worst start point in a window
//   fdel verify    [--suite all --samples 200] numeric verification suite
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.
// Identical flags (and seed) produce byte-identical output. Defaults can
// also be set through FD_-prefixed environment variables (FD_SEED, ...).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fdel/fdel.hpp"

namespace {

using namespace fdel;

template <typename Fn>
int with_output(const std::string& path, Fn&& fn) {
  if (path == "-") {
    fn(std::cout);
    return 0;
  }
  std::ofstream ofs(path, std::ios::binary);
  if (!ofs) {
    std::cerr << "fdel: cannot open '" << path << "' for writing\n";
    return 2;
  }
  fn(ofs);
  return 0;
}

CandidateKind kind_for(CandidateTag tag) {
  switch (tag) {
    case CandidateTag::A0: return CandidateKind::a0();
    case CandidateTag::A1: return CandidateKind::a1();
    default: return CandidateKind::ad();
  }
}

int run_analyze(double x, double y, std::optional<double> t, const std::string& format,
                const std::string& out) {
  const ProblemInstance inst = normalize({x, y});
  const AnalysisReport rep = select_strategy(inst);
  if (format == "csv") {
    return with_output(out, [&](std::ostream& os) {
      os << "x,y,label,cr,worst_t\n"
         << fmt9(inst.finisher_start.x) << ',' << fmt9(inst.finisher_start.y) << ','
         << to_string(rep.label) << ',' << fmt9(rep.chosen_cr) << ','
         << fmt9(rep.chosen_worst_t) << '\n';
    });
  }
  ordered_json j = analysis_json(rep);
  if (t) {
    const FailTime ft(*t);
    ordered_json at;
    at["t"] = *t;
    at["opt"] = opt_delivery_time(inst, ft);
    ordered_json cands = ordered_json::array();
    for (const auto& [tag, cr] : rep.per_candidate) {
      (void)cr;
      cands.push_back({{"kind", to_string(tag)},
                       {"delivery", delivery_time(inst, kind_for(tag), ft)},
                       {"ratio", cr_at(inst, kind_for(tag), ft)}});
    }
    at["candidates"] = std::move(cands);
    j["at_t"] = std::move(at);

    const SimOutcome sim = simulate(inst, trajectory_of(inst, kind_of(rep.label)), ft);
    ordered_json run;
    run["kind"] = to_string(rep.label);
    run.update(outcome_json(sim, true));
    j["run"] = std::move(run);
  }
  return with_output(out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

int run_regions(const Bounds& b, double step, const std::string& format,
                const std::string& out) {
  const std::vector<RegionSample> samples = region_map(b, step);
  return with_output(out, [&](std::ostream& os) {
    if (format == "csv")
      write_region_csv(os, samples);
    else if (format == "json")
      os << region_json(samples).dump(2) << '\n';
    else
      write_region_svg(os, samples);
  });
}

int run_curve(const std::string& which, int samples, double xmin, double xmax,
              bool closed_form, const std::string& format, const std::string& out) {
  std::vector<Point> pts;
  if (closed_form) {
    if (which != "a0a1") {
      std::cerr << "fdel: --closed-form is only available for --which a0a1\n";
      return 2;
    }
    for (int i = 0; i < samples; ++i) {
      const double x =
          samples == 1 ? xmin : xmin + (xmax - xmin) * static_cast<double>(i) / (samples - 1);
      if (const auto y = outer_bangbang_y(x)) pts.push_back({x, *y});
    }
  } else {
    // Traced curves live on intrinsic x ranges (where both ratios are
    // defined and actually cross); --xmin/--xmax apply to --closed-form.
    const BangBangPair pair = which == "a0a1"   ? BangBangPair::A0A1
                              : which == "a0ad" ? BangBangPair::A0Ad
                                                : BangBangPair::AdBoundary;
    pts = bangbang_trace(pair, samples);
  }
  return with_output(out, [&](std::ostream& os) {
    if (format == "csv")
      write_curve_csv(os, pts);
    else if (format == "json")
      os << curve_json(pts).dump(2) << '\n';
    else
      write_curve_svg(os, pts);
  });
}

int run_worstcase(const Bounds& b, double step, const std::string& out) {
  const GlobalWorstCase w = global_worst_case(b, step);
  return with_output(out, [&](std::ostream& os) { os << worst_case_json(w).dump(2) << '\n'; });
}

int run_verify(const std::string& suite, int samples, std::uint64_t seed, double t_step,
               double a_step, double step, const std::string& out) {
  const auto want = [&](const char* name) { return suite == "all" || suite == name; };
  ordered_json list = ordered_json::array();
  bool all_passed = true;
  const auto add = [&](const VerificationReport& rep) {
    list.push_back(verification_json(rep));
    all_passed = all_passed && rep.passed;
  };

  if (want("theorems"))
    for (const CandidateTag tag : {CandidateTag::A0, CandidateTag::A1, CandidateTag::Ad})
      add(verify_candidate_cr(tag, samples, seed, SupOptions{t_step, 1e-8}));
  if (want("lemma3")) add(check_ad_vs_a1(samples, seed, SupOptions{t_step, 1e-8}));
  if (want("simulator")) add(verify_simulator(samples, seed));
  if (want("hybrid-opt"))
    // The inner fail-time grid is pinned at 1e-3: the exhaustive search runs
    // ~2000 routes per instance and the dominance margin is only 1e-4.
    add(verify_hybrid_optimality(samples, seed, a_step, SupOptions{1e-3, 1e-8}));
  if (want("triple-point")) {
    const TriplePointCheck c = check_triple_point();
    ordered_json j;
    j["check"] = "three-way tie location, two independent routes";
    j["samples"] = 2;
    j["max_abs_error"] = c.max_pair_gap;
    j["passed"] = c.passed;
    j["violations"] = ordered_json::array();
    j["detail"] = triple_point_json(c);
    list.push_back(std::move(j));
    all_passed = all_passed && c.passed;
  }
  if (want("bound")) add(verify_ratio_bounds({-3.0, 3.0, 0.0, 3.0}, step));

  const int rc = with_output(out, [&](std::ostream& os) { os << list.dump(2) << '\n'; });
  if (rc != 0) return rc;
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"worst-case analysis of two-drone delivery with one faulty drone"};
  app.require_subcommand(1);

  std::string out = "-";
  std::string format = "";  // per-command default applied after parse

  double x = 0.0, y = 0.0, t = 0.0;
  auto* analyze = app.add_subcommand("analyze", "analyze one finisher start point");
  analyze->add_option("--x", x, "finisher start x")->required();
  analyze->add_option("--y", y, "finisher start y (folded to y >= 0)")->required();
  auto* opt_t = analyze->add_option("--t", t, "also evaluate this fail time in [0,1]");
  analyze->add_option("--out", out, "output path, - for stdout")->envname("FD_OUT");
  analyze->add_option("--format", format, "csv or json (default json)")
      ->check(CLI::IsMember({"csv", "json"}));

  Bounds region_bounds;  // {-1, 3, 0, 2}
  double step = 0.01;
  auto* regions = app.add_subcommand("regions", "map selected strategy over the plane");
  regions->add_option("--xmin", region_bounds.xmin, "window x lower edge");
  regions->add_option("--xmax", region_bounds.xmax, "window x upper edge");
  regions->add_option("--ymin", region_bounds.ymin, "window y lower edge");
  regions->add_option("--ymax", region_bounds.ymax, "window y upper edge");
  regions->add_option("--step", step, "grid spacing")
      ->check(CLI::PositiveNumber)
      ->envname("FD_STEP");
  regions->add_option("--out", out, "output path, - for stdout")->envname("FD_OUT");
  regions->add_option("--format", format, "csv, json, or svg (default csv)")
      ->check(CLI::IsMember({"csv", "json", "svg"}));

  std::string which = "a0a1";
  int curve_samples = 50;
  double cxmin = 0.005, cxmax = 0.34;
  bool closed_form = false;
  auto* curve = app.add_subcommand("curve", "trace a region boundary curve");
  curve->add_option("--which", which, "a0a1, a0ad, or adboundary")
      ->check(CLI::IsMember({"a0a1", "a0ad", "adboundary"}));
  curve->add_option("--samples", curve_samples, "points to attempt along the curve")
      ->check(CLI::PositiveNumber)
      ->envname("FD_SAMPLES");
  curve->add_flag("--closed-form", closed_form,
                  "emit the closed-form outer curve instead of tracing (a0a1 only)");
  curve->add_option("--xmin", cxmin, "closed-form x lower edge");
  curve->add_option("--xmax", cxmax, "closed-form x upper edge");
  curve->add_option("--out", out, "output path, - for stdout")->envname("FD_OUT");
  curve->add_option("--format", format, "csv, json, or svg (default csv)")
      ->check(CLI::IsMember({"csv", "json", "svg"}));

  Bounds wc_bounds{0.0, 1.0, 0.0, 1.0};
  double wc_step = 0.01;
  auto* worstcase = app.add_subcommand("worstcase", "find the worst start point in a window");
  worstcase->add_option("--xmin", wc_bounds.xmin, "window x lower edge");
  worstcase->add_option("--xmax", wc_bounds.xmax, "window x upper edge");
  worstcase->add_option("--ymin", wc_bounds.ymin, "window y lower edge");
  worstcase->add_option("--ymax", wc_bounds.ymax, "window y upper edge");
  worstcase->add_option("--step", wc_step, "coarse grid spacing before refinement")
      ->check(CLI::PositiveNumber)
      ->envname("FD_STEP");
  worstcase->add_option("--out", out, "output path, - for stdout")->envname("FD_OUT");
  worstcase->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

  std::string suite = "all";
  int samples = 200;
  std::uint64_t seed = 42;
  double t_step = 1e-4, a_step = 1e-3, bound_step = 0.01;
  auto* verify = app.add_subcommand("verify", "run the numeric verification suite");
  verify->add_option("--suite", suite, "which checks to run")
      ->check(CLI::IsMember(
          {"all", "theorems", "lemma3", "simulator", "hybrid-opt", "triple-point", "bound"}));
  verify->add_option("--samples", samples, "random draws per check")
      ->check(CLI::PositiveNumber)
      ->envname("FD_SAMPLES");
  verify->add_option("--seed", seed, "PRNG seed")->envname("FD_SEED");
  verify->add_option("--t-step", t_step, "fail-time grid for numeric suprema")
      ->check(CLI::PositiveNumber)
      ->envname("FD_T_STEP");
  verify->add_option("--a-step", a_step, "touch-point grid for the single-turn search")
      ->check(CLI::PositiveNumber)
      ->envname("FD_A_STEP");
  verify->add_option("--step", bound_step, "grid spacing for the bound suite")
      ->check(CLI::PositiveNumber)
      ->envname("FD_STEP");
  verify->add_option("--out", out, "output path, - for stdout")->envname("FD_OUT");
  verify->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze)
      return run_analyze(x, y, opt_t->count() ? std::optional<double>(t) : std::nullopt,
                         format.empty() ? "json" : format, out);
    if (*regions) return run_regions(region_bounds, step, format.empty() ? "csv" : format, out);
    if (*curve)
      return run_curve(which, curve_samples, cxmin, cxmax, closed_form,
                       format.empty() ? "csv" : format, out);
    if (*worstcase) return run_worstcase(wc_bounds, wc_step, out);
    return run_verify(suite, samples, seed, t_step, a_step, bound_step, out);
  } catch (const std::exception& e) {
    std::cerr << "fdel: " << e.what() << '\n';
    return 2;
  }
}
