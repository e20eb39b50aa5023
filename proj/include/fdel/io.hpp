#pragma once

// Output formats for analysis results: CSV for tables, JSON for structured
// reports, SVG for pictures of the plane. All numeric text goes through one
// formatter so identical inputs serialize byte-identically everywhere.

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fdel/hybrid.hpp"
#include "fdel/oracle.hpp"
#include "fdel/simulator.hpp"

namespace fdel {

using ordered_json = nlohmann::ordered_json;

// Shortest-ish fixed formatting; %.9g keeps grid coordinates exact and is
// stable across platforms for the value ranges used here.
inline std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

inline const char* to_string(SweepOrder order) {
  return order == SweepOrder::DownThenUp ? "down-then-up" : "up-then-down";
}

// --- CSV ---------------------------------------------------------------------

inline void write_region_csv(std::ostream& os, const std::vector<RegionSample>& samples) {
  os << "x,y,label,cr,worst_t\n";
  for (const RegionSample& s : samples)
    os << fmt9(s.p.x) << ',' << fmt9(s.p.y) << ',' << to_string(s.label) << ','
       << fmt9(s.cr) << ',' << fmt9(s.worst_t) << '\n';
}

inline void write_curve_csv(std::ostream& os, const std::vector<Point>& points) {
  os << "x,y\n";
  for (const Point& p : points) os << fmt9(p.x) << ',' << fmt9(p.y) << '\n';
}

// --- JSON --------------------------------------------------------------------

inline ordered_json point_json(const Point& p) { return ordered_json::array({p.x, p.y}); }

inline ordered_json analysis_json(const AnalysisReport& rep) {
  ordered_json j;
  j["instance"] = {{"x", rep.instance.finisher_start.x},
                   {"y", rep.instance.finisher_start.y},
                   {"folded", rep.instance.folded}};
  j["label"] = to_string(rep.label);
  j["cr"] = rep.chosen_cr;
  j["worst_t"] = rep.chosen_worst_t;
  if (rep.meet_x) j["meet_x"] = *rep.meet_x;
  ordered_json cands = ordered_json::array();
  for (const auto& [tag, cr] : rep.per_candidate)
    cands.push_back({{"kind", to_string(tag)},
                     {"cr", cr.ratio},
                     {"worst_t", cr.worst_t},
                     {"dist_to_dest", cr.dist_to_dest}});
  j["candidates"] = std::move(cands);
  return j;
}

inline ordered_json event_json(const SimEvent& e) {
  return {{"time", e.time},
          {"event", e.name},
          {"starter", point_json(e.starter)},
          {"finisher", point_json(e.finisher)}};
}

inline ordered_json outcome_json(const SimOutcome& out, bool with_events = false) {
  ordered_json j;
  j["delivery_time"] = out.delivery_time;
  j["pickup_time"] = out.pickup_time;
  j["pickup_point"] = point_json(out.pickup_point);
  if (with_events) {
    ordered_json ev = ordered_json::array();
    for (const SimEvent& e : out.events) ev.push_back(event_json(e));
    j["events"] = std::move(ev);
  }
  return j;
}

// One event object per line; streams cleanly into line-oriented tools.
inline void write_event_log(std::ostream& os, const std::vector<SimEvent>& events) {
  for (const SimEvent& e : events) os << event_json(e).dump() << '\n';
}

inline ordered_json region_json(const std::vector<RegionSample>& samples) {
  ordered_json arr = ordered_json::array();
  for (const RegionSample& s : samples)
    arr.push_back({{"x", s.p.x},
                   {"y", s.p.y},
                   {"label", to_string(s.label)},
                   {"cr", s.cr},
                   {"worst_t", s.worst_t}});
  return arr;
}

inline ordered_json curve_json(const std::vector<Point>& points) {
  ordered_json arr = ordered_json::array();
  for (const Point& p : points) arr.push_back(point_json(p));
  return arr;
}

inline ordered_json verification_json(const VerificationReport& rep) {
  ordered_json j;
  j["check"] = rep.check;
  j["samples"] = rep.samples;
  j["max_abs_error"] = rep.max_abs_error;
  j["passed"] = rep.passed;
  ordered_json vio = ordered_json::array();
  for (const Violation& v : rep.violations)
    vio.push_back({{"x", v.p.x},
                   {"y", v.p.y},
                   {"t", v.t},
                   {"expected", v.expected},
                   {"actual", v.actual},
                   {"what", v.what}});
  j["violations"] = std::move(vio);
  return j;
}

inline ordered_json worst_case_json(const GlobalWorstCase& w) {
  return {{"x", w.argmax.x}, {"y", w.argmax.y}, {"cr", w.cr}, {"label", to_string(w.label)}};
}

inline ordered_json single_turn_json(const SingleTurnResult& r) {
  return {{"best_ratio", r.best_ratio},
          {"best_a", r.best_a},
          {"best_order", to_string(r.best_order)}};
}

inline ordered_json triple_point_json(const TriplePointCheck& c) {
  return {{"newton", point_json(c.newton)},
          {"on_arc", point_json(c.on_arc)},
          {"cr", c.cr},
          {"max_pair_gap", c.max_pair_gap},
          {"converged", c.converged},
          {"passed", c.passed}};
}

// --- SVG ---------------------------------------------------------------------

inline const char* region_color(RegionLabel label) {
  switch (label) {
    case RegionLabel::ZA0: return "#4c78a8";
    case RegionLabel::ZA1: return "#f58518";
    default: return "#54a24b";
  }
}

// Row-major grid as run-length rects, one SVG unit per cell, y up.
inline void write_region_svg(std::ostream& os, const std::vector<RegionSample>& samples) {
  if (samples.empty()) throw std::invalid_argument("empty region map");
  std::size_t nx = 0;
  while (nx < samples.size() && samples[nx].p.y == samples[0].p.y) ++nx;
  if (samples.size() % nx != 0)
    throw std::invalid_argument("samples do not form a full grid");
  const std::size_t nrows = samples.size() / nx;

  const int width = 720;
  const int height = static_cast<int>(720.0 * static_cast<double>(nrows) /
                                      static_cast<double>(nx) + 0.5);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << nx << ' ' << nrows
     << "\" shape-rendering=\"crispEdges\">\n";
  for (std::size_t iy = 0; iy < nrows; ++iy) {
    const std::size_t row = iy * nx;
    const std::size_t svg_y = nrows - 1 - iy;
    std::size_t ix = 0;
    while (ix < nx) {
      std::size_t run = ix + 1;
      while (run < nx && samples[row + run].label == samples[row + ix].label) ++run;
      os << "<rect x=\"" << ix << "\" y=\"" << svg_y << "\" width=\"" << (run - ix)
         << "\" height=\"1\" fill=\"" << region_color(samples[row + ix].label) << "\"/>\n";
      ix = run;
    }
  }
  os << "</svg>\n";
}

inline void write_curve_svg(std::ostream& os, const std::vector<Point>& points) {
  if (points.size() < 2) throw std::invalid_argument("curve needs at least two points");
  double xmin = points[0].x, xmax = points[0].x;
  double ymin = points[0].y, ymax = points[0].y;
  for (const Point& p : points) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-3});
  const double pad = 0.05 * span;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"720\" viewBox=\""
     << fmt9(xmin - pad) << ' ' << fmt9(-pad) << ' ' << fmt9(xmax - xmin + 2.0 * pad) << ' '
     << fmt9(ymax - ymin + 2.0 * pad) << "\">\n<polyline fill=\"none\" stroke=\"#333\""
     << " stroke-width=\"" << fmt9(0.01 * span) << "\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) os << ' ';
    os << fmt9(points[i].x) << ',' << fmt9(ymax - points[i].y);
  }
  os << "\"/>\n</svg>\n";
}

}  // namespace fdel
