#include "prs/curves.hpp"

#include <algorithm>
#include <cmath>

#include "prs/errors.hpp"

namespace prs {

LearningCurve::LearningCurve(std::vector<CurvePoint> points) : points_(std::move(points)) {
  if (points_.size() < 2)
    throw InsufficientDataError("learning curve needs >= 2 points, got " +
                                std::to_string(points_.size()));
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].step <= points_[i - 1].step)
      throw ValidationError("learning curve steps must be strictly increasing");
  }
  if (points_.front().step < 0) throw ValidationError("learning curve steps must be >= 0");
}

double kendall_tau(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw ValidationError("kendall_tau: length mismatch " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  if (a.size() < 2) throw ValidationError("kendall_tau: need at least 2 elements");
  const std::size_t n = a.size();
  std::int64_t concordant = 0, discordant = 0, ties_a = 0, ties_b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double da = a[i] - a[j], db = b[i] - b[j];
      if (da == 0.0 && db == 0.0) {
        ++ties_a;
        ++ties_b;
      } else if (da == 0.0) {
        ++ties_a;
      } else if (db == 0.0) {
        ++ties_b;
      } else if ((da > 0.0) == (db > 0.0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const double n0 = 0.5 * static_cast<double>(n) * (static_cast<double>(n) - 1.0);
  const double denom = std::sqrt((n0 - static_cast<double>(ties_a)) *
                                 (n0 - static_cast<double>(ties_b)));
  if (denom == 0.0) return 0.0;  // all tied on one side; tau undefined, report 0
  return (static_cast<double>(concordant) - static_cast<double>(discordant)) / denom;
}

LearningCurve truncate(const LearningCurve& curve, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw ValidationError("truncate: fraction must be in (0,1], got " + std::to_string(fraction));
  const double cutoff = fraction * static_cast<double>(curve.max_step()) * (1.0 + 1e-12) + 1e-9;
  std::vector<CurvePoint> kept;
  for (const auto& p : curve.points()) {
    if (static_cast<double>(p.step) <= cutoff) kept.push_back(p);
  }
  if (kept.size() < 2)
    throw InsufficientDataError("truncate: fraction " + std::to_string(fraction) +
                                " leaves " + std::to_string(kept.size()) + " points");
  return LearningCurve(std::move(kept));
}

LinearFit fit_linear_tail(const LearningCurve& curve, int window) {
  if (window < 2 || static_cast<std::size_t>(window) > curve.size())
    throw ValidationError("fit_linear_tail: window " + std::to_string(window) +
                          " invalid for curve of " + std::to_string(curve.size()) + " points");
  const auto& pts = curve.points();
  const std::size_t start = pts.size() - static_cast<std::size_t>(window);
  double mean_t = 0.0, mean_y = 0.0;
  for (std::size_t i = start; i < pts.size(); ++i) {
    mean_t += static_cast<double>(pts[i].step);
    mean_y += pts[i].ne_gain;
  }
  mean_t /= window;
  mean_y /= window;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = start; i < pts.size(); ++i) {
    const double dt = static_cast<double>(pts[i].step) - mean_t;
    sxx += dt * dt;
    sxy += dt * (pts[i].ne_gain - mean_y);
  }
  if (sxx == 0.0) throw NumericError("fit_linear_tail: singular fit, tail steps identical");
  LinearFit fit;
  fit.m = sxy / sxx;
  fit.c = mean_y - fit.m * mean_t;
  fit.window = window;
  return fit;
}

double extrapolate_long_term(const LearningCurve& curve, int window, double delta_x) {
  if (delta_x < 0.0) throw ValidationError("extrapolate_long_term: delta_x must be >= 0");
  const LinearFit fit = fit_linear_tail(curve, window);
  return curve.final_ne() + fit.m * delta_x;
}

int default_tail_window(std::size_t observed_points, std::size_t full_grid_points) {
  int w = static_cast<int>(std::ceil(0.2 * static_cast<double>(full_grid_points)));
  w = std::max(2, w);
  return std::min<int>(w, static_cast<int>(observed_points));
}

double fidelity_metric_value(const LearningCurve& full_curve, double fraction,
                             FidelityMetric metric, std::size_t full_grid_points) {
  const LearningCurve cut = truncate(full_curve, fraction);
  if (metric == FidelityMetric::Raw) return cut.final_ne();
  const double delta_x =
      static_cast<double>(full_curve.max_step()) - static_cast<double>(cut.max_step());
  const int w = default_tail_window(cut.size(), full_grid_points);
  return extrapolate_long_term(cut, w, delta_x);
}

std::vector<double> default_candidate_fractions() { return {0.4, 0.44, 0.5, 1.0}; }

FidelityReport select_fidelity(const std::vector<LearningCurve>& pilot_curves,
                               FidelityMetric metric,
                               const std::vector<double>& fractions,
                               double threshold) {
  if (pilot_curves.size() < 5)
    throw InsufficientDataError("select_fidelity: need >= 5 pilot curves, got " +
                                std::to_string(pilot_curves.size()));
  const std::int64_t horizon = pilot_curves.front().max_step();
  const std::size_t grid = pilot_curves.front().size();
  for (const auto& c : pilot_curves) {
    if (c.max_step() != horizon)
      throw ValidationError("select_fidelity: pilots must share the full horizon");
  }
  std::vector<double> final_ranking;
  final_ranking.reserve(pilot_curves.size());
  for (const auto& c : pilot_curves) final_ranking.push_back(c.final_ne());

  FidelityReport report;
  report.candidate_fractions = fractions;
  report.threshold = threshold;
  report.chosen_fraction = 1.0;
  for (double f : fractions) {
    std::vector<double> vals;
    vals.reserve(pilot_curves.size());
    for (const auto& c : pilot_curves)
      vals.push_back(fidelity_metric_value(c, f, metric, grid));
    report.taus.push_back(kendall_tau(vals, final_ranking));
  }
  std::vector<std::size_t> order(fractions.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return fractions[x] < fractions[y]; });
  for (std::size_t i : order) {
    if (report.taus[i] >= threshold) {
      report.chosen_fraction = fractions[i];
      report.threshold_met = true;
      break;
    }
  }
  return report;
}

}  // namespace prs
