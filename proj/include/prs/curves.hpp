#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prs {

struct CurvePoint {
  std::int64_t step = 0;   // training examples consumed
  double ne_gain = 0.0;    // NE delta vs baseline; negative is better
};

// (step, ne_gain) series from one trial. Steps strictly increasing, >= 2 points.
class LearningCurve {
 public:
  LearningCurve() = default;
  explicit LearningCurve(std::vector<CurvePoint> points);

  const std::vector<CurvePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::int64_t max_step() const { return points_.back().step; }
  double final_ne() const { return points_.back().ne_gain; }

 private:
  std::vector<CurvePoint> points_;
};

struct LinearFit {
  double m = 0.0;      // slope, NE-gain per step
  double c = 0.0;      // intercept
  int window = 0;      // tail points used
};

struct FidelityReport {
  std::vector<double> candidate_fractions;
  std::vector<double> taus;
  double chosen_fraction = 1.0;
  double threshold = 0.0;
  bool threshold_met = false;
};

// Kendall tau-b with tie correction; O(n^2) pair counting.
double kendall_tau(const std::vector<double>& a, const std::vector<double>& b);

// Keeps points with step <= fraction * max step.
LearningCurve truncate(const LearningCurve& curve, double fraction);

// Ordinary least squares over the last `window` points.
LinearFit fit_linear_tail(const LearningCurve& curve, int window);

// Last observed ne_gain + slope * delta_x.
double extrapolate_long_term(const LearningCurve& curve, int window, double delta_x);

// Default tail window: 20% of the full-horizon grid, at least 2, clamped to
// the number of observed points.
int default_tail_window(std::size_t observed_points, std::size_t full_grid_points);

enum class FidelityMetric { Raw, Extrapolated };

// Ranks pilots by the metric at each candidate fraction and correlates with
// the final-horizon ranking; chooses the smallest fraction whose tau meets
// the threshold (chosen_fraction = 1 with threshold_met=false otherwise).
FidelityReport select_fidelity(const std::vector<LearningCurve>& pilot_curves,
                               FidelityMetric metric,
                               const std::vector<double>& fractions,
                               double threshold);

// Metric value for one curve at one fraction (shared by select_fidelity and
// the label pipeline): raw = last truncated ne, extrapolated = Eq-style
// linear-tail projection to the full horizon.
double fidelity_metric_value(const LearningCurve& full_curve, double fraction,
                             FidelityMetric metric, std::size_t full_grid_points);

std::vector<double> default_candidate_fractions();

}  // namespace prs
