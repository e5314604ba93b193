#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "prs/curves.hpp"
#include "prs/space.hpp"

namespace prs {

// Curve-shape model: ne(t) = a + b * t^(-gamma) + noise, with b derived from
// the surface (curves start at ~zero gain and descend toward the asymptote).
// A small seeded subpopulation are "slow learners" whose curves are barely
// converged at the horizon; their low-fidelity labels badly understate them.
struct CurveModel {
  double gamma_lo = 0.35;
  double gamma_hi = 1.45;
  double slow_frac = 0.10;
  double slow_gamma_lo = 0.03;
  double slow_gamma_hi = 0.10;
};

struct CurveParams {
  double asymptote = 0.0;  // a, the true long-term NE gain
  double amplitude = 0.0;  // b
  double rate = 0.0;       // gamma
};

struct EvalResult {
  std::string config_id;
  LearningCurve curve;
  double flops = 0.0;
  double cost_units = 0.0;       // fidelity_fraction of one full evaluation
  double true_long_term_ne = 0.0;  // hidden ground truth; test/report use only
};

// Seeded synthetic evaluation environment standing in for real model training.
class SynthBenchmark {
 public:
  static constexpr int kGridPoints = 25;

  SynthBenchmark(SearchSpace space, std::uint64_t seed, double noise_std,
                 CurveModel model = {});

  const SearchSpace& space() const { return space_; }
  std::uint64_t seed() const { return seed_; }
  double noise_std() const { return noise_std_; }
  const CurveModel& model() const { return model_; }

  // Truth accessors (hidden from searchers; used by tests and reports).
  double true_long_term(const Config& config) const;
  CurveParams curve_params(const Config& config) const;

  double flops_of(const Config& config) const;
  double flops_factor(std::size_t decision_idx, std::size_t choice_idx) const;
  double main_effect(std::size_t decision_idx, std::size_t choice_idx) const;

  EvalResult evaluate(const Config& config, double fidelity_fraction,
                      std::uint64_t eval_seed) const;

  // Exact argmin of (1-alpha)*z(true NE) + alpha*z(log10 FLOPs) by enumeration.
  std::pair<Config, double> true_optimum(double alpha, std::size_t cap = 1000000) const;

  std::string to_json() const;  // space + seed + noise_std; surfaces regenerate
  static SynthBenchmark from_json(const std::string& text);

 private:
  SearchSpace space_;
  std::uint64_t seed_ = 0;
  double noise_std_ = 0.005;
  CurveModel model_;
  std::vector<std::vector<double>> main_;       // [decision][choice] NE contribution
  std::vector<std::vector<double>> flops_fac_;  // [decision][choice] cost factor
  // sparse interactions: (decision i, decision j) -> cell table [ci][cj]
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<double>>> inter_;

  std::vector<std::size_t> choice_indices(const Config& config) const;
};

}  // namespace prs
