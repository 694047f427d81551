#pragma once

#include <cstddef>
#include <vector>

#include "thinset/sampler.hpp"
#include "thinset/trig_polynomial.hpp"

namespace thinset {

/// Monte Carlo estimate of E || sum_g Z_g c_g e_g ||_inf.
struct NormEstimate {
  double value = 0.0;   // median of group means (p < 2) or plain mean
  std::size_t trials = 0;
  std::size_t groups = 0;
  double spread = 0.0;  // interquartile range of the group means
  double grid_tol = 1e-3;
  std::vector<double> group_means;
};

inline constexpr double kBracketGridTol = 1e-3;

/// ceil(trials^{1/3}).
std::size_t default_groups(std::size_t trials);

/// Sup norms of `trials` randomised copies of f; trial t draws from the
/// stream (d.seed, d.stream_id, t).
std::vector<double> bracket_samples(const TrigPolynomial& f, const DriverDistribution& d,
                                    std::size_t trials, double grid_tol = kBracketGridTol);

/// Aggregates per-trial values; the result is a function of the multiset of
/// group means only.
NormEstimate summarize_samples(const std::vector<double>& samples, std::size_t groups,
                               bool median_of_means);

/// groups == 0 selects default_groups(trials).
NormEstimate estimate_bracket(const TrigPolynomial& f, const DriverDistribution& d,
                              std::size_t trials, std::size_t groups = 0);

/// sum_{k>=2} (k (log k)^{1/p})^{-1} (sum_{j>=k} |c_j|^p)^{1/p}; spectrum must be
/// in the positive integers. The absolute constant is taken as 1.
double mp_tail_bound(const TrigPolynomial& f, double p);

/// n^{1/p} (log lambda_max)^{1/p'}.
double zero_one_upper(std::size_t n, Frequency lambda_max, double p);

/// N^{1/p} (log N)^{1/p'} (sum |c_j|) / N with N the largest frequency.
double sz_lower(const TrigPolynomial& f, double p);

}  // namespace thinset
