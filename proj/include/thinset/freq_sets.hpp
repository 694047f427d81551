#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "thinset/freq_set.hpp"

namespace thinset {

/// Families of example frequency sets.
struct SetKind {
  enum class Tag { squares, powers, sums_of_powers, interval, random };

  Tag tag = Tag::squares;
  Frequency base = 2;     // powers, sums_of_powers
  int terms = 1;          // sums_of_powers: number of distinct powers d
  double density = 0.0;   // random
  std::uint64_t seed = 0; // random

  static SetKind squares() { return {Tag::squares}; }
  static SetKind powers(Frequency b) { return {Tag::powers, b}; }
  static SetKind sums_of_powers(Frequency b, int d) { return {Tag::sums_of_powers, b, d}; }
  static SetKind interval() { return {Tag::interval}; }
  static SetKind random(double density, std::uint64_t seed) {
    return {Tag::random, 2, 1, density, seed};
  }

  /// "squares", "powers:B", "sums_of_powers:B:D", "interval", "random:DENSITY".
  /// The random seed is supplied separately.
  static SetKind parse(const std::string& text, std::uint64_t seed = 0);
  std::string name() const;
};

/// Elements of the family in [1, N]. Powers use exponents k >= 1.
FreqSet generate(const SetKind& kind, Frequency limit);

/// |Lambda cap [1, N]| at each checkpoint.
std::vector<std::size_t> mesh_counts(const FreqSet& lambda, const std::vector<Frequency>& checkpoints);

enum class MeshModel {
  polylog,   // count ~ (log N)^e
  power_log, // count ~ N^e log N, with the log N factor treated as slack
};

std::string to_string(MeshModel m);
MeshModel parse_mesh_model(const std::string& name);

struct MeshFit {
  MeshModel model = MeshModel::power_log;
  double exponent = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root mean square of the log residuals
};

/// Least squares of log count against log log N (polylog) or log N (power_log).
MeshFit fit_mesh_exponent(const std::vector<std::size_t>& counts,
                          const std::vector<Frequency>& checkpoints, MeshModel model);

struct RepresentationCounts {
  unsigned alpha = 2;
  std::vector<std::int64_t> counts;  // r_alpha(j), j = 0..n
  double mean_square = 0.0;          // (1/n) sum_{j=1}^n r_alpha(j)^2
};

inline constexpr std::size_t kConvolutionCap = std::size_t{1} << 26;

/// Number of ordered ways to write j as a sum of alpha elements among the
/// first k elements of lambda.
RepresentationCounts r_alpha(const FreqSet& lambda, std::size_t k, unsigned alpha, std::size_t n);

}  // namespace thinset
