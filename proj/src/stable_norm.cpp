#include "thinset/stable_norm.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "thinset/errors.hpp"
#include "thinset/exponents.hpp"

namespace thinset {

namespace {

double quantile_sorted(const std::vector<double>& v, double q) {
  if (v.empty()) return 0.0;
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return v[lo] + frac * (v[hi] - v[lo]);
}

}  // namespace

std::size_t default_groups(std::size_t trials) {
  if (trials == 0) return 0;
  auto g = static_cast<std::size_t>(std::ceil(std::cbrt(static_cast<double>(trials)) - 1e-9));
  return std::clamp<std::size_t>(g, 1, trials);
}

std::vector<double> bracket_samples(const TrigPolynomial& f, const DriverDistribution& d,
                                    std::size_t trials, double grid_tol) {
  std::vector<double> out(trials, 0.0);
  if (f.empty()) return out;
  const FreqSet spectrum = f.spectrum();
  std::vector<Complex> base;
  base.reserve(f.size());
  for (const auto& kv : f.terms()) base.push_back(kv.second);

  detail::parallel_for(trials, [&](std::size_t t) {
    Rng rng(d.seed, d.stream_id, t);
    std::vector<Complex> z(base.size());
    fill_driver(d, z, rng);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] *= base[i];
    out[t] = sup_norm(TrigPolynomial::with_coefficients(spectrum, z), grid_tol);
  });
  return out;
}

NormEstimate summarize_samples(const std::vector<double>& samples, std::size_t groups,
                               bool median_of_means) {
  NormEstimate est;
  est.trials = samples.size();
  if (samples.empty()) return est;
  if (groups == 0) groups = default_groups(samples.size());
  if (groups > samples.size()) throw PreconditionError("estimate_bracket: need trials >= groups");
  est.groups = groups;

  const std::size_t n = samples.size();
  est.group_means.resize(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    const std::size_t begin = g * n / groups;
    const std::size_t end = (g + 1) * n / groups;
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += samples[i];
    est.group_means[g] = acc / static_cast<double>(end - begin);
  }
  std::vector<double> sorted = est.group_means;
  std::sort(sorted.begin(), sorted.end());
  est.spread = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
  if (median_of_means) {
    est.value = quantile_sorted(sorted, 0.5);
  } else {
    double acc = 0.0;
    for (double v : samples) acc += v;
    est.value = acc / static_cast<double>(n);
  }
  return est;
}

NormEstimate estimate_bracket(const TrigPolynomial& f, const DriverDistribution& d,
                              std::size_t trials, std::size_t groups) {
  if (trials == 0) throw PreconditionError("estimate_bracket: trials must be positive");
  if (groups == 0) groups = default_groups(trials);
  if (groups > trials) throw PreconditionError("estimate_bracket: need trials >= groups");
  const bool heavy = d.kind == DriverDistribution::Kind::p_stable && d.p < 2.0;
  NormEstimate est = summarize_samples(bracket_samples(f, d, trials), groups, heavy);
  est.grid_tol = kBracketGridTol;
  return est;
}

double mp_tail_bound(const TrigPolynomial& f, double p) {
  if (!(p > 0.0)) throw DomainError("mp_tail_bound: p must be positive");
  if (f.empty()) return 0.0;
  if (f.min_frequency() < 1) throw DomainError("mp_tail_bound: spectrum must lie in the positive integers");

  if (f.max_frequency() > (Frequency{1} << 32)) throw ResourceError("mp_tail_bound: largest frequency too large");

  // Walk k = 2..max; the tail sum only changes when k passes a spectrum point.
  std::vector<Frequency> freqs;
  std::vector<double> suffix(f.size() + 1, 0.0);
  for (const auto& kv : f.terms()) freqs.push_back(kv.first);
  {
    std::size_t i = f.size();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it, --i)
      suffix[i - 1] = suffix[i] + std::pow(std::abs(it->second), p);
  }
  double acc = 0.0;
  std::size_t next = 0;
  for (Frequency k = 2; k <= f.max_frequency(); ++k) {
    while (next < freqs.size() && freqs[next] < k) ++next;
    const double kd = static_cast<double>(k);
    acc += std::pow(suffix[next], 1.0 / p) / (kd * std::pow(std::log(kd), 1.0 / p));
  }
  return acc;
}

double zero_one_upper(std::size_t n, Frequency lambda_max, double p) {
  if (n < 1) throw DomainError("zero_one_upper: n must be positive");
  if (lambda_max < 2) throw DomainError("zero_one_upper: lambda_max must be at least 2");
  return std::pow(static_cast<double>(n), 1.0 / p) *
         std::pow(std::log(static_cast<double>(lambda_max)), 1.0 / conjugate(p));
}

double sz_lower(const TrigPolynomial& f, double p) {
  const Frequency n = f.max_frequency();
  if (f.empty() || n < 2) throw DomainError("sz_lower: need largest frequency N >= 2");
  if (f.min_frequency() < 1) throw DomainError("sz_lower: spectrum must lie in {1..N}");
  const double big_n = static_cast<double>(n);
  return std::pow(big_n, 1.0 / p) * std::pow(std::log(big_n), 1.0 / conjugate(p)) *
         fq_norm(f, 1.0) / big_n;
}

}  // namespace thinset
