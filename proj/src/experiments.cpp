#include "thinset/experiments.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>

#include "thinset/errors.hpp"
#include "thinset/exponents.hpp"
#include "thinset/freq_sets.hpp"
#include "thinset/orlicz.hpp"
#include "thinset/quasi.hpp"
#include "thinset/rng.hpp"
#include "thinset/sampler.hpp"
#include "thinset/stable_norm.hpp"
#include "thinset/trig_polynomial.hpp"

namespace thinset {

namespace {

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_list(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += format_number(xs[i]);
  }
  return out;
}

// Reads "<section>.<key>" with a default and echoes the value actually used.
class Params {
 public:
  Params(const Config& cfg, std::string section, ExperimentReport& rep)
      : cfg_(cfg), section_(std::move(section)), rep_(rep) {}

  double real(const std::string& key, double fallback) {
    double v = cfg_.get_double(full(key), fallback);
    rep_.config[full(key)] = format_number(v);
    return v;
  }
  std::size_t count(const std::string& key, long long fallback) {
    long long v = cfg_.get_int(full(key), fallback);
    if (v < 0) throw UsageError("config key '" + full(key) + "' must be nonnegative");
    rep_.config[full(key)] = std::to_string(v);
    return static_cast<std::size_t>(v);
  }
  std::vector<double> reals(const std::string& key, const std::vector<double>& fallback) {
    auto v = cfg_.get_doubles(full(key), fallback);
    rep_.config[full(key)] = format_list(v);
    return v;
  }

 private:
  std::string full(const std::string& key) const { return section_ + "." + key; }

  const Config& cfg_;
  std::string section_;
  ExperimentReport& rep_;
};

std::uint64_t stream(std::uint64_t experiment, std::uint64_t a, std::uint64_t b = 0) {
  return (experiment << 48) ^ (a << 24) ^ b;
}

double band(const std::vector<double>& xs) {
  auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  if (!(*lo > 0.0)) return std::numeric_limits<double>::infinity();
  return *hi / *lo;
}

double max_of(const std::vector<double>& xs) { return *std::max_element(xs.begin(), xs.end()); }
double min_of(const std::vector<double>& xs) { return *std::min_element(xs.begin(), xs.end()); }

double median_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

std::vector<Frequency> random_distinct(Rng& rng, std::size_t count, Frequency lo, Frequency hi) {
  std::vector<Frequency> pool(static_cast<std::size_t>(hi - lo + 1));
  std::iota(pool.begin(), pool.end(), lo);
  if (count > pool.size()) throw InternalError("random_distinct: pool too small");
  for (std::size_t i = 0; i < count; ++i) {
    auto j = i + static_cast<std::size_t>(rng.next() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

std::size_t uniform_int(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.next() % (hi - lo + 1));
}

TrigPolynomial gaussian_poly(Rng& rng, const std::vector<Frequency>& freqs) {
  TrigPolynomial::Terms t;
  for (Frequency g : freqs) t[g] = Complex(rng.normal(), rng.normal());
  return TrigPolynomial(std::move(t));
}

CheckResult check(std::string name, double statistic, double fitted, bool pass, std::string detail = {}) {
  return {std::move(name), statistic, fitted, pass, std::move(detail)};
}

FreqSet dyadic_set(std::size_t count) {
  std::vector<Frequency> v;
  for (std::size_t k = 0; k < count; ++k) v.push_back(Frequency{1} << k);
  return FreqSet(std::move(v));
}

// E1: empirical characteristic function and stability of the sampler.
void run_e1(const Config& cfg, ExperimentReport& rep) {
  Params prm(cfg, "E1", rep);
  auto ps = prm.reals("p", {1.2, 1.5, 1.8, 2.0});
  std::size_t n = prm.count("samples", 1'000'000);
  double tol_mult = prm.real("tolerance_multiplier", 4.0);
  if (n == 0) throw UsageError("E1.samples must be positive");
  const std::uint64_t seed = cfg.seed();

  std::vector<Complex> zs;
  for (int k = 0; k < 8; ++k) zs.push_back(std::polar(0.25 + 0.25 * k, k * std::numbers::pi / 4.0));
  const double tol = tol_mult / std::sqrt(static_cast<double>(n));

  auto deviation = [&](const std::function<Complex(Rng&)>& draw, double p, std::uint64_t sid) {
    Rng rng(seed, sid, 0);
    std::vector<Complex> acc(zs.size(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      Complex z = draw(rng);
      for (std::size_t k = 0; k < zs.size(); ++k) {
        double phase = zs[k].real() * z.real() + zs[k].imag() * z.imag();
        acc[k] += Complex(std::cos(phase), std::sin(phase));
      }
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < zs.size(); ++k) {
      Complex emp = acc[k] / static_cast<double>(n);
      worst = std::max(worst, std::abs(emp - std::exp(-std::pow(std::abs(zs[k]), p))));
    }
    return worst;
  };

  for (std::size_t i = 0; i < ps.size(); ++i) {
    double p = ps[i];
    double dev = deviation([p](Rng& r) { return draw_isotropic_stable(p, r); }, p, stream(1, i, 0));
    rep.checks.push_back(check("char_function_p=" + format_number(p), dev,
                               dev * std::sqrt(static_cast<double>(n)), dev < tol,
                               "max |empirical CF - exp(-|z|^p)| over 8 points"));
    const double scale = std::pow(2.0, -1.0 / p);
    double sdev = deviation(
        [p, scale](Rng& r) {
          Complex a = draw_isotropic_stable(p, r);
          Complex b = draw_isotropic_stable(p, r);
          return (a + b) * scale;
        },
        p, stream(1, i, 1));
    rep.checks.push_back(check("stability_p=" + format_number(p), sdev,
                               sdev * std::sqrt(static_cast<double>(n)), sdev < tol,
                               "(Z1+Z2)/2^(1/p) against exp(-|z|^p)"));
  }
}

// E2: comparison between stable brackets for p1 < p2.
void run_e2(const Config& cfg, ExperimentReport& rep) {
  Params prm(cfg, "E2", rep);
  double p1 = prm.real("p1", 1.2);
  double p2 = prm.real("p2", 1.8);
  std::size_t suite = prm.count("instances", 20);
  std::size_t trials = prm.count("trials", 500);
  double mult = prm.real("multiplier", 3.0);
  double spread_mult = prm.real("spread_multiplier", 5.0);
  double median_cap = prm.real("median_ratio_cap", 1.5);
  if (!(p1 < p2)) throw UsageError("E2 needs p1 < p2");
  const std::uint64_t seed = cfg.seed();

  std::vector<double> slack, ratios;
  for (std::size_t i = 0; i < suite; ++i) {
    Rng rng(seed, stream(2, i, 0), 0);
    auto f = gaussian_poly(rng, random_distinct(rng, uniform_int(rng, 3, 10), 1, 128));
    auto e1 = estimate_bracket(f, DriverDistribution::stable(p1, seed, stream(2, i, 1)), trials);
    auto e2 = estimate_bracket(f, DriverDistribution::stable(p2, seed, stream(2, i, 2)), trials);
    slack.push_back(e2.value / (mult * e1.value + spread_mult * (e1.spread + e2.spread)));
    ratios.push_back(e2.value / e1.value);
  }
  double worst = max_of(slack);
  rep.checks.push_back(check("comparison_bound", worst, max_of(ratios), worst <= 1.0,
                             "max of value(p2) / (3 value(p1) + 5 spread)"));
  double med = median_of(ratios);
  rep.checks.push_back(check("comparison_median_ratio", med, med, med <= median_cap,
                             "median of value(p2)/value(p1)"));
}

// E3: lower p-estimate over disjoint spectra.
void run_e3(const Config& cfg, ExperimentReport& rep) {
  Params prm(cfg, "E3", rep);
  double p = prm.real("p", 1.5);
  std::size_t suite = prm.count("instances", 20);
  std::size_t trials = prm.count("trials", 2000);
  double band_cap = prm.real("band", 10.0);
  const std::uint64_t seed = cfg.seed();

  std::vector<double> ratios;
  for (std::size_t i = 0; i < suite; ++i) {
    Rng rng(seed, stream(3, i, 0), 0);
    std::size_t pieces = uniform_int(rng, 2, 4);
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    for (std::size_t j = 0; j < pieces; ++j) {
      sizes.push_back(uniform_int(rng, 2, 5));
      total += sizes.back();
    }
    auto pool = random_distinct(rng, total, 1, 256);
    TrigPolynomial::Terms whole;
    double sum_p = 0.0;
    std::size_t at = 0;
    for (std::size_t j = 0; j < pieces; ++j) {
      std::vector<Frequency> part(pool.begin() + static_cast<std::ptrdiff_t>(at),
                                  pool.begin() + static_cast<std::ptrdiff_t>(at + sizes[j]));
      at += sizes[j];
      auto fj = gaussian_poly(rng, part);
      for (const auto& [g, c] : fj.terms()) whole[g] = c;
      auto ej = estimate_bracket(fj, DriverDistribution::stable(p, seed, stream(3, i, j + 1)), trials);
      sum_p += std::pow(ej.value, p);
    }
    auto e = estimate_bracket(TrigPolynomial(std::move(whole)),
                              DriverDistribution::stable(p, seed, stream(3, i, 0xff)), trials);
    ratios.push_back(std::pow(sum_p, 1.0 / p) / e.value);
  }
  double b = band(ratios);
  rep.checks.push_back(check("lower_p_estimate_band", b, max_of(ratios), b <= band_cap,
                             "max/min of (sum [[f_j]]^p)^(1/p) / [[f]]"));
}

// E4: contraction by coefficientwise multipliers, common random numbers.
void run_e4(const Config& cfg, ExperimentReport& rep) {
  Params prm(cfg, "E4", rep);
  double p = prm.real("p", 1.5);
  std::size_t suite = prm.count("instances", 20);
  std::size_t trials = prm.count("trials", 1000);
  double spread_mult = prm.real("spread_multiplier", 5.0);
  const std::uint64_t seed = cfg.seed();

  std::vector<double> slack, ratios;
  for (std::size_t i = 0; i < suite; ++i) {
    Rng rng(seed, stream(4, i, 0), 0);
    auto f = gaussian_poly(rng, random_distinct(rng, uniform_int(rng, 3, 10), 1, 128));
    TrigPolynomial::Terms mt;
    for (const auto& [g, c] : f.terms())
      mt[g] = c * std::polar(rng.uniform(), 2.0 * std::numbers::pi * rng.uniform());
    auto d = DriverDistribution::stable(p, seed, stream(4, i, 1));
    auto ef = estimate_bracket(f, d, trials);
    auto em = estimate_bracket(TrigPolynomial(std::move(mt)), d, trials);
    ratios.push_back(em.value / ef.value);
    slack.push_back(em.value / (ef.value * (1.0 + spread_mult * ef.spread / ef.value)));
  }
  double worst = max_of(slack);
  rep.checks.push_back(check("contraction", worst, max_of(ratios), worst <= 1.0,
                             "max of value(m f) / (value(f) (1 + 5 spread/value))"));
}

// E5: 0-1 polynomials on dyadic frequencies.
void run_e5(const Config& cfg, ExperimentReport& rep) {
  Params prm(cfg, "E5", rep);
  double p = prm.real("p", 1.5);
  std::size_t n_min = prm.count("n_min", 4);
  std::size_t n_max = prm.count("n_max", 12);
  std::size_t trials = prm.count("trials", 2000);
  double band_cap = prm.real("band", 3.0);
  double mp_mult = prm.real("mp_multiplier", 4.0);
  if (n_min < 1 || n_max < n_min || n_max > 30) throw UsageError("E5 needs 1 <= n_min <= n_max <= 30");
  const std::uint64_t seed = cfg.seed();

  std::vector<double> upper, lower, mp_ratio;
  bool mp_sum_ok = true;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    FreqSet a = dyadic_set(n + 1);  // {2^j : j = 0..n}
    auto f = TrigPolynomial::indicator(a);
    auto e = estimate_bracket(f, DriverDistribution::stable(p, seed, stream(5, n)), trials);
    Frequency lam = Frequency{1} << n;
    upper.push_back(e.value / zero_one_upper(a.size(), lam, p));
    lower.push_back(e.value / sz_lower(f, p));
    double mp = mp_tail_bound(f, p);
    mp_ratio.push_back(e.value / mp);
    double series = 0.0;
    for (Frequency k = 2; k <= lam; ++k) {
      double kd = static_cast<double>(k);
      series += 1.0 / (kd * std::pow(std::log(kd), 1.0 / p));
    }
    if (mp > std::pow(static_cast<double>(a.size()), 1.0 / p) * series * (1.0 + 1e-12)) mp_sum_ok = false;
  }
  double bu = band(upper), bl = band(lower);
  rep.checks.push_back(check("upper_band", bu, max_of(upper), bu <= band_cap,
                             "estimate / (n^(1/p) (log lambda_n)^(1/p')), fitted constant = max"));
  rep.checks.push_back(check("lower_band", bl, min_of(lower), bl <= band_cap,
                             "estimate / sz_lower comparator, fitted constant = min"));
  double worst_mp = max_of(mp_ratio);
  rep.checks.push_back(check("mp_tail_sandwich", worst_mp, worst_mp, worst_mp <= mp_mult,
                             "max of estimate / mp_tail_bound"));
  rep.checks.push_back(check("mp_tail_vs_series", mp_sum_ok ? 1.0 : 0.0, 1.0, mp_sum_ok,
                             "mp_tail_bound <= n^(1/p) sum_k (k (log k)^(1/p))^-1"));
}

// E6: q(A) against the stable comparator, plus the upper-direction probe.
void run_e6(const Config& cfg, ExperimentReport& rep) {
  Params prm(cfg, "E6", rep);
  double p = prm.real("p", 1.5);
  std::size_t suite = prm.count("instances", 30);
  std::size_t trials = prm.count("trials", 1000);
  std::size_t max_size = prm.count("max_size", 12);
  std::size_t range = prm.count("range", 48);
  double band_cap = prm.real("band", 10.0);
  if (max_size < 4 || max_size > kExactSearchCap || range < max_size)
    throw UsageError("E6 needs 4 <= max_size <= 25 and range >= max_size");
  const std::uint64_t seed = cfg.seed();
  const double pc = conjugate(p);

  std::vector<double> sandwich, probe;
  for (std::size_t i = 0; i < suite; ++i) {
    Rng rng(seed, stream(6, i, 0), 0);
    std::size_t size = uniform_int(rng, 4, max_size);
    FreqSet a(random_distinct(rng, size, 1, static_cast<Frequency>(range)));
    auto q = max_quasi_independent(a);
    if (!q.exact) throw InternalError("E6: exact q(A) search ran out of budget");
    auto ind = TrigPolynomial::indicator(a);
    auto e = estimate_bracket(ind, DriverDistribution::stable(p, seed, stream(6, i, 1)), trials);
    double comparator = std::pow(e.value / std::pow(static_cast<double>(size), 1.0 / p), pc);
    sandwich.push_back(static_cast<double>(q.q_value) / comparator);

    // Lower bounds for the operator norm: [[f]]_p / ||f||_inf over a few f.
    std::vector<TrigPolynomial> candidates{ind};
    TrigPolynomial::Terms signs, stable;
    for (Frequency g : a) {
      signs[g] = Complex(rng.next() >> 63 ? 1.0 : -1.0, 0.0);
      stable[g] = draw_isotropic_stable(p, rng);
    }
    candidates.emplace_back(std::move(signs));
    candidates.emplace_back(std::move(stable));
    double best = 0.0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto& f = candidates[c];
      double num = c == 0 ? e.value
                          : estimate_bracket(f, DriverDistribution::stable(p, seed, stream(6, i, 2 + c)), trials).value;
      best = std::max(best, num / sup_norm(f, 1e-6));
    }
    probe.push_back(std::pow(best, pc) / static_cast<double>(q.q_value));
  }
  double bs = band(sandwich);
  rep.checks.push_back(check("sandwich_band", bs, min_of(sandwich), bs <= band_cap,
                             "max/min of q(A) / ([[A]]_p / |A|^(1/p))^(p')"));
  double bp = band(probe);
  rep.checks.push_back(check("upper_probe", bp, max_of(probe), bp <= band_cap,
                             "probe: max/min of (max_f [[f]]_p/||f||_inf)^(p') / q(A)"));
}

// E7: mesh tables and exponent fits.
void run_e7(const Config& cfg, ExperimentReport& rep) {
  Params prm(cfg, "E7", rep);
  auto cps_real = prm.reals("checkpoints", {1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8});
  double p = prm.real("p", 1.5);
  double q = prm.real("q", 8.0);
  double sq_tol = prm.real("squares_tolerance", 0.02);
  double pw_tol = prm.real("powers_tolerance", 0.15);
  double eps_p = prm.real("epsilon_p", 1.5);
  double eps_q = prm.real("epsilon_q", 1.2);
  std::vector<Frequency> cps;
  for (double c : cps_real) cps.push_back(static_cast<Frequency>(std::llround(c)));
  if (cps.size() < 4) throw UsageError("E7 needs at least 4 checkpoints");
  Frequency top = cps.back();

  auto squares = generate(SetKind::squares(), top);
  auto powers = generate(SetKind::powers(2), top);
  auto sq_counts = mesh_counts(squares, cps);
  auto pw_counts = mesh_counts(powers, cps);

  bool sq_exact = true, pw_exact = true;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    auto r = static_cast<Frequency>(std::sqrt(static_cast<double>(cps[i])));
    while (r * r > cps[i]) --r;
    while ((r + 1) * (r + 1) <= cps[i]) ++r;
    if (sq_counts[i] != static_cast<std::size_t>(r)) sq_exact = false;
    if (pw_counts[i] != static_cast<std::size_t>(std::bit_width(static_cast<std::uint64_t>(cps[i])) - 1))
      pw_exact = false;
  }
  rep.checks.push_back(check("squares_counts_exact", sq_exact ? 1.0 : 0.0, 1.0, sq_exact, "floor(sqrt N)"));
  rep.checks.push_back(check("powers2_counts_exact", pw_exact ? 1.0 : 0.0, 1.0, pw_exact, "floor(log2 N)"));

  auto sq_fit = fit_mesh_exponent(sq_counts, cps, MeshModel::power_log);
  rep.checks.push_back(check("squares_power_log_exponent", sq_fit.exponent, std::exp(sq_fit.intercept),
                             std::abs(sq_fit.exponent - 0.5) <= sq_tol, "fitted power, expected 1/2"));
  auto pw_fit = fit_mesh_exponent(pw_counts, cps, MeshModel::polylog);
  rep.checks.push_back(check("powers2_polylog_exponent", pw_fit.exponent, std::exp(pw_fit.intercept),
                             std::abs(pw_fit.exponent - 1.0) <= pw_tol, "fitted (log N) power, expected 1"));

  double threshold = conjugate(p) / q;
  rep.checks.push_back(check("squares_exceed_power_mesh", sq_fit.exponent, threshold,
                             q > 2.0 * conjugate(p) && sq_fit.exponent > threshold,
                             "fitted power vs p'/q with q > 2p'"));
  auto sq_poly = fit_mesh_exponent(sq_counts, cps, MeshModel::polylog);
  double mesh_exp = derive_exponents(eps_p, eps_q).mesh_exp;
  rep.checks.push_back(check("squares_exceed_polylog_mesh", sq_poly.exponent, mesh_exp,
                             sq_poly.exponent > mesh_exp, "fitted (log N) power vs 1/epsilon"));
}

// E8: partition lemma postconditions.
void run_e8(const Config& cfg, ExperimentReport& rep) {
  Params prm(cfg, "E8", rep);
  std::size_t instances = prm.count("instances", 20);
  std::size_t max_size = prm.count("max_size", 24);
  if (max_size < 8 || max_size > kExactSearchCap) throw UsageError("E8 needs 8 <= max_size <= 25");
  const std::uint64_t seed = cfg.seed();

  std::size_t ok = 0, exact = 0, pieces = 0;
  std::string failures;
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng(seed, stream(8, i, 0), 0);
    FreqSet a;
    double c = 1.0, eps = 0.5;
    if (i == 0) {
      a = dyadic_set(16);
    } else if (i % 2 == 1) {
      // Subsets of a dyadic set: every subset is quasi-independent.
      std::size_t size = uniform_int(rng, 8, max_size);
      std::vector<Frequency> v;
      for (Frequency k : random_distinct(rng, size, 0, 30)) v.push_back(Frequency{1} << k);
      a = FreqSet(std::move(v));
    } else {
      // {2^k} u {3 2^k}: each half is quasi-independent, so q(B) >= |B|/2.
      std::size_t half = uniform_int(rng, 4, max_size / 2);
      std::vector<Frequency> v;
      for (Frequency k : random_distinct(rng, half, 0, 16)) {
        v.push_back(Frequency{1} << k);
        v.push_back(Frequency{3} << k);
      }
      a = FreqSet(std::move(v));
      c = 0.5;
      eps = 1.0;
    }
    auto res = partition_lemma(a, c, eps);
    bool good = res.covered * 2 >= a.size();
    FreqSet seen;
    for (std::size_t j = 0; j < res.pieces.size(); ++j) {
      const auto& b = res.pieces[j];
      double sz = static_cast<double>(b.size());
      good = good && b.subset_of(a) && b.disjoint_from(seen) && sz >= res.size_low - 1e-9 &&
             sz <= res.size_high + 1e-9 && is_quasi_independent(b).independent;
      seen = seen.united(b);
      if (res.exact_extraction[j]) ++exact;
      ++pieces;
    }
    double count = static_cast<double>(res.pieces.size());
    good = good && count >= res.count_low - 1e-9 && count <= res.count_high + 1e-9;
    if (good) ++ok;
    else failures += (failures.empty() ? "" : ",") + std::to_string(i);
  }
  rep.checks.push_back(check("partition_postconditions", static_cast<double>(ok),
                             static_cast<double>(instances), ok == instances,
                             failures.empty() ? "all instances" : "failed: " + failures));
  rep.checks.push_back(check("exact_extractions", static_cast<double>(exact), static_cast<double>(pieces),
                             exact == pieces, "pieces produced by exact search, out of all pieces"));
}

// E9: Lorentz embedding ratio on quasi-independent sets.
void run_e9(const Config& cfg, ExperimentReport& rep) {
  Params prm(cfg, "E9", rep);
  double p = prm.real("p", 1.5);
  double s = prm.real("s", 4.0 / 3.0);
  std::size_t n_min = prm.count("n_min", 4);
  std::size_t n_max = prm.count("n_max", 16);
  std::size_t trials = prm.count("trials", 500);
  double band_cap = prm.real("band", 10.0);
  if (n_min < 1 || n_max < n_min || n_max > 40) throw UsageError("E9 needs 1 <= n_min <= n_max <= 40");
  double q = invert_for_q(p, s);
  rep.config["E9.q"] = format_number(q);
  const std::uint64_t seed = cfg.seed();

  std::vector<double> ratios;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    FreqSet a = dyadic_set(n);
    Rng rng(seed, stream(9, n, 0), 0);
    std::vector<Complex> coeffs;
    for (std::size_t i = 0; i < n; ++i) coeffs.emplace_back(rng.normal(), rng.normal());
    std::vector<TrigPolynomial> fs{TrigPolynomial::indicator(a), TrigPolynomial::with_coefficients(a, coeffs)};
    for (std::size_t k = 0; k < fs.size(); ++k) {
      auto e = estimate_bracket(fs[k], DriverDistribution::stable(p, seed, stream(9, n, k + 1)), trials);
      ratios.push_back(lorentz_norms(fs[k], q).l_q1 / e.value);
    }
  }
  double b = band(ratios);
  rep.checks.push_back(check("lorentz_band", b, max_of(ratios), b <= band_cap,
                             "max/min of ||f^||_{q,1} / [[f]]_p"));
}

// E10: psi_{p'}(A) / |A|^{1/alpha} on quasi-independent sets.
void run_e10(const Config& cfg, ExperimentReport& rep) {
  Params prm(cfg, "E10", rep);
  double p = prm.real("p", 1.5);
  double q = prm.real("q", 1.2);
  std::size_t n_min = prm.count("n_min", 4);
  std::size_t n_max = prm.count("n_max", 16);
  double band_cap = prm.real("band", 4.0);
  if (n_min < 1 || n_max < n_min || n_max > 20) throw UsageError("E10 needs 1 <= n_min <= n_max <= 20");
  auto ex = derive_exponents(p, q);

  std::vector<double> ratios;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    double psi = psi_set_norm(dyadic_set(n), ex.p_conj);
    ratios.push_back(psi / std::pow(static_cast<double>(n), 1.0 / ex.alpha));
  }
  double b = band(ratios);
  rep.checks.push_back(check("orlicz_band", b, max_of(ratios), b <= band_cap,
                             "max/min of psi_{p'}(A) / |A|^(1/alpha)"));
}

// E11: representation counts r_alpha for powers of 2 against an interval.
void run_e11(const Config& cfg, ExperimentReport& rep) {
  Params prm(cfg, "E11", rep);
  double p = prm.real("p", 1.5);
  std::size_t alpha = prm.count("alpha", 2);
  std::size_t log_min = prm.count("log2_n_min", 6);
  std::size_t log_max = prm.count("log2_n_max", 20);
  std::size_t interval_log_max = prm.count("interval_log2_n_max", 12);
  double growth_cap = prm.real("growth_cap", 4.0);
  if (alpha < 2 || log_min < 2 || log_max < log_min || log_max > 24)
    throw UsageError("E11 needs alpha >= 2 and 2 <= log2_n_min <= log2_n_max <= 24");

  auto normaliser = [&](double n) {
    return std::pow(n, (2.0 - p) / (p - 1.0)) * std::pow(std::log(n), 2.0 * static_cast<double>(alpha));
  };
  std::vector<double> ratios;
  bool ordered = true;
  for (std::size_t e = log_min; e <= log_max; ++e) {
    auto n = std::size_t{1} << e;
    auto lam = generate(SetKind::powers(2), static_cast<Frequency>(n));
    auto rc = r_alpha(lam, lam.size(), static_cast<unsigned>(alpha), n);
    ratios.push_back(rc.mean_square / normaliser(static_cast<double>(n)));
    if (e <= interval_log_max) {
      auto iv = generate(SetKind::interval(), static_cast<Frequency>(n));
      auto ri = r_alpha(iv, iv.size(), static_cast<unsigned>(alpha), n);
      if (!(rc.mean_square < ri.mean_square)) ordered = false;
    }
  }
  double growth = max_of(ratios) / ratios.front();
  rep.checks.push_back(check("r_alpha_bounded", growth, max_of(ratios), growth <= growth_cap,
                             "max over n of mean r_alpha^2 / (n^((2-p)/(p-1)) (log n)^(2 alpha)), relative to smallest n"));
  rep.checks.push_back(check("r_alpha_ordering", ordered ? 1.0 : 0.0, 1.0, ordered,
                             "powers(2) mean square below interval mean square"));
}

}  // namespace

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids{"E1", "E2", "E3", "E4", "E5", "E6",
                                            "E7", "E8", "E9", "E10", "E11"};
  return ids;
}

ExperimentReport run_experiment(const std::string& id, const Config& cfg) {
  using Runner = void (*)(const Config&, ExperimentReport&);
  static const std::map<std::string, Runner> runners{
      {"E1", run_e1}, {"E2", run_e2}, {"E3", run_e3}, {"E4", run_e4},  {"E5", run_e5},  {"E6", run_e6},
      {"E7", run_e7}, {"E8", run_e8}, {"E9", run_e9}, {"E10", run_e10}, {"E11", run_e11}};
  auto it = runners.find(id);
  if (it == runners.end()) throw UsageError("unknown experiment id '" + id + "'");

  ExperimentReport rep;
  rep.experiment_id = id;
  rep.config["seed"] = std::to_string(cfg.seed());
  auto t0 = std::chrono::steady_clock::now();
  try {
    it->second(cfg, rep);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw std::runtime_error(id + ": " + e.what());
  }
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace thinset
