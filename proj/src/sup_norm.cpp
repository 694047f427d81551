// Certified estimation of ||f||_inf.
//
// P = |f|^2 is a real trigonometric polynomial with frequencies in [-W, W],
// W the spectral width of f, so Bernstein gives ||P''|| <= W^2 ||P||. On an
// interval of half-width d around c,
//     P(t) <= P(c) + |P'(c)| d + W^2 U d^2 / 2     (U >= ||P||).
// The coarse grid supplies P, P' everywhere (two FFTs) and a first U; any
// interval whose bound cannot beat best (1 + rel_tol)^2 is dropped, the rest
// are halved until they can.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "thinset/errors.hpp"
#include "thinset/trig_polynomial.hpp"

namespace thinset {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxIntervals = std::size_t{1} << 24;

struct PointValue {
  double p;      // |f|^2
  double slope;  // d/dt |f|^2
};

class Evaluator {
 public:
  explicit Evaluator(const TrigPolynomial& g) {
    for (const auto& [freq, c] : g.terms()) {
      freqs_.push_back(static_cast<double>(freq));
      coeffs_.push_back(c);
    }
  }

  PointValue at(double t) const {
    Complex v(0.0, 0.0), dv(0.0, 0.0);
    for (std::size_t i = 0; i < freqs_.size(); ++i) {
      const double cr = coeffs_[i].real(), ci = coeffs_[i].imag();
      const double er = std::cos(freqs_[i] * t), ei = std::sin(freqs_[i] * t);
      const double tr = cr * er - ci * ei, ti = cr * ei + ci * er;
      v += Complex(tr, ti);
      dv += Complex(-freqs_[i] * ti, freqs_[i] * tr);
    }
    return {std::norm(v), 2.0 * (v.real() * dv.real() + v.imag() * dv.imag())};
  }

  double value(double t) const { return at(t).p; }

 private:
  std::vector<double> freqs_;
  std::vector<Complex> coeffs_;
};

double golden_max(const Evaluator& g, double a, double b, double& best_t, double best_val) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = g.value(x1);
  double f2 = g.value(x2);
  for (int it = 0; it < 60 && (b - a) > 1e-15; ++it) {
    if (f1 < f2) {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = g.value(x2);
    } else {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = g.value(x1);
    }
  }
  if (f1 > best_val) { best_val = f1; best_t = x1; }
  if (f2 > best_val) { best_val = f2; best_t = x2; }
  return best_val;
}

struct Interval {
  double centre;
  double half;
  double p;
  double slope;
};

}  // namespace

SupNormResult sup_norm_detail(const TrigPolynomial& f, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol <= 0.1)) throw DomainError("sup_norm: rel_tol must lie in (0, 0.1]");
  SupNormResult res;
  if (f.empty()) return res;
  if (f.size() == 1) {
    res.value = std::abs(f.terms().begin()->second);
    return res;
  }

  const Frequency lo = f.min_frequency();
  const Frequency hi = f.max_frequency();
  const TrigPolynomial g = f.shifted(lo + (hi - lo) / 2);
  const double width = static_cast<double>(hi - lo);

  // Eight points per period of the top frequency: W h <= pi / 4.
  const std::size_t m = std::bit_ceil(std::max<std::uint64_t>(64, 8 * (static_cast<std::uint64_t>(hi - lo) + 1)));
  res.grid = m;
  const double h = kTwoPi / static_cast<double>(m);

  TrigPolynomial::Terms deriv;
  for (const auto& [freq, c] : g.terms()) deriv.emplace(freq, Complex(0.0, static_cast<double>(freq)) * c);
  const auto vals = evaluate_grid(g, m);
  const auto dvals = evaluate_grid(TrigPolynomial(std::move(deriv)), m);

  const double w2 = width * width;
  const double coarse_curv = w2 * h * h / 8.0;
  if (coarse_curv >= 1.0) throw InternalError("sup_norm: coarse grid does not resolve the spectrum");

  std::vector<Interval> stack;
  stack.reserve(m);
  double best = 0.0, best_t = 0.0, upper = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const Complex v = vals[k], dv = dvals[k];
    const double p = std::norm(v);
    const double slope = 2.0 * (v.real() * dv.real() + v.imag() * dv.imag());
    if (p > best) { best = p; best_t = h * static_cast<double>(k); }
    upper = std::max(upper, p + std::abs(slope) * h / 2.0);
    stack.push_back({h * static_cast<double>(k), h / 2.0, p, slope});
  }
  upper /= 1.0 - coarse_curv;

  const Evaluator eval(g);
  const double factor = (1.0 + rel_tol) * (1.0 + rel_tol);
  double best_half = h / 2.0;
  std::size_t processed = 0;
  std::vector<Interval> next;
  while (!stack.empty()) {
    next.clear();
    const double target = best * factor;
    for (const auto& iv : stack) {
      const double bound = iv.p + std::abs(iv.slope) * iv.half + w2 * upper * iv.half * iv.half / 2.0;
      if (bound <= target) continue;
      ++res.candidates;
      const double half = iv.half / 2.0;
      for (double c : {iv.centre - half, iv.centre + half}) {
        const auto pv = eval.at(c);
        if (pv.p > best) { best = pv.p; best_t = c; best_half = half; }
        next.push_back({c, half, pv.p, pv.slope});
      }
    }
    processed += next.size();
    if (processed > kMaxIntervals) throw InternalError("sup_norm: refinement did not converge");
    stack.swap(next);
  }

  best = golden_max(eval, best_t - best_half, best_t + best_half, best_t, best);
  res.value = std::sqrt(best);
  res.argmax = std::fmod(std::fmod(best_t, kTwoPi) + kTwoPi, kTwoPi);
  return res;
}

double sup_norm(const TrigPolynomial& f, double rel_tol) {
  return sup_norm_detail(f, rel_tol).value;
}

}  // namespace thinset
