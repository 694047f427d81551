#include "thinset/orlicz.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "thinset/errors.hpp"

namespace thinset {

namespace {

constexpr double kBisectRelWidth = 1e-9;

// Mean of an integrand over grids of size m, 2m, ... until it settles.
double refine_until_stable(std::size_t m, const Quadrature& quad,
                           const std::function<double(std::size_t)>& at_grid) {
  double prev = at_grid(m);
  while (m * 2 <= quad.max_grid) {
    m *= 2;
    const double cur = at_grid(m);
    if (std::abs(cur - prev) <= quad.rel_tol * std::abs(cur)) return cur;
    prev = cur;
  }
  return prev;
}

std::vector<double> moduli(const TrigPolynomial& f, std::size_t m) {
  const auto vals = evaluate_grid(f, m);
  std::vector<double> out(vals.size());
  for (std::size_t k = 0; k < vals.size(); ++k) out[k] = std::abs(vals[k]);
  return out;
}

void check_grid(const TrigPolynomial& f, std::size_t m) {
  if (m < 16 * (static_cast<std::size_t>(centered_degree(f)) + 1))
    throw PreconditionError("orlicz: grid too coarse, need M >= 16 (degree + 1)");
}

}  // namespace

double OrliczFunction::operator()(double x) const {
  if (x <= 0.0) return 0.0;
  switch (family) {
    case Family::exp_type:
      return std::expm1(std::pow(x, r));
    case Family::log_type:
      return x * std::pow(1.0 + std::log1p(x), 1.0 / r);
  }
  return 0.0;
}

double OrliczFunction::inverse(double y) const {
  if (!(r > 0.0)) throw DomainError("OrliczFunction: r must be positive");
  if (y <= 0.0) return 0.0;
  if (family == Family::exp_type) return std::pow(std::log1p(y), 1.0 / r);
  // log_type is increasing and phi(x) >= x, so the root lies in [0, y].
  double lo = 0.0;
  double hi = y;
  while ((hi - lo) > 1e-15 * hi) {
    const double mid = 0.5 * (lo + hi);
    if ((*this)(mid) < y) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double luxemburg_norm_fixed(const TrigPolynomial& f, const OrliczFunction& phi, std::size_t m) {
  if (f.empty()) return 0.0;
  const auto mod = moduli(f, m);
  double top = 0.0;
  for (double v : mod) top = std::max(top, v);
  if (top == 0.0) return 0.0;

  auto mean_at = [&](double t) {
    double acc = 0.0;
    for (double v : mod) acc += phi(v / t);
    return acc / static_cast<double>(mod.size());
  };

  // mean <= phi(top/t) makes `hi` feasible; mean >= phi(top/t)/M makes `lo` infeasible.
  double hi = top / phi.inverse(1.0);
  double lo = top / phi.inverse(2.0 * static_cast<double>(m));
  if (!(mean_at(hi) <= 1.0) || mean_at(lo) < 1.0)
    throw InternalError("luxemburg_norm: bisection bracket does not straddle the level set");
  while ((hi - lo) > kBisectRelWidth * hi) {
    const double mid = std::sqrt(lo * hi);
    if (mean_at(mid) <= 1.0) hi = mid; else lo = mid;
  }
  return hi;
}

double luxemburg_norm(const TrigPolynomial& f, const OrliczFunction& phi, std::size_t m,
                      const Quadrature& quad) {
  if (f.empty()) return 0.0;
  check_grid(f, m);
  return refine_until_stable(m, quad, [&](std::size_t mm) { return luxemburg_norm_fixed(f, phi, mm); });
}

double psi_set_norm(const FreqSet& a, double r) {
  if (a.empty()) return 0.0;
  const auto f = TrigPolynomial::indicator(a);
  return luxemburg_norm(f, OrliczFunction::psi(r), default_grid_size(centered_degree(f)));
}

double log_type_functional(const TrigPolynomial& f, double p_conj, std::size_t m, const Quadrature& quad) {
  if (!(p_conj > 0.0)) throw DomainError("log_type_functional: p' must be positive");
  if (f.empty()) return 0.0;
  check_grid(f, m);
  return refine_until_stable(m, quad, [&](std::size_t mm) {
    double acc = 0.0;
    for (double v : moduli(f, mm)) acc += v * std::pow(1.0 + std::log1p(v), 1.0 / p_conj);
    return acc / static_cast<double>(mm);
  });
}

}  // namespace thinset
