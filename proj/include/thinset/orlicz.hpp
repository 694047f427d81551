#pragma once

#include <cstddef>

#include "thinset/freq_set.hpp"
#include "thinset/trig_polynomial.hpp"

namespace thinset {

/// psi_r(x) = e^{x^r} - 1 (exp_type) and phi_r(x) = x (1 + log(1 + x))^{1/r} (log_type).
struct OrliczFunction {
  enum class Family { exp_type, log_type };

  Family family = Family::exp_type;
  double r = 2.0;

  static OrliczFunction psi(double r) { return {Family::exp_type, r}; }
  static OrliczFunction phi(double r) { return {Family::log_type, r}; }

  double operator()(double x) const;
  /// Solves phi(x) = y for x >= 0.
  double inverse(double y) const;
};

/// Grid-mean quadrature settings. M is doubled until two successive values
/// agree to `rel_tol`, up to `max_grid`.
struct Quadrature {
  double rel_tol = 1e-7;
  std::size_t max_grid = std::size_t{1} << 20;
};

/// inf{ t > 0 : mean_k phi(|f(t_k)| / t) <= 1 }, starting from an M-point grid.
double luxemburg_norm(const TrigPolynomial& f, const OrliczFunction& phi, std::size_t m,
                      const Quadrature& quad = {});

/// Luxemburg norm at one fixed grid size, no refinement.
double luxemburg_norm_fixed(const TrigPolynomial& f, const OrliczFunction& phi, std::size_t m);

/// psi_r(A): the psi_r Luxemburg norm of the indicator polynomial of A.
double psi_set_norm(const FreqSet& a, double r);

/// Grid mean of |f| (1 + log(1 + |f|))^{1/p'}; equivalent (not equal) to the
/// phi_{p'} Luxemburg norm.
double log_type_functional(const TrigPolynomial& f, double p_conj, std::size_t m,
                           const Quadrature& quad = {});

}  // namespace thinset
