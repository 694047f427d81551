#include "thinset/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thinset/errors.hpp"

namespace thinset {

double conjugate(double x) {
  if (std::isinf(x) && x > 0) return 1.0;
  if (!(x > 1.0)) throw DomainError("conjugate: exponent must exceed 1, got " + std::to_string(x));
  return x / (x - 1.0);
}

ExponentTable derive_exponents(double p, double q) {
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("derive_exponents: p must lie in (1,2]");
  if (!(q >= 1.0 && q < p)) throw DomainError("derive_exponents: q must lie in [1,p)");

  ExponentTable t;
  t.p = p;
  t.q = q;
  t.p_conj = conjugate(p);
  t.q_conj = q == 1.0 ? kInfinity : conjugate(q);
  t.epsilon = (p - q) / (q * (p - 1.0));
  t.alpha = 1.0 / (1.0 / p + 1.0 / t.q_conj);
  t.beta = 1.0 / q - 0.5;
  if (std::isinf(t.q_conj)) {
    t.s = 1.0;
    t.s_conj = kInfinity;
  } else {
    t.s = 2.0 * t.q_conj / (2.0 * t.q_conj - t.p_conj);
    t.s_conj = 2.0 * t.q_conj / t.p_conj;
  }
  t.mesh_exp = 1.0 / t.epsilon;
  return t;
}

double invert_for_q(double p, double s) {
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("invert_for_q: p must lie in (1,2]");
  if (!(s > 1.0 && s < 2.0)) throw DomainError("invert_for_q: s must lie in (1,2)");
  const double q_conj = conjugate(s) * conjugate(p) / 2.0;
  return conjugate(q_conj);
}

double invert_for_p(double q, double s) {
  if (!(q > 1.0 && q < 2.0)) throw DomainError("invert_for_p: q must lie in (1,2)");
  if (!(s < 2.0)) throw DomainError("invert_for_p: s must be below 2");
  if (s < q) throw DomainError("invert_for_p: infeasible, need s >= q");
  const double p_conj = 2.0 * conjugate(q) / conjugate(s);
  return conjugate(p_conj);
}

OrliczParams orlicz_params(double s, double r) {
  if (!(s > 1.0 && s < 2.0)) throw DomainError("orlicz_params: s must lie in (1,2)");
  OrliczParams o;
  o.s = s;
  o.r = r;
  o.rho = (2.0 - s) / (s - 1.0);
  // Allow a few ulps so that r == rho computed from the same s is accepted.
  const double threshold = std::max(2.0, o.rho);
  if (!(r >= threshold * (1.0 - 1e-14)))
    throw DomainError("orlicz_params: r must be at least max(2, rho)");
  o.p_tilde = 2.0 * r / (2.0 * r - o.rho);
  o.p_tilde_conj = 2.0 * r / o.rho;
  return o;
}

}  // namespace thinset
