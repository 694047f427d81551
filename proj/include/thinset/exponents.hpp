#pragma once

#include <limits>

namespace thinset {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Exponents tying p-stable q-Riderness to s-Riderness. An infinite q_conj
/// stands for q = 1.
struct ExponentTable {
  double p = 2.0;
  double q = 1.0;
  double p_conj = 2.0;
  double q_conj = kInfinity;
  double epsilon = 1.0;
  double alpha = 2.0;
  double beta = 0.5;
  double s = 1.0;
  double s_conj = kInfinity;  // 2q'/p', kept separately since s - 1 cancels near q = 1
  double mesh_exp = 1.0;  // 1/epsilon == s/(2-s)
};

struct OrliczParams {
  double s = 1.5;
  double r = 2.0;
  double rho = 1.0;
  double p_tilde = 4.0 / 3.0;
  double p_tilde_conj = 4.0;
};

/// Hoelder conjugate x/(x-1); conjugate(inf) == 1.
double conjugate(double x);

ExponentTable derive_exponents(double p, double q);

/// q with q' = s' p' / 2; always q < p.
double invert_for_q(double p, double s);

/// p with p' = 2 q' / s'; requires s >= q.
double invert_for_p(double q, double s);

OrliczParams orlicz_params(double s, double r);

}  // namespace thinset
