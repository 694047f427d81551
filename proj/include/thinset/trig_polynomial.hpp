#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "thinset/freq_set.hpp"

namespace thinset {

using Complex = std::complex<double>;

/// A trigonometric polynomial f(t) = sum_g c_g e^{i g t} on the circle,
/// stored sparsely. Zero coefficients are never stored.
class TrigPolynomial {
 public:
  using Terms = std::map<Frequency, Complex>;

  TrigPolynomial() = default;
  explicit TrigPolynomial(Terms terms);

  /// Sum of e_g over g in `a`.
  static TrigPolynomial indicator(const FreqSet& a);
  /// Terms with coefficients taken in spectrum order.
  static TrigPolynomial with_coefficients(const FreqSet& spectrum, const std::vector<Complex>& coeffs);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  Complex coefficient(Frequency g) const;
  FreqSet spectrum() const;

  /// max |g| over the spectrum, 0 when empty.
  Frequency degree() const;
  Frequency min_frequency() const;
  Frequency max_frequency() const;

  TrigPolynomial scaled(Complex c) const;
  /// Multiplies by e_{-shift}; |f| is unchanged.
  TrigPolynomial shifted(Frequency shift) const;
  /// Direct evaluation at a single point.
  Complex operator()(double t) const;

  friend bool operator==(const TrigPolynomial&, const TrigPolynomial&) = default;

 private:
  Terms terms_;
};

/// (sum |c_g|^q)^(1/q); q = inf gives max |c_g|.
double fq_norm(const TrigPolynomial& f, double q);

struct LorentzNorms {
  double l_q1 = 0.0;     // sum_n a*_n / n^(1/q')
  double l_qinf = 0.0;   // max_n n^(1/q) a*_n
};

LorentzNorms lorentz_norms(const TrigPolynomial& f, double q);

/// Values f(2 pi k / M), k = 0..M-1. Picks the cheaper of the two paths below.
std::vector<Complex> evaluate_grid(const TrigPolynomial& f, std::size_t m);
std::vector<Complex> evaluate_grid_direct(const TrigPolynomial& f, std::size_t m);
/// Folds each frequency modulo M and runs one inverse DFT.
std::vector<Complex> evaluate_grid_fast(const TrigPolynomial& f, std::size_t m);

/// Smallest power of two >= max(1024, 16 (degree + 1)).
std::size_t default_grid_size(Frequency degree);

/// Frequency half-width after centring the spectrum; |f| only depends on this.
Frequency centered_degree(const TrigPolynomial& f);

struct SupNormResult {
  double value = 0.0;       // lower estimate S, with ||f||_inf <= S (1 + rel_tol)
  double argmax = 0.0;      // point in [0, 2 pi) where S is attained
  std::size_t grid = 0;     // coarse grid size
  std::size_t candidates = 0;
};

SupNormResult sup_norm_detail(const TrigPolynomial& f, double rel_tol);

/// Certified sup norm estimate: the true value lies in [S, S (1 + rel_tol)].
double sup_norm(const TrigPolynomial& f, double rel_tol);

/// (mean_k |f(t_k)|^q)^(1/q) on an M-point grid; requires M >= 4 (degree + 1).
double lq_function_norm(const TrigPolynomial& f, double q, std::size_t m);

/// Coefficient convolution.
TrigPolynomial multiply(const TrigPolynomial& f, const TrigPolynomial& g);

struct LevelSet {
  int j = 1;
  FreqSet members;
};

/// Dyadic level sets of the normalised coefficients and the lacunary
/// sub-selection j_1 < j_2 < ... used by the Lorentz embedding argument.
struct LevelSetDecomposition {
  std::vector<LevelSet> levels;        // nonempty levels, increasing j
  std::vector<int> selected_indices;   // j_1 = 1 < j_2 < ...
  std::vector<std::size_t> sizes;      // N_l = |A_{j_l}|
  double ratio = 2.0;                  // R1

  std::size_t level_size(int j) const;
};

/// Level index j with 2^{-j+1} >= x > 2^{-j}, for x in (0, 1].
int dyadic_level(double x);

LevelSetDecomposition level_sets(const TrigPolynomial& f, double ratio);

}  // namespace thinset
