#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thinset/rng.hpp"
#include "thinset/trig_polynomial.hpp"

namespace thinset {

/// Law of the i.i.d. coefficients multiplying a polynomial's Fourier terms.
/// The Gaussian and p = 2 stable laws coincide: E exp(i Re(conj(z) Z)) = exp(-|z|^2).
struct DriverDistribution {
  enum class Kind { rademacher, complex_gaussian, p_stable };

  Kind kind = Kind::rademacher;
  double p = 2.0;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  static DriverDistribution rademacher(std::uint64_t seed = 0, std::uint64_t stream = 0) {
    return {Kind::rademacher, 2.0, seed, stream};
  }
  static DriverDistribution gaussian(std::uint64_t seed = 0, std::uint64_t stream = 0) {
    return {Kind::complex_gaussian, 2.0, seed, stream};
  }
  static DriverDistribution stable(double p, std::uint64_t seed = 0, std::uint64_t stream = 0) {
    return {Kind::p_stable, p, seed, stream};
  }
};

std::string to_string(DriverDistribution::Kind kind);
DriverDistribution::Kind parse_driver_kind(const std::string& name);

/// One draw of the totally skewed positive alpha-stable law, calibrated so
/// that E exp(-u A) = exp(-(2u)^alpha).
double draw_positive_stable(double alpha, Rng& rng);

/// One draw of Z = sqrt(A) (G1 + i G2) with E exp(i Re(conj(z) Z)) = exp(-|z|^p).
Complex draw_isotropic_stable(double p, Rng& rng);

std::vector<double> sample_positive_stable(double alpha, std::size_t n, Rng& rng);
std::vector<Complex> sample_isotropic_stable(double p, std::size_t n, Rng& rng);

/// Fills `out` with i.i.d. draws of `d` from `rng`.
void fill_driver(const DriverDistribution& d, std::span<Complex> out, Rng& rng);

/// n draws from the stream (d.seed, d.stream_id, index).
std::vector<Complex> sample_driver(const DriverDistribution& d, std::size_t n, std::uint64_t index = 0);

/// Closed-form E|Z|: 1 (Rademacher), sqrt(pi) (Gaussian), Gamma(1 - 1/p) (p-stable).
double expected_modulus(const DriverDistribution& d);

}  // namespace thinset
