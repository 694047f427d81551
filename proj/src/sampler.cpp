#include "thinset/sampler.hpp"

#include <cmath>
#include <numbers>

#include "thinset/errors.hpp"

namespace thinset {

std::string to_string(DriverDistribution::Kind kind) {
  switch (kind) {
    case DriverDistribution::Kind::rademacher: return "rademacher";
    case DriverDistribution::Kind::complex_gaussian: return "complex_gaussian";
    case DriverDistribution::Kind::p_stable: return "p_stable";
  }
  return "unknown";
}

DriverDistribution::Kind parse_driver_kind(const std::string& name) {
  if (name == "rademacher") return DriverDistribution::Kind::rademacher;
  if (name == "complex_gaussian" || name == "gaussian") return DriverDistribution::Kind::complex_gaussian;
  if (name == "p_stable" || name == "stable") return DriverDistribution::Kind::p_stable;
  throw UsageError("unknown driver distribution: " + name);
}

double draw_positive_stable(double alpha, Rng& rng) {
  // Kanter's representation: with U ~ U(0, pi) and E ~ Exp(1),
  //   S = sin(a U) / sin(U)^{1/a} * (sin((1-a) U) / E)^{(1-a)/a}
  // has E exp(-u S) = exp(-u^a). A = 2 S then has E exp(-u A) = exp(-(2u)^a).
  const double u = std::numbers::pi * rng.uniform();
  const double e = rng.exponential();
  const double s = std::sin(alpha * u) / std::pow(std::sin(u), 1.0 / alpha) *
                   std::pow(std::sin((1.0 - alpha) * u) / e, (1.0 - alpha) / alpha);
  return 2.0 * s;
}

Complex draw_isotropic_stable(double p, Rng& rng) {
  const double a = p == 2.0 ? 2.0 : draw_positive_stable(p / 2.0, rng);
  const double scale = std::sqrt(a);
  const double g1 = rng.normal();
  const double g2 = rng.normal();
  return {scale * g1, scale * g2};
}

std::vector<double> sample_positive_stable(double alpha, std::size_t n, Rng& rng) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("sample_positive_stable: alpha must lie in (0,1)");
  std::vector<double> out(n);
  for (auto& v : out) v = draw_positive_stable(alpha, rng);
  return out;
}

std::vector<Complex> sample_isotropic_stable(double p, std::size_t n, Rng& rng) {
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("sample_isotropic_stable: p must lie in (1,2]");
  std::vector<Complex> out(n);
  for (auto& v : out) v = draw_isotropic_stable(p, rng);
  return out;
}

void fill_driver(const DriverDistribution& d, std::span<Complex> out, Rng& rng) {
  switch (d.kind) {
    case DriverDistribution::Kind::rademacher:
      for (auto& v : out) v = Complex((rng.next() >> 63) != 0 ? 1.0 : -1.0, 0.0);
      return;
    case DriverDistribution::Kind::complex_gaussian:
      for (auto& v : out) v = draw_isotropic_stable(2.0, rng);
      return;
    case DriverDistribution::Kind::p_stable:
      if (!(d.p > 1.0 && d.p <= 2.0)) throw DomainError("p_stable driver: p must lie in (1,2]");
      for (auto& v : out) v = draw_isotropic_stable(d.p, rng);
      return;
  }
}

std::vector<Complex> sample_driver(const DriverDistribution& d, std::size_t n, std::uint64_t index) {
  Rng rng(d.seed, d.stream_id, index);
  std::vector<Complex> out(n);
  fill_driver(d, out, rng);
  return out;
}

double expected_modulus(const DriverDistribution& d) {
  switch (d.kind) {
    case DriverDistribution::Kind::rademacher: return 1.0;
    case DriverDistribution::Kind::complex_gaussian: return std::sqrt(std::numbers::pi);
    case DriverDistribution::Kind::p_stable: return std::tgamma(1.0 - 1.0 / d.p);
  }
  return 0.0;
}

}  // namespace thinset
