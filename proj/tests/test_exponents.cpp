#include <doctest.h>

#include <cmath>
#include <random>

#include "thinset/errors.hpp"
#include "thinset/exponents.hpp"

using namespace thinset;

namespace {

bool rel_close(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_SUITE("exponents") {

TEST_CASE("conjugate") {
  CHECK(conjugate(2.0) == doctest::Approx(2.0));
  CHECK(conjugate(4.0 / 3.0) == doctest::Approx(4.0));
  CHECK(conjugate(1.5) == doctest::Approx(3.0));
  CHECK(conjugate(kInfinity) == 1.0);
  CHECK(conjugate(conjugate(1.7)) == doctest::Approx(1.7).epsilon(1e-14));
  CHECK_THROWS_AS(conjugate(1.0), DomainError);
  CHECK_THROWS_AS(conjugate(0.5), DomainError);
}

TEST_CASE("derive_exponents examples") {
  auto t = derive_exponents(2.0, 4.0 / 3.0);
  CHECK(t.epsilon == doctest::Approx(0.5));
  CHECK(t.beta == doctest::Approx(0.25));
  CHECK(t.s == doctest::Approx(4.0 / 3.0));
  // 1/alpha = 1/2 + 1/4.
  CHECK(t.alpha == doctest::Approx(4.0 / 3.0));

  for (double q : {1.1, 1.3, 1.5, 1.9}) CHECK(derive_exponents(2.0, q).s == doctest::Approx(q));

  auto one = derive_exponents(1.5, 1.0);
  CHECK(one.q_conj == kInfinity);
  CHECK(one.epsilon == doctest::Approx(1.0));
  CHECK(one.s == doctest::Approx(1.0));
  CHECK(one.mesh_exp == doctest::Approx(1.0));

  CHECK_THROWS_AS(derive_exponents(1.5, 1.5), DomainError);
  CHECK_THROWS_AS(derive_exponents(2.5, 1.5), DomainError);
  CHECK_THROWS_AS(derive_exponents(1.5, 0.9), DomainError);
}

TEST_CASE("inverse maps") {
  CHECK(invert_for_q(2.0, 4.0 / 3.0) == doctest::Approx(4.0 / 3.0));
  CHECK(invert_for_q(1.6, 4.0 / 3.0) == doctest::Approx(16.0 / 13.0));
  CHECK(invert_for_q(2.0, 1.7) == doctest::Approx(1.7));
  CHECK(invert_for_q(1.5, 4.0 / 3.0) == doctest::Approx(1.2));
  CHECK(invert_for_p(4.0 / 3.0, 4.0 / 3.0) == doctest::Approx(2.0));
  CHECK(invert_for_p(16.0 / 13.0, 4.0 / 3.0) == doctest::Approx(1.6));
  CHECK_THROWS_AS(invert_for_p(1.5, 4.0 / 3.0), DomainError);
}

TEST_CASE("orlicz parameters") {
  auto a = orlicz_params(4.0 / 3.0, 2.0);
  CHECK(a.rho == doctest::Approx(2.0));
  CHECK(a.p_tilde == doctest::Approx(2.0));
  auto b = orlicz_params(1.2, 4.0);
  CHECK(b.rho == doctest::Approx(4.0));
  CHECK(b.p_tilde == doctest::Approx(2.0));
  auto c = orlicz_params(1.5, 2.0);
  CHECK(c.rho == doctest::Approx(1.0));
  CHECK(c.p_tilde == doctest::Approx(4.0 / 3.0));
  CHECK(c.p_tilde == doctest::Approx(4.0 * 0.5 / (7.5 - 6.0)));
  CHECK(c.p_tilde_conj == doctest::Approx(4.0));
  CHECK_THROWS_AS(orlicz_params(1.2, 3.0), DomainError);
  CHECK_THROWS_AS(orlicz_params(1.5, 1.5), DomainError);
}

TEST_CASE("random tables satisfy the invariants") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    double p = 1.0 + 1e-3 + (1.0 - 1e-3) * u(gen);
    double q = 1.0 + 1e-3 + (p - 1.0 - 2e-3) * u(gen);
    if (!(q < p)) continue;
    auto t = derive_exponents(p, q);
    REQUIRE(rel_close(t.epsilon, (p - q) / (q * (p - 1.0))));
    REQUIRE(rel_close(t.epsilon, 1.0 - t.p_conj / t.q_conj));
    REQUIRE(rel_close(1.0 / t.alpha, 1.0 / p + 1.0 / t.q_conj));
    REQUIRE(rel_close(t.beta, 1.0 / q - 0.5));
    REQUIRE(rel_close(2.0 * t.q_conj, t.s_conj * t.p_conj));
    REQUIRE(rel_close(1.0 / t.s + 1.0 / t.s_conj, 1.0));
    REQUIRE(rel_close(t.mesh_exp, 1.0 / t.epsilon, 1e-11));
    REQUIRE(rel_close(t.mesh_exp, t.s / (2.0 - t.s), 1e-11));
    REQUIRE(t.s >= 1.0);
    REQUIRE(t.s < 2.0);
    REQUIRE(rel_close(invert_for_q(p, t.s), q, 1e-11));
    REQUIRE(rel_close(derive_exponents(invert_for_p(q, t.s), q).s, t.s, 1e-11));
  }
}

}  // TEST_SUITE
