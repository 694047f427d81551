#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "thinset/errors.hpp"
#include "thinset/stable_norm.hpp"

using namespace thinset;

TEST_SUITE("stable_norm") {

TEST_CASE("default groups") {
  CHECK(default_groups(1) == 1);
  CHECK(default_groups(8) == 2);
  CHECK(default_groups(1000) == 10);
  CHECK(default_groups(1001) == 11);
}

TEST_CASE("single term rademacher is exact") {
  TrigPolynomial f({{5, Complex(3, 4)}});
  auto e = estimate_bracket(f, DriverDistribution::rademacher(1), 64);
  CHECK(e.value == doctest::Approx(5.0));
  CHECK(e.spread == 0.0);
  CHECK(estimate_bracket(TrigPolynomial(), DriverDistribution::rademacher(1), 10).value == 0.0);
}

TEST_CASE("two-term rademacher attains the sum") {
  auto e = estimate_bracket(TrigPolynomial::indicator(FreqSet{1, 2}), DriverDistribution::rademacher(3), 200);
  CHECK(e.value == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("single term stable matches E|Z|") {
  const double c = 2.0;
  for (auto d : {DriverDistribution::stable(1.5, 11, 1), DriverDistribution::gaussian(11, 2)}) {
    auto samples = bracket_samples(TrigPolynomial({{3, Complex(c, 0)}}), d, 20000);
    auto e = summarize_samples(samples, default_groups(samples.size()), d.kind == DriverDistribution::Kind::p_stable);
    double target = c * expected_modulus(d);
    if (d.kind == DriverDistribution::Kind::p_stable) {
      // Heavy tails: the median of means sits within a few group spreads.
      CHECK(std::abs(e.value - target) < 3.0 * e.spread);
    } else {
      double mean = 0.0, m2 = 0.0;
      for (double s : samples) { mean += s; m2 += s * s; }
      mean /= samples.size();
      double se = std::sqrt((m2 / samples.size() - mean * mean) / samples.size());
      CHECK(std::abs(e.value - target) < 3.0 * se);
    }
  }
}

TEST_CASE("summaries are permutation invariant within groups") {
  std::vector<double> xs{1, 9, 2, 8, 3, 7, 4, 6, 5, 10, 0, 11};
  auto a = summarize_samples(xs, 3, true);
  CHECK(a.groups == 3);
  CHECK(a.group_means.size() == 3);
  // Swap the first and last blocks of four and shuffle inside the middle one.
  std::vector<double> ys{5, 10, 0, 11, 7, 3, 4, 6, 1, 9, 2, 8};
  auto c = summarize_samples(ys, 3, true);
  CHECK(c.value == a.value);
  CHECK(c.spread == a.spread);
  auto b = summarize_samples(xs, 1, false);
  CHECK(b.value == doctest::Approx(66.0 / 12.0));
  CHECK_THROWS(summarize_samples(xs, 13, true));
}

TEST_CASE("estimates are reproducible") {
  auto f = TrigPolynomial::indicator(FreqSet{1, 3, 7, 15});
  auto d = DriverDistribution::stable(1.3, 5, 9);
  auto a = estimate_bracket(f, d, 300);
  auto b = estimate_bracket(f, d, 300);
  CHECK(a.value == b.value);
  CHECK(a.group_means == b.group_means);
}

TEST_CASE("rademacher bracket dominates the L2 norm") {
  std::mt19937_64 gen(4);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 10; ++i) {
    TrigPolynomial::Terms t;
    for (int k = 0; k < 6; ++k) t[1 + 5 * k + i] = Complex(nd(gen), nd(gen));
    TrigPolynomial f(t);
    auto e = estimate_bracket(f, DriverDistribution::rademacher(2, i), 400);
    CHECK(e.value >= fq_norm(f, 2.0) - 3.0 * e.spread);
  }
}

TEST_CASE("mp tail bound") {
  const double p = 1.5;
  double direct = 0.0;
  for (int k = 2; k <= 5; ++k) direct += 1.0 / (k * std::pow(std::log(k), 1.0 / p));
  CHECK(mp_tail_bound(TrigPolynomial({{5, Complex(1, 0)}}), p) == doctest::Approx(direct));

  FreqSet a{1, 4, 9, 40};
  double series = 0.0;
  for (int k = 2; k <= 40; ++k) series += 1.0 / (k * std::pow(std::log(k), 1.0 / p));
  double mp = mp_tail_bound(TrigPolynomial::indicator(a), p);
  CHECK(mp <= std::pow(4.0, 1.0 / p) * series);
  CHECK(mp_tail_bound(TrigPolynomial::indicator(FreqSet{1, 2, 4, 9, 40}), p) >= mp);

  CHECK_THROWS_AS(mp_tail_bound(TrigPolynomial::indicator(FreqSet{0, 3}), p), DomainError);
  CHECK_THROWS_AS(mp_tail_bound(TrigPolynomial::indicator(FreqSet{-2, 3}), p), DomainError);
}

TEST_CASE("closed-form comparators") {
  CHECK(zero_one_upper(1, 3, 1.5) == doctest::Approx(std::pow(std::log(3.0), 1.0 / 3.0)));
  CHECK(zero_one_upper(4, 100, 2.0) == doctest::Approx(2.0 * std::sqrt(std::log(100.0))));
  CHECK(zero_one_upper(14, 50, 1.4) / zero_one_upper(7, 50, 1.4) == doctest::Approx(std::pow(2.0, 1.0 / 1.4)));

  std::vector<Frequency> iv;
  for (Frequency g = 1; g <= 30; ++g) iv.push_back(g);
  CHECK(sz_lower(TrigPolynomial::indicator(FreqSet(iv)), 1.5) ==
        doctest::Approx(std::pow(30.0, 1.0 / 1.5) * std::pow(std::log(30.0), 1.0 / 3.0)));
  auto f = TrigPolynomial({{1, Complex(1, 0)}, {2, Complex(1, 0)}});
  CHECK(sz_lower(f, 2.0) == doctest::Approx(std::sqrt(2.0) * std::sqrt(std::log(2.0))));
  CHECK(sz_lower(f.scaled(Complex(0.5, 0)), 2.0) == doctest::Approx(0.5 * sz_lower(f, 2.0)));
  CHECK_THROWS_AS(sz_lower(TrigPolynomial({{1, Complex(1, 0)}}), 1.5), DomainError);
}

}  // TEST_SUITE
