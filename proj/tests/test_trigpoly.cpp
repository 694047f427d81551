#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "thinset/errors.hpp"
#include "thinset/trig_polynomial.hpp"

using namespace thinset;

namespace {

TrigPolynomial random_poly(std::mt19937_64& gen, std::size_t terms, Frequency lo, Frequency hi) {
  std::uniform_int_distribution<Frequency> freq(lo, hi);
  std::normal_distribution<double> nd;
  TrigPolynomial::Terms t;
  while (t.size() < terms) t[freq(gen)] = Complex(nd(gen), nd(gen));
  return TrigPolynomial(std::move(t));
}

// Dense-grid bracket for ||f||_inf. The grid maximum is attained, and a real
// trigonometric polynomial of degree n sampled with spacing h keeps at least
// cos(n h / 2) of its sup norm; applied to Re(e^{-i phi} e^{-i c t} f) with c
// the spectrum midpoint after t -> 2t this gives the upper end.
struct SupBracket {
  double low = 0.0;
  double high = 0.0;
};

SupBracket brute_sup(const TrigPolynomial& f) {
  const std::size_t m = 1 << 18;
  double best = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    double t = 2.0 * std::numbers::pi * static_cast<double>(k) / m;
    best = std::max(best, std::abs(f(t)));
  }
  const double h = 2.0 * std::numbers::pi / m;
  const double width = static_cast<double>(f.max_frequency() - f.min_frequency());
  REQUIRE(width * h / 4.0 < 1.0);
  return {best, best / std::cos(width * h / 4.0)};
}

}  // namespace

TEST_SUITE("trigpoly") {

TEST_CASE("construction drops zeros and merges") {
  TrigPolynomial f({{1, Complex(1, 0)}, {2, Complex(0, 0)}, {-3, Complex(0, 2)}});
  CHECK(f.size() == 2);
  CHECK(f.degree() == 3);
  CHECK(f.coefficient(2) == Complex(0, 0));
  CHECK(f.spectrum() == FreqSet{-3, 1});
  CHECK(TrigPolynomial().empty());
  CHECK(TrigPolynomial().degree() == 0);
}

TEST_CASE("fq_norm") {
  auto ind = TrigPolynomial::indicator(FreqSet{1, 5, 9, 12});
  CHECK(fq_norm(ind, 3.0) == doctest::Approx(std::pow(4.0, 1.0 / 3.0)));
  CHECK(fq_norm(TrigPolynomial(), 2.0) == 0.0);
  TrigPolynomial f({{0, Complex(3, 0)}, {1, Complex(0, 4)}});
  CHECK(fq_norm(f, 2.0) == doctest::Approx(5.0));
  CHECK(fq_norm(f, std::numeric_limits<double>::infinity()) == doctest::Approx(4.0));
  CHECK_THROWS_AS(fq_norm(f, 0.5), DomainError);
}

TEST_CASE("lorentz norms") {
  double q = 1.5, qc = 3.0;
  auto ind = TrigPolynomial::indicator(FreqSet{1, 2, 3, 4, 5, 6, 7});
  double expect = 0.0;
  for (int k = 1; k <= 7; ++k) expect += std::pow(k, -1.0 / qc);
  auto ln = lorentz_norms(ind, q);
  CHECK(ln.l_q1 == doctest::Approx(expect));
  CHECK(ln.l_q1 <= q * std::pow(7.0, 1.0 / q));

  auto single = lorentz_norms(TrigPolynomial({{4, Complex(0, -2.5)}}), q);
  CHECK(single.l_q1 == doctest::Approx(2.5));
  CHECK(single.l_qinf == doctest::Approx(2.5));

  TrigPolynomial::Terms geo;
  for (int k = 0; k <= 6; ++k) geo[k] = Complex(std::pow(0.5, k), 0);
  double best = 0.0;
  for (int n = 1; n <= 7; ++n) best = std::max(best, std::pow(n, 2.0 / 3.0) * std::pow(2.0, -(n - 1)));
  CHECK(lorentz_norms(TrigPolynomial(geo), q).l_qinf == doctest::Approx(best));

  auto empty = lorentz_norms(TrigPolynomial(), q);
  CHECK(empty.l_q1 == 0.0);
  CHECK(empty.l_qinf == 0.0);

  std::mt19937_64 gen(3);
  for (int i = 0; i < 50; ++i) {
    auto f = random_poly(gen, 1 + i % 20, -100, 100);
    auto l = lorentz_norms(f, 1.3);
    double fq = fq_norm(f, 1.3);
    CHECK(l.l_qinf <= fq * (1 + 1e-12));
    CHECK(fq <= l.l_q1 * (1 + 1e-12));
    CHECK(fq_norm(f, 1.8) <= fq * (1 + 1e-12));
  }
}

TEST_CASE("grid evaluation") {
  auto c = evaluate_grid(TrigPolynomial({{0, Complex(1, 0)}}), 4);
  for (auto v : c) CHECK(std::abs(v - Complex(1, 0)) < 1e-15);
  auto e1 = evaluate_grid(TrigPolynomial({{1, Complex(1, 0)}}), 4);
  const Complex expect[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(e1[k] - expect[k]) < 1e-15);

  std::vector<Frequency> dn;
  for (Frequency g = -6; g <= 6; ++g) dn.push_back(g);
  CHECK(evaluate_grid(TrigPolynomial::indicator(FreqSet(dn)), 64)[0].real() == doctest::Approx(13.0));

  std::mt19937_64 gen(11);
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(gen, 1 + i % 40, -512, 512);
    auto a = evaluate_grid_direct(f, 2048);
    auto b = evaluate_grid_fast(f, 2048);
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    CHECK(worst < 1e-9);
  }
  // Aliased frequencies fold exactly.
  auto f = TrigPolynomial({{3, Complex(1, 0)}, {3 + 16, Complex(2, 0)}, {-40, Complex(0, 1)}});
  auto a = evaluate_grid_direct(f, 16), b = evaluate_grid_fast(f, 16);
  for (int k = 0; k < 16; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-12);
}

TEST_CASE("sup norm") {
  CHECK(sup_norm(TrigPolynomial(), 1e-3) == 0.0);
  CHECK(sup_norm(TrigPolynomial({{7, Complex(3, -4)}}), 1e-3) == 5.0);
  CHECK(sup_norm(TrigPolynomial::indicator(FreqSet{2, 17, 40, 1000}), 1e-6) == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(sup_norm(TrigPolynomial({{1, Complex(1, 0)}, {-1, Complex(1, 0)}}), 1e-6) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK_THROWS_AS(sup_norm(TrigPolynomial::indicator(FreqSet{1, 2}), 0.0), DomainError);
  CHECK_THROWS_AS(sup_norm(TrigPolynomial::indicator(FreqSet{1, 2}), 0.2), DomainError);

  std::mt19937_64 gen(5);
  for (int i = 0; i < 40; ++i) {
    auto f = random_poly(gen, 2 + i % 12, i % 2 ? -60 : 1000, i % 2 ? 60 : 1200);
    for (double tol : {1e-3, 1e-6}) {
      double s = sup_norm(f, tol);
      auto truth = brute_sup(f);
      CHECK(s <= truth.high * (1 + 1e-12));
      CHECK(truth.low <= s * (1 + tol) * (1 + 1e-12));
      CHECK(s >= fq_norm(f, 2.0) * (1 - 1e-12));
      CHECK(s <= fq_norm(f, 1.0) * (1 + 1e-12));
    }
  }
}

TEST_CASE("sup norm of a nearly flat modulus") {
  // One dominant coefficient, as in heavy-tailed draws.
  TrigPolynomial f({{1, Complex(100, 0)}, {7, Complex(0.3, 0.1)}, {4000, Complex(-0.2, 0)}, {9, Complex(0, 0.05)}});
  double s = sup_norm(f, 1e-3);
  auto truth = brute_sup(f);
  CHECK(s <= truth.high * (1 + 1e-12));
  CHECK(truth.low <= s * (1 + 1e-3) * (1 + 1e-12));
}

TEST_CASE("lq function norm") {
  CHECK(lq_function_norm(TrigPolynomial({{5, Complex(1, 0)}}), 3.0, 64) == doctest::Approx(1.0));
  auto f = TrigPolynomial::indicator(FreqSet{1, 2});
  CHECK(lq_function_norm(f, 2.0, 16) == doctest::Approx(std::sqrt(2.0)));
  CHECK(lq_function_norm(f, 4.0, 16) == doctest::Approx(std::pow(6.0, 0.25)));
  CHECK_THROWS_AS(lq_function_norm(f, 2.0, 8), PreconditionError);

  std::mt19937_64 gen(9);
  for (int i = 0; i < 20; ++i) {
    auto g = random_poly(gen, 10, -100, 100);
    double l2 = lq_function_norm(g, 2.0, 512);
    CHECK(l2 * l2 == doctest::Approx(std::pow(fq_norm(g, 2.0), 2.0)).epsilon(1e-9));
  }
}

TEST_CASE("multiply") {
  auto f = TrigPolynomial::indicator(FreqSet{1, 2});
  CHECK(multiply(f, TrigPolynomial()).empty());
  CHECK(multiply(f, f) == TrigPolynomial({{2, Complex(1, 0)}, {3, Complex(2, 0)}, {4, Complex(1, 0)}}));
  auto g = TrigPolynomial::indicator(FreqSet{1, 2, 3});
  CHECK(multiply(g, g).coefficient(4) == Complex(3, 0));

  TrigPolynomial a({{0, Complex(2, 0)}, {3, Complex(-1, 0)}});
  TrigPolynomial b({{1, Complex(5, 0)}, {-2, Complex(3, 0)}});
  CHECK(multiply(a, b) == multiply(b, a));
  CHECK(multiply(multiply(a, b), g) == multiply(a, multiply(b, g)));
}

TEST_CASE("level sets") {
  auto ind = level_sets(TrigPolynomial::indicator(FreqSet{3, 8, 20}), 2.0);
  REQUIRE(ind.levels.size() == 1);
  CHECK(ind.levels[0].j == 1);
  CHECK(ind.levels[0].members == FreqSet{3, 8, 20});
  CHECK(ind.selected_indices == std::vector<int>{1});

  TrigPolynomial f({{1, Complex(1, 0)}, {2, Complex(0.6, 0)}, {3, Complex(0.3, 0)}, {4, Complex(0.1, 0)}});
  auto d = level_sets(f.scaled(Complex(0, 7)), 2.0);
  CHECK(d.level_size(1) == 2);
  CHECK(d.level_size(2) == 1);
  CHECK(d.level_size(3) == 0);
  CHECK(d.level_size(4) == 1);

  // R1 = 4 with |A_1| = 2: a later level must exceed 8 elements to be selected.
  TrigPolynomial::Terms t{{1, Complex(1, 0)}, {2, Complex(1, 0)}};
  for (Frequency g = 10; g < 18; ++g) t[g] = Complex(0.4, 0);   // 8 in A_2
  for (Frequency g = 30; g < 39; ++g) t[g] = Complex(0.2, 0);   // 9 in A_3
  auto r = level_sets(TrigPolynomial(t), 4.0);
  CHECK(r.selected_indices == std::vector<int>{1, 3});
  CHECK(r.sizes == std::vector<std::size_t>{2, 9});

  CHECK(dyadic_level(1.0) == 1);
  CHECK(dyadic_level(0.5) == 2);
  CHECK(dyadic_level(0.50001) == 1);
  CHECK(dyadic_level(0.25) == 3);
  CHECK_THROWS_AS(level_sets(f, 1.0), DomainError);
}

}  // TEST_SUITE
