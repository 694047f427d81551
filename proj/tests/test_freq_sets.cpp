#include <doctest.h>

#include <cmath>
#include <numeric>

#include "thinset/errors.hpp"
#include "thinset/freq_sets.hpp"

using namespace thinset;

TEST_SUITE("freq_sets") {

TEST_CASE("family examples") {
  CHECK(generate(SetKind::squares(), 30) == FreqSet{1, 4, 9, 16, 25});
  CHECK(generate(SetKind::powers(3), 100) == FreqSet{3, 9, 27, 81});
  CHECK(generate(SetKind::interval(), 4) == FreqSet{1, 2, 3, 4});
  CHECK(generate(SetKind::sums_of_powers(2, 2), 12) == FreqSet{6, 10, 12});
  CHECK(SetKind::parse("powers:5").base == 5);
  auto s = SetKind::parse("sums_of_powers:3:2");
  CHECK(s.tag == SetKind::Tag::sums_of_powers);
  CHECK(s.terms == 2);
  CHECK(SetKind::parse("random:0.25", 4).density == doctest::Approx(0.25));
  CHECK_THROWS_AS(SetKind::parse("primes"), UsageError);
  CHECK_THROWS_AS(SetKind::parse("powers:x"), UsageError);
}

TEST_CASE("mesh counts") {
  std::vector<Frequency> cp{10, 100, 1000, 10000};
  auto sq = mesh_counts(generate(SetKind::squares(), 10000), cp);
  CHECK(sq == std::vector<std::size_t>{3, 10, 31, 100});
  auto pw = mesh_counts(generate(SetKind::powers(2), 10000), cp);
  CHECK(pw == std::vector<std::size_t>{3, 6, 9, 13});
}

TEST_CASE("random sets concentrate") {
  const Frequency n = 100000;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto a = generate(SetKind::random(0.1, seed), n);
    CHECK(std::abs(static_cast<double>(a.size()) - 0.1 * n) < 4.0 * std::sqrt(0.1 * n));
  }
  CHECK(generate(SetKind::random(0.3, 9), 500) == generate(SetKind::random(0.3, 9), 500));
  CHECK(generate(SetKind::random(0.0, 9), 500).empty());
}

TEST_CASE("exponent fits recover synthetic laws") {
  std::vector<Frequency> cp;
  std::vector<std::size_t> root, logsq;
  for (int e = 2; e <= 12; ++e) {
    auto n = static_cast<Frequency>(std::pow(10.0, e));
    cp.push_back(n);
    root.push_back(static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n)))));
    double l = std::log(static_cast<double>(n));
    logsq.push_back(static_cast<std::size_t>(std::llround(100.0 * l * l)));
  }
  auto f1 = fit_mesh_exponent(root, cp, MeshModel::power_log);
  CHECK(f1.exponent == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(f1.residual < 1e-2);
  auto f2 = fit_mesh_exponent(logsq, cp, MeshModel::polylog);
  CHECK(f2.exponent == doctest::Approx(2.0).epsilon(1e-3));

  CHECK_THROWS_AS(fit_mesh_exponent({5, 5, 5, 5}, {10, 100, 1000, 10000}, MeshModel::polylog), DomainError);
  CHECK_THROWS_AS(fit_mesh_exponent({1, 2, 3}, {10, 100, 1000}, MeshModel::polylog), PreconditionError);
  CHECK(parse_mesh_model(to_string(MeshModel::polylog)) == MeshModel::polylog);
  CHECK_THROWS_AS(parse_mesh_model("linear"), UsageError);
}

TEST_CASE("representation counts") {
  auto r = r_alpha(FreqSet{1, 2}, 2, 2, 4);
  CHECK(r.counts == std::vector<std::int64_t>{0, 0, 1, 2, 1});
  CHECK(r.mean_square == doctest::Approx(6.0 / 4.0));

  auto sq = generate(SetKind::squares(), 400);
  for (unsigned alpha : {2u, 3u}) {
    auto rc = r_alpha(sq, 6, alpha, 36 * alpha);
    std::int64_t total = std::accumulate(rc.counts.begin(), rc.counts.end(), std::int64_t{0});
    CHECK(total == static_cast<std::int64_t>(std::pow(6.0, alpha)));
  }

  auto pw = r_alpha(generate(SetKind::powers(2), 1 << 20), 20, 2, 1 << 20);
  std::int64_t mx = 0;
  for (auto c : pw.counts) mx = std::max(mx, c);
  CHECK(mx == 2);

  CHECK_THROWS_AS(r_alpha(FreqSet{1, 2}, 3, 2, 4), PreconditionError);
  CHECK_THROWS_AS(r_alpha(FreqSet{1, 2}, 2, 1, 4), PreconditionError);
}

}  // TEST_SUITE
