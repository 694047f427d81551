#include "thinset/freq_sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/algorithm/string.hpp>

#include "thinset/errors.hpp"
#include "thinset/rng.hpp"

namespace thinset {

namespace {

constexpr std::uint64_t kRandomSetStream = 0x5e75;

void sums_of_powers_rec(const std::vector<Frequency>& pw, std::size_t from, int left, Frequency acc,
                        Frequency limit, std::vector<Frequency>& out) {
  if (left == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i < pw.size(); ++i) {
    if (pw[i] > limit - acc) break;
    sums_of_powers_rec(pw, i + 1, left - 1, acc + pw[i], limit, out);
  }
}

std::vector<Frequency> powers_up_to(Frequency base, Frequency limit) {
  std::vector<Frequency> pw;
  for (Frequency v = base; v <= limit; v *= base) {
    pw.push_back(v);
    if (v > std::numeric_limits<Frequency>::max() / base) break;
  }
  return pw;
}

}  // namespace

SetKind SetKind::parse(const std::string& text, std::uint64_t seed) {
  std::vector<std::string> parts;
  boost::split(parts, text, boost::is_any_of(":"));
  const std::string& head = parts[0];
  try {
    if (head == "squares" && parts.size() == 1) return squares();
    if (head == "interval" && parts.size() == 1) return interval();
    if (head == "powers" && parts.size() <= 2)
      return powers(parts.size() == 2 ? std::stoll(parts[1]) : 2);
    if (head == "sums_of_powers" && parts.size() == 3)
      return sums_of_powers(std::stoll(parts[1]), std::stoi(parts[2]));
    if (head == "random" && parts.size() == 2) return random(std::stod(parts[1]), seed);
  } catch (const std::logic_error&) {
    throw UsageError("malformed set kind '" + text + "'");
  }
  throw UsageError("unknown set kind '" + text + "'");
}

std::string SetKind::name() const {
  switch (tag) {
    case Tag::squares: return "squares";
    case Tag::powers: return "powers:" + std::to_string(base);
    case Tag::sums_of_powers: return "sums_of_powers:" + std::to_string(base) + ":" + std::to_string(terms);
    case Tag::interval: return "interval";
    case Tag::random: return "random:" + std::to_string(density);
  }
  return "?";
}

FreqSet generate(const SetKind& kind, Frequency limit) {
  if (limit < 1) throw PreconditionError("set limit must be >= 1");
  std::vector<Frequency> out;
  switch (kind.tag) {
    case SetKind::Tag::squares:
      for (Frequency k = 1; k <= limit / k; ++k) out.push_back(k * k);
      break;
    case SetKind::Tag::powers:
      if (kind.base < 2) throw DomainError("powers need base >= 2");
      out = powers_up_to(kind.base, limit);
      break;
    case SetKind::Tag::sums_of_powers:
      if (kind.base < 2 || kind.terms < 1) throw DomainError("sums_of_powers need base >= 2, d >= 1");
      sums_of_powers_rec(powers_up_to(kind.base, limit), 0, kind.terms, 0, limit, out);
      break;
    case SetKind::Tag::interval:
      if (limit > Frequency{1} << 30) throw ResourceError("interval limit too large");
      out.resize(static_cast<std::size_t>(limit));
      std::iota(out.begin(), out.end(), Frequency{1});
      break;
    case SetKind::Tag::random: {
      if (!(kind.density >= 0.0 && kind.density <= 1.0)) throw DomainError("density must be in [0,1]");
      if (limit > Frequency{1} << 30) throw ResourceError("random set limit too large");
      Rng rng(kind.seed, kRandomSetStream, 0);
      for (Frequency j = 1; j <= limit; ++j)
        if (rng.uniform() < kind.density) out.push_back(j);
      break;
    }
  }
  return FreqSet(std::move(out));
}

std::vector<std::size_t> mesh_counts(const FreqSet& lambda, const std::vector<Frequency>& checkpoints) {
  std::vector<std::size_t> out;
  out.reserve(checkpoints.size());
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw PreconditionError("checkpoints must be increasing");
    auto lo = std::lower_bound(lambda.begin(), lambda.end(), Frequency{1});
    auto hi = std::upper_bound(lambda.begin(), lambda.end(), checkpoints[i]);
    out.push_back(static_cast<std::size_t>(hi > lo ? hi - lo : 0));
  }
  return out;
}

std::string to_string(MeshModel m) { return m == MeshModel::polylog ? "polylog" : "power_log"; }

MeshModel parse_mesh_model(const std::string& name) {
  if (name == "polylog") return MeshModel::polylog;
  if (name == "power_log") return MeshModel::power_log;
  throw UsageError("unknown mesh model '" + name + "'");
}

MeshFit fit_mesh_exponent(const std::vector<std::size_t>& counts,
                          const std::vector<Frequency>& checkpoints, MeshModel model) {
  if (counts.size() != checkpoints.size()) throw PreconditionError("counts/checkpoints length mismatch");
  if (counts.size() < 4) throw PreconditionError("mesh fit needs at least 4 checkpoints");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) throw DomainError("mesh fit needs positive counts");
    if (checkpoints[i] < 3) throw DomainError("mesh fit needs checkpoints >= 3");
    double ln = std::log(static_cast<double>(checkpoints[i]));
    xs.push_back(model == MeshModel::polylog ? std::log(ln) : ln);
    ys.push_back(std::log(static_cast<double>(counts[i])));
  }
  if (std::all_of(counts.begin(), counts.end(), [&](std::size_t c) { return c == counts[0]; }))
    throw DomainError("mesh fit is degenerate for constant counts");
  double n = static_cast<double>(xs.size());
  double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  MeshFit fit;
  fit.model = model;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double e = ys[i] - fit.intercept - fit.exponent * xs[i];
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

RepresentationCounts r_alpha(const FreqSet& lambda, std::size_t k, unsigned alpha, std::size_t n) {
  if (alpha < 2) throw PreconditionError("r_alpha needs alpha >= 2");
  if (k > lambda.size()) throw PreconditionError("k exceeds the set size");
  if (k == 0 || n == 0) throw PreconditionError("r_alpha needs k, n >= 1");
  if (lambda[0] < 0) throw DomainError("r_alpha needs nonnegative frequencies");
  auto top = static_cast<std::size_t>(lambda[k - 1]);
  if (top > kConvolutionCap / alpha) throw ResourceError("convolution length exceeds 2^26");
  std::size_t len = alpha * top + 1;

  // Exact integer powers of the indicator's coefficient sequence.
  std::vector<std::int64_t> acc{1}, next;
  for (unsigned a = 0; a < alpha; ++a) {
    next.assign(acc.size() + top, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) next[i + static_cast<std::size_t>(lambda[j])] += acc[i];
    }
    acc.swap(next);
  }
  acc.resize(len, 0);

  RepresentationCounts rc;
  rc.alpha = alpha;
  rc.counts.assign(n + 1, 0);
  for (std::size_t j = 0; j <= n && j < acc.size(); ++j) rc.counts[j] = acc[j];
  double ss = 0.0;
  for (std::size_t j = 1; j <= n; ++j) ss += static_cast<double>(rc.counts[j]) * static_cast<double>(rc.counts[j]);
  rc.mean_square = ss / static_cast<double>(n);
  return rc;
}

}  // namespace thinset
