#include "thinset/quasi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

#include <boost/dynamic_bitset.hpp>

#include "thinset/errors.hpp"
#include "thinset/exponents.hpp"

namespace thinset {

namespace {

constexpr std::int64_t kSumGuard = std::int64_t{1} << 62;
constexpr std::size_t kMitmCap = 30;
constexpr std::int64_t kDenseCheckRange = std::int64_t{1} << 22;
constexpr std::int64_t kDenseSearchRange = std::int64_t{1} << 24;
constexpr std::size_t kSparseCap = std::size_t{1} << 23;

std::int64_t abs_sum(std::span<const Frequency> xs) {
  std::int64_t total = 0;
  for (Frequency x : xs) {
    std::int64_t a = x < 0 ? -x : x;
    if (a >= kSumGuard || total >= kSumGuard - a)
      throw ResourceError("sum of |gamma| must stay below 2^62");
    total += a;
  }
  return total;
}

std::string describe(const FreqSet& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
    if (i == 15 && a.size() > 17) {
      out += ",...";
      break;
    }
  }
  return out + "}";
}

// Signed subset sums D = {sum theta_i x_i}. Kept as a sorted vector while
// sparse and as a bitset over [-range, range] once dense.
class SignedSums {
 public:
  explicit SignedSums(std::int64_t range) : range_(range), sparse_{0} {}

  bool contains(std::int64_t v) const {
    if (v < -range_ || v > range_) return false;
    if (dense_) return bits_.test(static_cast<std::size_t>(v + range_));
    return std::binary_search(sparse_.begin(), sparse_.end(), v);
  }

  SignedSums extended(std::int64_t x) const {
    x = std::abs(x);
    SignedSums out(range_);
    if (dense_) {
      out.dense_ = true;
      out.bits_ = bits_ | (bits_ << x) | (bits_ >> x);
      return out;
    }
    std::vector<std::int64_t> plus(sparse_.size()), minus(sparse_.size()), merged;
    std::transform(sparse_.begin(), sparse_.end(), plus.begin(), [x](auto v) { return v + x; });
    std::transform(sparse_.begin(), sparse_.end(), minus.begin(), [x](auto v) { return v - x; });
    merged.reserve(3 * sparse_.size());
    std::merge(minus.begin(), minus.end(), sparse_.begin(), sparse_.end(),
               std::back_inserter(merged));
    out.sparse_.clear();
    out.sparse_.reserve(merged.size() + plus.size());
    std::merge(merged.begin(), merged.end(), plus.begin(), plus.end(),
               std::back_inserter(out.sparse_));
    out.sparse_.erase(std::unique(out.sparse_.begin(), out.sparse_.end()), out.sparse_.end());
    out.maybe_densify();
    if (!out.dense_ && out.sparse_.size() > kSparseCap)
      throw ResourceError("signed-sum set exceeds " + std::to_string(kSparseCap) + " entries");
    return out;
  }

 private:
  void maybe_densify() {
    std::int64_t width = 2 * range_ + 1;
    if (width > kDenseSearchRange) return;
    if (static_cast<std::int64_t>(sparse_.size()) * 64 < width) return;
    bits_.resize(static_cast<std::size_t>(width));
    for (auto v : sparse_) bits_.set(static_cast<std::size_t>(v + range_));
    sparse_.clear();
    sparse_.shrink_to_fit();
    dense_ = true;
  }

  std::int64_t range_;
  bool dense_ = false;
  std::vector<std::int64_t> sparse_;
  boost::dynamic_bitset<std::uint64_t> bits_;
};

// Signed sums of xs in base-3 index order: digit j of the index is 0, 1, 2
// for theta_j = 0, +1, -1.
std::vector<std::int64_t> half_sums(std::span<const Frequency> xs) {
  std::size_t total = 1;
  for (std::size_t j = 0; j < xs.size(); ++j) total *= 3;
  std::vector<std::int64_t> s;
  s.reserve(total);
  s.push_back(0);
  for (Frequency x : xs) {
    std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) s.push_back(s[i] + x);
    for (std::size_t i = 0; i < n; ++i) s.push_back(s[i] - x);
  }
  return s;
}

void decode_into(std::uint64_t idx, std::size_t count, std::size_t offset, SignVector& out) {
  for (std::size_t j = 0; j < count; ++j) {
    int d = static_cast<int>(idx % 3);
    idx /= 3;
    out.signs[offset + j] = d == 0 ? 0 : (d == 1 ? 1 : -1);
  }
}

QiCheck check_mitm(const FreqSet& b) {
  auto xs = b.elements();
  std::size_t h = xs.size() / 2;
  auto left = half_sums(xs.subspan(0, h));
  std::vector<std::pair<std::int64_t, std::uint32_t>> table(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) table[i] = {left[i], static_cast<std::uint32_t>(i)};
  left.clear();
  left.shrink_to_fit();
  std::sort(table.begin(), table.end());

  auto right = half_sums(xs.subspan(h));
  for (std::size_t r = 0; r < right.size(); ++r) {
    std::int64_t want = -right[r];
    auto it = std::lower_bound(table.begin(), table.end(), std::make_pair(want, std::uint32_t{0}));
    if (it == table.end() || it->first != want) continue;
    if (r == 0 && it->second == 0) {
      ++it;
      if (it == table.end() || it->first != want) continue;
    }
    SignVector w;
    w.signs.assign(xs.size(), 0);
    decode_into(it->second, h, 0, w);
    decode_into(r, xs.size() - h, h, w);
    return {false, w};
  }
  return {true, std::nullopt};
}

// Forward pass over prefixes with one bitset layer per element, so the first
// collision can be traced back to a sign vector.
QiCheck check_dense(const FreqSet& b, std::int64_t range) {
  auto xs = b.elements();
  std::size_t width = static_cast<std::size_t>(2 * range + 1);
  std::vector<boost::dynamic_bitset<std::uint64_t>> layers;
  boost::dynamic_bitset<std::uint64_t> d(width);
  d.set(static_cast<std::size_t>(range));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::int64_t x = xs[i];
    layers.push_back(d);
    if (d.test(static_cast<std::size_t>(x + range))) {
      SignVector w;
      w.signs.assign(xs.size(), 0);
      w.signs[i] = -1;
      std::int64_t v = x;
      for (std::size_t j = i; j-- > 0;) {
        const auto& prev = layers[j];
        auto has = [&](std::int64_t u) {
          return u >= -range && u <= range && prev.test(static_cast<std::size_t>(u + range));
        };
        if (has(v)) continue;
        if (has(v - xs[j])) {
          w.signs[j] = 1;
          v -= xs[j];
        } else {
          w.signs[j] = -1;
          v += xs[j];
        }
      }
      if (v != 0) throw InternalError("signed-sum trace did not close");
      return {false, w};
    }
    std::int64_t a = std::abs(x);
    d = d | (d << a) | (d >> a);
  }
  return {true, std::nullopt};
}

std::vector<Frequency> search_order(const FreqSet& a) {
  std::vector<Frequency> order(a.begin(), a.end());
  std::stable_sort(order.begin(), order.end(), [](Frequency x, Frequency y) {
    auto ax = std::abs(x), ay = std::abs(y);
    return ax != ay ? ax > ay : x > y;
  });
  return order;
}

struct Search {
  const std::vector<Frequency>& order;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::vector<Frequency> chosen;
  std::int64_t chosen_mass = 0;
  std::vector<Frequency> best;

  void run(std::size_t i, const SignedSums& d) {
    if (aborted) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (chosen.size() > best.size()) best = chosen;
    if (i == order.size()) return;

    // Count bound and pigeonhole bound: a set with distinct subset sums has
    // 2^|S| <= sum |gamma| + 1.
    std::size_t c = chosen.size();
    std::size_t addable = 0;
    std::size_t pigeon = c;
    std::int64_t mass = chosen_mass;
    for (std::size_t j = i; j < order.size(); ++j) {
      if (d.contains(order[j])) continue;
      ++addable;
      mass += std::abs(order[j]);
      std::size_t t = c + addable;
      if (t < 62 && (std::int64_t{1} << t) <= mass + 1) pigeon = t;
    }
    if (c + addable <= best.size() || pigeon <= best.size()) return;

    Frequency x = order[i];
    if (!d.contains(x)) {
      chosen.push_back(x);
      chosen_mass += std::abs(x);
      run(i + 1, d.extended(x));
      chosen.pop_back();
      chosen_mass -= std::abs(x);
    }
    run(i + 1, d);
  }
};

}  // namespace

bool SignVector::is_zero() const {
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s == 0; });
}

std::int64_t SignVector::signed_sum(const FreqSet& b) const {
  if (signs.size() != b.size()) throw PreconditionError("sign vector length mismatch");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) total += signs[i] * b[i];
  return total;
}

QiCheck is_quasi_independent(const FreqSet& b) {
  if (b.size() > kQiCheckCap)
    throw ResourceError("quasi-independence check is capped at " + std::to_string(kQiCheckCap) +
                        " elements");
  std::int64_t range = abs_sum(b.elements());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) {
      SignVector w;
      w.signs.assign(b.size(), 0);
      w.signs[i] = 1;
      return {false, w};
    }
  }
  if (b.size() <= 1) return {true, std::nullopt};
  if (2 * range + 1 <= kDenseCheckRange) return check_dense(b, range);
  if (b.size() <= kMitmCap) return check_mitm(b);
  // 2^k distinct subset sums cannot fit in a range of sum|gamma| + 1 values.
  if (b.size() < 62 && (std::int64_t{1} << b.size()) > range + 1) return {false, std::nullopt};
  throw ResourceError("quasi-independence of " + std::to_string(b.size()) +
                      " elements with wide signed-sum range is beyond desk scale");
}

QiSearchResult greedy_quasi_independent(const FreqSet& a) {
  std::int64_t range = abs_sum(a.elements());
  auto order = search_order(a);
  SignedSums d(range);
  std::vector<Frequency> chosen;
  for (Frequency x : order) {
    if (d.contains(x)) continue;
    chosen.push_back(x);
    d = d.extended(x);
  }
  QiSearchResult out;
  out.q_value = chosen.size();
  out.witness = FreqSet(std::move(chosen));
  out.exact = a.size() == out.q_value;
  out.nodes_explored = a.size();
  return out;
}

QiSearchResult max_quasi_independent(const FreqSet& a, std::uint64_t budget) {
  std::int64_t range = abs_sum(a.elements());
  if (a.size() <= kMitmCap) {
    bool whole = false;
    try {
      whole = is_quasi_independent(a).independent;
    } catch (const ResourceError&) {
    }
    if (whole) return {a.size(), a, true, 1};
  }
  auto greedy = greedy_quasi_independent(a);
  auto order = search_order(a);
  Search s{order, budget, 0, false, {}, 0, {}};
  s.best = greedy.witness.vec();
  s.run(0, SignedSums(range));
  QiSearchResult out;
  out.q_value = s.best.size();
  out.witness = FreqSet(s.best);
  out.exact = !s.aborted;
  out.nodes_explored = std::min(s.nodes, budget);
  return out;
}

PartitionResult partition_lemma(const FreqSet& a, double c, double epsilon, std::uint64_t budget) {
  if (a.empty() || a == FreqSet{0}) throw PreconditionError("partition_lemma needs A != {0}");
  if (!(c > 0.0) || !(epsilon > 0.0 && epsilon <= 1.0))
    throw PreconditionError("partition_lemma needs c > 0 and 0 < eps <= 1");
  double n = static_cast<double>(a.size());
  PartitionResult res;
  res.size_high = c * std::pow(n, epsilon);
  res.size_low = 0.5 * res.size_high;
  res.count_low = std::pow(n, 1.0 - epsilon) / (2.0 * c);
  res.count_high = 2.0 * std::pow(n, 1.0 - epsilon) / c;
  if (res.size_high < 2.0)
    throw PreconditionError("c |A|^eps = " + std::to_string(res.size_high) + " is below 2");
  auto cap = static_cast<std::size_t>(std::floor(res.size_high * (1.0 + 1e-12)));

  FreqSet rem = a;
  while (2 * res.covered < a.size()) {
    QiSearchResult r;
    bool exact = false;
    if (rem.size() <= kExactSearchCap) {
      r = max_quasi_independent(rem, budget);
      exact = r.exact;
    } else {
      r = greedy_quasi_independent(rem);
      if (static_cast<double>(r.q_value) < res.size_low) r = max_quasi_independent(rem, budget);
      exact = false;
    }
    if (static_cast<double>(r.q_value) < res.size_low * (1.0 - 1e-12))
      throw HypothesisViolation("extraction of size " + std::to_string(r.q_value) +
                                " below window from remainder " + describe(rem));
    std::vector<Frequency> piece = r.witness.vec();
    if (piece.size() > cap) piece.resize(cap);
    FreqSet b(std::move(piece));
    rem = rem.minus(b);
    res.covered += b.size();
    res.pieces.push_back(std::move(b));
    res.exact_extraction.push_back(exact);
  }

  double count = static_cast<double>(res.pieces.size());
  if (count < res.count_low * (1.0 - 1e-12) || count > res.count_high * (1.0 + 1e-12))
    throw InternalError("partition piece count outside its window");
  return res;
}

BourgainResult bourgain_extract(const std::vector<FreqSet>& bs, double ratio_check) {
  std::size_t total = 0;
  for (const auto& b : bs) total += b.size();
  if (total > kBourgainCap)
    throw ResourceError("bourgain_extract is exhaustive and capped at " +
                        std::to_string(kBourgainCap) + " elements");
  for (std::size_t l = 0; l < bs.size(); ++l) {
    if (bs[l].empty()) throw PreconditionError("empty block");
    if (!is_quasi_independent(bs[l]).independent)
      throw PreconditionError("block " + std::to_string(l) + " is not quasi-independent");
    for (std::size_t m = l + 1; m < bs.size(); ++m)
      if (!bs[l].disjoint_from(bs[m])) throw PreconditionError("blocks are not disjoint");
    if (l + 1 < bs.size() &&
        static_cast<double>(bs[l + 1].size()) < ratio_check * static_cast<double>(bs[l].size()))
      throw PreconditionError("block sizes do not grow by the ratio");
  }

  std::vector<Frequency> elems;
  std::vector<std::size_t> group;
  std::vector<std::size_t> need(bs.size()), left(bs.size());
  for (std::size_t l = 0; l < bs.size(); ++l) {
    need[l] = (bs[l].size() + 9) / 10;
    left[l] = bs[l].size();
    for (Frequency x : bs[l]) {
      elems.push_back(x);
      group.push_back(l);
    }
  }
  std::int64_t range = abs_sum(elems);

  BourgainResult out;
  std::vector<std::size_t> have(bs.size(), 0);
  std::vector<std::size_t> pick, best;
  bool found = false;
  auto rec = [&](auto&& self, std::size_t i, const SignedSums& d) -> void {
    ++out.nodes_explored;
    for (std::size_t l = 0; l < bs.size(); ++l)
      if (have[l] + left[l] < need[l]) return;
    if (found && pick.size() + (elems.size() - i) <= best.size()) return;
    if (i == elems.size()) {
      found = true;
      best = pick;
      return;
    }
    std::size_t l = group[i];
    Frequency x = elems[i];
    --left[l];
    if (!d.contains(x)) {
      pick.push_back(i);
      ++have[l];
      self(self, i + 1, d.extended(x));
      --have[l];
      pick.pop_back();
    }
    self(self, i + 1, d);
    ++left[l];
  };
  rec(rec, 0, SignedSums(range));

  if (!found) return out;
  std::vector<std::vector<Frequency>> parts(bs.size());
  for (std::size_t i : best) parts[group[i]].push_back(elems[i]);
  out.found = true;
  for (auto& p : parts) out.subsets.emplace_back(std::move(p));
  return out;
}

QLowerBounds q_lower_bounds(const FreqSet& a, double p, double r, const NormEstimate& bracket,
                            double psi_val) {
  if (psi_val == 0.0 || !std::isfinite(psi_val)) throw DomainError("psi value must be nonzero");
  if (a.empty()) throw PreconditionError("q_lower_bounds needs a nonempty set");
  double n = static_cast<double>(a.size());
  QLowerBounds out;
  out.via_psi = std::pow(n / psi_val, r);
  out.via_stable = std::pow(bracket.value / std::pow(n, 1.0 / p), conjugate(p));
  return out;
}

}  // namespace thinset
