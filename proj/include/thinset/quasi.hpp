#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "thinset/freq_set.hpp"
#include "thinset/stable_norm.hpp"

namespace thinset {

/// theta in {-1, 0, 1}^|B|, aligned with the elements of a FreqSet.
struct SignVector {
  std::vector<int> signs;

  bool is_zero() const;
  /// sum_i theta_i gamma_i, computed exactly.
  std::int64_t signed_sum(const FreqSet& b) const;
};

struct QiCheck {
  bool independent = true;
  std::optional<SignVector> witness;  // set whenever a relation was exhibited
};

inline constexpr std::size_t kQiCheckCap = 40;
inline constexpr std::size_t kExactSearchCap = 25;
inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// True iff no nonzero theta has sum_i theta_i gamma_i = 0. Exact by
/// meet-in-the-middle on signed half-sums for |B| <= 30; larger sets (up to
/// kQiCheckCap) are decided only when their signed-sum range is small enough
/// for a dense table, otherwise ResourceError.
QiCheck is_quasi_independent(const FreqSet& b);

struct QiSearchResult {
  std::size_t q_value = 0;
  FreqSet witness;
  bool exact = false;
  std::uint64_t nodes_explored = 0;
};

/// Largest quasi-independent subset by branch and bound. Running out of
/// `budget` nodes returns the best subset found with exact = false.
QiSearchResult max_quasi_independent(const FreqSet& a, std::uint64_t budget = kDefaultSearchBudget);

/// Single greedy pass in decreasing |gamma| order; never exact unless trivially so.
QiSearchResult greedy_quasi_independent(const FreqSet& a);

struct PartitionResult {
  std::vector<FreqSet> pieces;
  std::vector<bool> exact_extraction;  // per piece: produced by an exact search
  double size_low = 0.0;   // (c/2) |A|^eps
  double size_high = 0.0;  // c |A|^eps
  double count_low = 0.0;  // |A|^{1-eps} / (2c)
  double count_high = 0.0; // 2 |A|^{1-eps} / c
  std::size_t covered = 0;
};

/// Disjoint quasi-independent pieces with sizes in [(c/2)|A|^eps, c|A|^eps]
/// whose union covers at least |A|/2. Throws HypothesisViolation if an
/// extraction from the remainder falls short of the lower window.
PartitionResult partition_lemma(const FreqSet& a, double c, double epsilon,
                                std::uint64_t budget = kDefaultSearchBudget);

struct BourgainResult {
  bool found = false;
  std::vector<FreqSet> subsets;  // C_l subset of B_l
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kBourgainCap = 20;

/// Small-scale thinning step: exhaustive search for
/// C_l subset B_l with |C_l| >= |B_l|/10 and quasi-independent union,
/// maximising the total size.
BourgainResult bourgain_extract(const std::vector<FreqSet>& bs, double ratio_check);

struct QLowerBounds {
  double via_psi = 0.0;     // (|A| / psi_r(A))^r
  double via_stable = 0.0;  // ([[A]]_p / |A|^{1/p})^{p'}
};

QLowerBounds q_lower_bounds(const FreqSet& a, double p, double r, const NormEstimate& bracket,
                            double psi_val);

}  // namespace thinset
