#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace thinset {

using Frequency = std::int64_t;

/// Finite set of integer frequencies, stored strictly increasing.
class FreqSet {
 public:
  FreqSet() = default;
  FreqSet(std::initializer_list<Frequency> elems);
  /// Sorts and removes duplicates.
  explicit FreqSet(std::vector<Frequency> elems);

  std::span<const Frequency> elements() const { return elems_; }
  const std::vector<Frequency>& vec() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(Frequency g) const;
  Frequency operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  FreqSet minus(const FreqSet& other) const;
  FreqSet united(const FreqSet& other) const;
  bool disjoint_from(const FreqSet& other) const;
  bool subset_of(const FreqSet& other) const;
  FreqSet dilated(Frequency m) const;

  friend bool operator==(const FreqSet&, const FreqSet&) = default;

 private:
  std::vector<Frequency> elems_;
};

}  // namespace thinset
