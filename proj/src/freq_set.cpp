#include "thinset/freq_set.hpp"

#include <algorithm>
#include <iterator>

namespace thinset {

FreqSet::FreqSet(std::initializer_list<Frequency> elems)
    : FreqSet(std::vector<Frequency>(elems)) {}

FreqSet::FreqSet(std::vector<Frequency> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool FreqSet::contains(Frequency g) const {
  return std::binary_search(elems_.begin(), elems_.end(), g);
}

FreqSet FreqSet::minus(const FreqSet& other) const {
  std::vector<Frequency> out;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                      std::back_inserter(out));
  return FreqSet(std::move(out));
}

FreqSet FreqSet::united(const FreqSet& other) const {
  std::vector<Frequency> out;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out));
  return FreqSet(std::move(out));
}

bool FreqSet::disjoint_from(const FreqSet& other) const {
  auto a = elems_.begin();
  auto b = other.elems_.begin();
  while (a != elems_.end() && b != other.elems_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

bool FreqSet::subset_of(const FreqSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

FreqSet FreqSet::dilated(Frequency m) const {
  std::vector<Frequency> out;
  out.reserve(elems_.size());
  for (Frequency g : elems_) out.push_back(g * m);
  return FreqSet(std::move(out));
}

}  // namespace thinset
