#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "rootclosed/rootset.hpp"
#include "rootclosed/weyl.hpp"

namespace rootclosed {

/// Class list bucketed by invariant key. Conjugacy tests run only between
/// sets with equal keys; each class keeps the lexicographically least
/// member seen so far as its representative.
class ConjugacyBuckets {
 public:
  struct Insert {
    std::size_t index;
    bool is_new;
  };

  /// `conjugate(a, b)` decides conjugacy of two sets with equal keys.
  template <class Conjugate>
  Insert insert(const InvariantKey& key, const RootSet& s, Conjugate&& conjugate) {
    auto& bucket = buckets_[key];
    for (std::size_t idx : bucket) {
      if (reps_[idx] == s || conjugate(s, reps_[idx])) {
        if (lex_less(s, reps_[idx])) reps_[idx] = s;
        ++tests_;
        return {idx, false};
      }
      ++tests_;
    }
    bucket.push_back(reps_.size());
    reps_.push_back(s);
    keys_.push_back(key);
    return {reps_.size() - 1, true};
  }

  const std::vector<RootSet>& reps() const { return reps_; }
  const std::vector<InvariantKey>& keys() const { return keys_; }
  std::size_t size() const { return reps_.size(); }
  /// Number of conjugacy tests attempted.
  std::size_t tests() const { return tests_; }

 private:
  std::map<InvariantKey, std::vector<std::size_t>> buckets_;
  std::vector<RootSet> reps_;
  std::vector<InvariantKey> keys_;
  std::size_t tests_ = 0;
};

}  // namespace rootclosed
