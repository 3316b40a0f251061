#pragma once

// Exhaustive (RSK-free) computation of Greene's invariants: the largest
// total size of d disjoint weakly increasing subsequences of a word.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "sepshape/core.hpp"

namespace sepshape {

/// Pairwise disjoint, weakly increasing subsequences of one host word.
/// Members may be empty.
class DisjointFamily {
 public:
  /// Family of zero members over `host`.
  explicit DisjointFamily(std::shared_ptr<const Word> host);
  /// Throws InvalidInput if a member has another host, is not weakly
  /// increasing, or overlaps another member.
  DisjointFamily(std::shared_ptr<const Word> host, std::vector<IndexedSubsequence> members);

  const Word& host() const { return *host_; }
  const std::shared_ptr<const Word>& host_ptr() const { return host_; }
  const std::vector<IndexedSubsequence>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const IndexedSubsequence& operator[](std::size_t i) const { return members_[i]; }
  std::size_t total_size() const;
  std::vector<std::size_t> lengths() const;
  /// Host positions covered by no member.
  IndexedSubsequence unused() const;

 private:
  std::shared_ptr<const Word> host_;
  std::vector<IndexedSubsequence> members_;
};

std::size_t greene_sum(const Word& w, std::size_t d);

/// A family of exactly d members (some possibly empty) attaining
/// greene_sum(w, d). Members are listed in order of their first position,
/// empty members last. The first optimum met by the search is returned, so
/// the result is deterministic.
DisjointFamily max_family(std::shared_ptr<const Word> w, std::size_t d);
DisjointFamily max_family(const Word& w, std::size_t d);

/// greene_sum(w, d) equals the sum of the first d parts of shape_of(w) for
/// every 0 <= d <= d_max.
bool greene_consistency(const Word& w, std::size_t d_max);

/// Exhaustive search for disjoint weakly increasing members with exactly the
/// given lengths.
std::optional<DisjointFamily> find_family_with_lengths(std::shared_ptr<const Word> w,
                                                       const std::vector<std::size_t>& lengths);

}  // namespace sepshape
