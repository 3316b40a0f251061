#pragma once

// Constructive exchange of increasing subsequences in separable
// permutations, and what it yields: disjoint extensions of a family, exact
// Greene witnesses, and the shape-containment check for pattern occurrences.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "sepshape/core.hpp"
#include "sepshape/greene.hpp"

namespace sepshape {

/// A permutation known to avoid 2413 and 3142. Subsequences passed to the
/// exchange operations must be taken over host() (or an equal word).
class SeparablePermutation {
 public:
  /// Throws NotSeparable naming an occurrence of 2413 or 3142.
  explicit SeparablePermutation(Permutation pi);

  const Permutation& permutation() const { return pi_; }
  /// The normalized one-line notation, shared by every subsequence built here.
  const std::shared_ptr<const Word>& host() const { return host_; }

 private:
  Permutation pi_;
  std::shared_ptr<const Word> host_;
};

struct ExchangeResult {
  IndexedSubsequence alpha;
  IndexedSubsequence beta;
};

/// Given increasing u, w, w2 with w and w2 disjoint, splits z = w ∪ w2 into
/// increasing alpha and beta with alpha ∩ u = ∅ and u ∩ z ⊆ beta.
///
/// beta collects, for each stretch of z that starts at an element u_j of u
/// (and for the stretch before the first one), the left-to-right maxima among
/// the stretch's letters lying in [u_j, u_{j+1}); the bounds before the first
/// and after the last element of u are open. alpha is the rest of z.
///
/// Throws PreconditionError naming the violated precondition.
ExchangeResult lemma_exchange(const SeparablePermutation& sigma, const IndexedSubsequence& u,
                              const IndexedSubsequence& w, const IndexedSubsequence& w2);
ExchangeResult lemma_exchange(const Permutation& sigma, const IndexedSubsequence& u,
                              const IndexedSubsequence& w, const IndexedSubsequence& w2);

struct ExchangeStep {
  std::size_t stage;  // 1-based index m of the fixed member being cleared
  IndexedSubsequence u;
  IndexedSubsequence w;
  IndexedSubsequence w2;
  ExchangeResult result;
};

struct Extension {
  /// Increasing, disjoint from every fixed member, at least as long as the
  /// (k+1)-th part of the shape.
  IndexedSubsequence member;
  /// The k+1 member family of maximum total size the member was taken from.
  DisjointFamily final_family;
  std::vector<ExchangeStep> trace;
};

/// Starting from a family V of k+1 disjoint increasing subsequences of
/// maximum total size (`start`, or max_family otherwise), clears the fixed
/// members s^1..s^k one at a time. At stage m the carrier v^m is exchanged
/// in turn with each later member meeting s^m, taken in order of the first
/// position they share with s^m; the carrier keeps beta and the exchanged
/// slots receive the alphas in the same order. The last member of the final
/// family is returned.
Extension extend_disjoint_traced(const SeparablePermutation& sigma, const DisjointFamily& fixed,
                                 const std::optional<DisjointFamily>& start = std::nullopt);

IndexedSubsequence extend_disjoint(const SeparablePermutation& sigma, const DisjointFamily& fixed);
IndexedSubsequence extend_disjoint(const Permutation& sigma, const DisjointFamily& fixed);

/// d disjoint increasing subsequences whose lengths are exactly the first d
/// shape parts (zero past the last part). Throws NotSeparable otherwise:
/// outside the separable class such a family may not exist (236145 has
/// shape (4,2) but no disjoint increasing pair of lengths 4 and 2).
DisjointFamily greene_witness(const Permutation& sigma, std::size_t d);

struct ContainmentVerdict {
  bool separable = false;
  /// Positions of an occurrence of sigma in the word, if any.
  std::optional<std::vector<std::size_t>> occurrence;
  Partition word_shape;
  Partition pattern_shape;
  bool shape_contained = false;

  bool hypothesis_holds() const { return separable && occurrence.has_value(); }
  /// A separable pattern occurs but its shape does not fit in the word's.
  bool violation() const { return hypothesis_holds() && !shape_contained; }
};

ContainmentVerdict verify_shape_containment(const Word& w, const Permutation& sigma);

}  // namespace sepshape
