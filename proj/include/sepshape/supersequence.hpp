#pragma once

// Supersequences of permutation sets: exact shortest common supersequences,
// the shape-union lower bound, and the union diagram mu(n) of all
// partitions of n.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sepshape/core.hpp"

namespace sepshape {

/// Distinct permutations of a common length, given in a common base.
class PermutationSet {
 public:
  PermutationSet() = default;
  /// Throws InvalidInput on mixed lengths, mixed bases or duplicates.
  explicit PermutationSet(std::vector<Permutation> members);

  const std::vector<Permutation>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  /// Common length n (0 for the empty set).
  std::size_t degree() const { return members_.empty() ? 0 : members_.front().size(); }

 private:
  std::vector<Permutation> members_;
};

/// The literal entries of sigma occur in order in w (greedy embedding).
bool is_supersequence(const Word& w, const Permutation& sigma);

struct ScsResult {
  std::size_t length = 0;
  Word witness;
  /// Shape-union bound, present when every member is separable.
  std::optional<std::size_t> lower_bound;
  std::optional<bool> bound_tight;
};

inline constexpr std::uint64_t kDefaultScsBudget = 100'000'000;

/// Exact shortest common supersequence by shortest paths over the lattice of
/// matched-prefix vectors. Among optimal words the lexicographically
/// smallest is returned. Throws BudgetExceeded when (n+1)^|b| exceeds
/// `budget`.
ScsResult scs_exact(const PermutationSet& b, std::uint64_t budget = kDefaultScsBudget);

/// Size of the union of the members' shapes. Throws NotSeparable naming the
/// first non-separable member.
std::size_t shape_union_bound(const PermutationSet& b);

/// Union of the Ferrers diagrams of all partitions of n: row i has length
/// floor(n / i).
Partition mu_diagram(std::size_t n);
/// Sum of the divisor counts tau(1) + ... + tau(n).
std::size_t mu_size(std::size_t n);
/// floor(sqrt(4n + 1)) - 1.
std::size_t mu_corners(std::size_t n);

/// Corner cells (row, column), 1-based, from the top row down.
std::vector<std::pair<std::size_t, std::size_t>> corners(const Partition& p);

/// Reading word of the superstandard tableau of shape lambda; it avoids 213
/// (so it is separable) and has shape lambda.
Permutation separable_witness_for_shape(const Partition& lambda);

/// One separable permutation per corner (r, c) of mu(n), of shape
/// (c^r, 1^(n - rc)). Their shapes cover mu(n).
PermutationSet mu_family(std::size_t n);

}  // namespace sepshape
