#pragma once

// Pattern containment, separability and the inversion poset.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sepshape/core.hpp"

namespace sepshape {

/// Positions i_1 < ... < i_m of `w` that are order-isomorphic to `pattern`,
/// or nullopt. Both < and > must transfer, so equal letters never realize a
/// pattern relation.
std::optional<std::vector<std::size_t>> contains_pattern(const Word& w, const Permutation& pattern);

inline bool avoids(const Word& w, const Permutation& pattern) {
  return !contains_pattern(w, pattern).has_value();
}

struct PatternOccurrence {
  Permutation pattern;
  std::vector<std::size_t> positions;
};

/// An occurrence of 2413 or 3142 (checked in that order), if any.
std::optional<PatternOccurrence> separability_obstruction(const Permutation& pi);

/// Avoids both 2413 and 3142.
bool is_separable(const Permutation& pi);

/// Points (i, pi(i)), 1-based, ordered by (a,b) < (c,d) iff a < c and b < d.
class InversionPoset {
 public:
  explicit InversionPoset(std::vector<std::pair<std::size_t, std::size_t>> points);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& points() const { return points_; }

  /// points[a] strictly below points[b].
  bool precedes(std::size_t a, std::size_t b) const;
  bool comparable(std::size_t a, std::size_t b) const {
    return precedes(a, b) || precedes(b, a);
  }
  /// Hasse diagram edges (lower, upper) as element indices.
  std::vector<std::pair<std::size_t, std::size_t>> cover_relations() const;

 private:
  std::vector<std::pair<std::size_t, std::size_t>> points_;
};

InversionPoset inversion_poset(const Permutation& pi);

/// True iff four elements induce the N poset: b < x, b < a, y < a with
/// every other pair among them incomparable.
bool has_n_subposet(const InversionPoset& poset);

}  // namespace sepshape
