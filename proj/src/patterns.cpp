#include "sepshape/patterns.hpp"

#include <algorithm>
#include <array>

namespace sepshape {

namespace {

int compare(Letter a, Letter b) { return (a > b) - (a < b); }

bool extend(const Word& w, const Permutation& pattern, std::vector<std::size_t>& chosen,
            std::size_t from) {
  const std::size_t j = chosen.size();
  if (j == pattern.size()) return true;
  const std::size_t remaining = pattern.size() - j;
  for (std::size_t i = from; i + remaining <= w.size(); ++i) {
    bool ok = true;
    for (std::size_t t = 0; t < j && ok; ++t) {
      ok = compare(w[chosen[t]], w[i]) == compare(pattern[t], pattern[j]);
    }
    if (!ok) continue;
    chosen.push_back(i);
    if (extend(w, pattern, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> contains_pattern(const Word& w,
                                                         const Permutation& pattern) {
  if (pattern.size() > w.size()) return std::nullopt;
  std::vector<std::size_t> chosen;
  chosen.reserve(pattern.size());
  if (extend(w, pattern, chosen, 0)) return chosen;
  return std::nullopt;
}

std::optional<PatternOccurrence> separability_obstruction(const Permutation& pi) {
  static const std::array<Permutation, 2> kObstructions{Permutation{2, 4, 1, 3},
                                                        Permutation{3, 1, 4, 2}};
  for (const auto& pattern : kObstructions) {
    if (auto positions = contains_pattern(pi.word(), pattern)) {
      return PatternOccurrence{pattern, std::move(*positions)};
    }
  }
  return std::nullopt;
}

bool is_separable(const Permutation& pi) { return !separability_obstruction(pi).has_value(); }

// ---------------------------------------------------------------------------

InversionPoset::InversionPoset(std::vector<std::pair<std::size_t, std::size_t>> points)
    : points_(std::move(points)) {}

bool InversionPoset::precedes(std::size_t a, std::size_t b) const {
  return points_[a].first < points_[b].first && points_[a].second < points_[b].second;
}

std::vector<std::pair<std::size_t, std::size_t>> InversionPoset::cover_relations() const {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (!precedes(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < size() && covered; ++c) {
        covered = !(precedes(a, c) && precedes(c, b));
      }
      if (covered) covers.emplace_back(a, b);
    }
  }
  return covers;
}

InversionPoset inversion_poset(const Permutation& pi) {
  std::vector<std::pair<std::size_t, std::size_t>> points;
  points.reserve(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) points.emplace_back(i + 1, pi[i]);
  return InversionPoset(std::move(points));
}

bool has_n_subposet(const InversionPoset& poset) {
  const std::size_t n = poset.size();
  // Relations are tested under every labelling of each 4-subset.
  auto is_n = [&](std::size_t b, std::size_t x, std::size_t a, std::size_t y) {
    return poset.precedes(b, x) && poset.precedes(b, a) && poset.precedes(y, a) &&
           !poset.comparable(x, a) && !poset.comparable(x, y) && !poset.comparable(y, b);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          std::array<std::size_t, 4> q{i, j, k, l};
          do {
            if (is_n(q[0], q[1], q[2], q[3])) return true;
          } while (std::next_permutation(q.begin(), q.end()));
        }
      }
    }
  }
  return false;
}

}  // namespace sepshape
