#include "sepshape/supersequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "sepshape/patterns.hpp"
#include "sepshape/rsk.hpp"
#include "sepshape/text.hpp"

namespace sepshape {

PermutationSet::PermutationSet(std::vector<Permutation> members) : members_(std::move(members)) {
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (members_[i].size() != members_[0].size()) {
      throw InvalidInput("permutation set members must share one length");
    }
    if (members_[i].base() != members_[0].base()) {
      throw InvalidInput("permutation set members must use the same base");
    }
  }
  std::set<Word> seen;
  for (const auto& m : members_) {
    if (!seen.insert(m.word()).second) {
      throw InvalidInput("duplicate permutation " + format_permutation(m));
    }
  }
}

bool is_supersequence(const Word& w, const Permutation& sigma) {
  std::size_t matched = 0;
  for (Letter x : w) {
    if (matched < sigma.size() && x == sigma.display_value(sigma[matched])) ++matched;
  }
  return matched == sigma.size();
}

ScsResult scs_exact(const PermutationSet& b, std::uint64_t budget) {
  ScsResult result;
  if (b.empty()) {
    result.lower_bound = 0;
    result.bound_tight = true;
    return result;
  }
  const std::size_t k = b.size();
  const std::size_t n = b.degree();
  const std::uint64_t radix = n + 1;

  std::vector<std::uint64_t> stride(k);
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < k; ++i) {
    stride[i] = states;
    if (states > budget / radix) {
      throw BudgetExceeded("state space (" + std::to_string(radix) + ")^" + std::to_string(k) +
                           " exceeds the budget of " + std::to_string(budget) + " states");
    }
    states *= radix;
  }

  const auto& members = b.members();
  std::vector<std::size_t> prefix(k);
  auto decode = [&](std::uint64_t code) {
    for (std::size_t i = 0; i < k; ++i) {
      prefix[i] = static_cast<std::size_t>(code % radix);
      code /= radix;
    }
  };
  // Successor of `code` on appending letter c (normalized).
  auto advance = [&](std::uint64_t code, Letter c) {
    for (std::size_t i = 0; i < k; ++i) {
      if (prefix[i] < n && members[i][prefix[i]] == c) code += stride[i];
    }
    return code;
  };

  // Remaining distance to the all-matched state. Appending a useful letter
  // always increases the code, so a descending sweep sees successors first.
  constexpr std::uint16_t kUnknown = std::numeric_limits<std::uint16_t>::max();
  std::vector<std::uint16_t> remaining(states, kUnknown);
  remaining[states - 1] = 0;
  std::vector<Letter> letters;
  for (std::uint64_t code = states - 1; code-- > 0;) {
    decode(code);
    letters.clear();
    for (std::size_t i = 0; i < k; ++i) {
      if (prefix[i] < n) letters.push_back(members[i][prefix[i]]);
    }
    std::uint16_t best = kUnknown;
    for (Letter c : letters) best = std::min(best, remaining[advance(code, c)]);
    remaining[code] = static_cast<std::uint16_t>(best + 1);
  }

  const Permutation& display = members.front();
  std::vector<Letter> witness;
  std::uint64_t code = 0;
  while (remaining[code] > 0) {
    decode(code);
    letters.clear();
    for (std::size_t i = 0; i < k; ++i) {
      if (prefix[i] < n) letters.push_back(members[i][prefix[i]]);
    }
    std::sort(letters.begin(), letters.end());
    for (Letter c : letters) {
      const std::uint64_t next = advance(code, c);
      if (remaining[next] + 1 == remaining[code]) {
        witness.push_back(display.display_value(c));
        code = next;
        break;
      }
    }
  }

  result.length = witness.size();
  result.witness = Word(std::move(witness));
  const bool all_separable = std::all_of(members.begin(), members.end(),
                                         [](const Permutation& p) { return is_separable(p); });
  if (all_separable) {
    result.lower_bound = shape_union_bound(b);
    result.bound_tight = *result.lower_bound == result.length;
  }
  return result;
}

std::size_t shape_union_bound(const PermutationSet& b) {
  Partition united;
  for (const auto& member : b.members()) {
    if (!is_separable(member)) {
      throw NotSeparable("member " + format_permutation(member) +
                         " is not separable; the shape bound does not apply");
    }
    united = partition_union(united, shape_of(member.word()));
  }
  return united.size();
}

Partition mu_diagram(std::size_t n) {
  std::vector<std::size_t> parts(n);
  for (std::size_t i = 1; i <= n; ++i) parts[i - 1] = n / i;
  return Partition(std::move(parts));
}

std::size_t mu_size(std::size_t n) {
  std::vector<std::size_t> divisors(n + 1, 0);
  for (std::size_t d = 1; d <= n; ++d) {
    for (std::size_t multiple = d; multiple <= n; multiple += d) ++divisors[multiple];
  }
  std::size_t total = 0;
  for (std::size_t i = 1; i <= n; ++i) total += divisors[i];
  return total;
}

namespace {

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

std::size_t mu_corners(std::size_t n) {
  return static_cast<std::size_t>(isqrt(4 * static_cast<std::uint64_t>(n) + 1) - 1);
}

std::vector<std::pair<std::size_t, std::size_t>> corners(const Partition& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (p.part(i + 1) < p.part(i)) out.emplace_back(i + 1, p.part(i));
  }
  return out;
}

Permutation separable_witness_for_shape(const Partition& lambda) {
  return Permutation(reading_word(superstandard(lambda)).letters());
}

PermutationSet mu_family(std::size_t n) {
  std::vector<Permutation> members;
  for (const auto& [rows, columns] : corners(mu_diagram(n))) {
    std::vector<std::size_t> parts(rows, columns);
    parts.resize(n - rows * columns + rows, 1);
    members.push_back(separable_witness_for_shape(Partition(std::move(parts))));
  }
  return PermutationSet(std::move(members));
}

}  // namespace sepshape
