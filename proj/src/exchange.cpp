#include "sepshape/exchange.hpp"

#include <algorithm>
#include <limits>

#include "sepshape/patterns.hpp"
#include "sepshape/rsk.hpp"
#include "sepshape/text.hpp"

namespace sepshape {

SeparablePermutation::SeparablePermutation(Permutation pi) : pi_(std::move(pi)) {
  if (auto obstruction = separability_obstruction(pi_)) {
    throw NotSeparable("permutation " + format_permutation(pi_) + " is not separable: " +
                       format_permutation(obstruction->pattern) + " occurs at positions " +
                       format_positions(obstruction->positions));
  }
  host_ = std::make_shared<const Word>(pi_.word());
}

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw PreconditionError(message);
}

void require_on_host(const SeparablePermutation& sigma, const IndexedSubsequence& s,
                     const char* message) {
  require(s.host_ptr() == sigma.host() || s.host() == *sigma.host(), message);
}

}  // namespace

ExchangeResult lemma_exchange(const SeparablePermutation& sigma, const IndexedSubsequence& u,
                              const IndexedSubsequence& w, const IndexedSubsequence& w2) {
  require_on_host(sigma, u, "u is not a subsequence of sigma");
  require_on_host(sigma, w, "w is not a subsequence of sigma");
  require_on_host(sigma, w2, "w2 is not a subsequence of sigma");
  require(is_increasing(u, Monotonicity::strict), "u is not increasing");
  require(is_increasing(w, Monotonicity::strict), "w is not increasing");
  require(is_increasing(w2, Monotonicity::strict), "w2 is not increasing");
  require(w.is_disjoint(w2), "w and w2 are not disjoint");

  const Word& host = *sigma.host();
  const IndexedSubsequence z = subsequence_union(w, w2);
  // Only the part of u inside z matters for alpha ∩ u = ∅.
  const IndexedSubsequence anchors = u.intersection(z);
  const auto& anchor_pos = anchors.positions();

  constexpr Letter kNoBound = std::numeric_limits<Letter>::max();
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> beta;
  std::size_t next_anchor = 0;  // anchors seen so far = index of the current stretch
  bool have_lower = false;      // stretch 0 has no lower bound
  Letter lower = 0;
  Letter upper = anchor_pos.empty() ? kNoBound : host[anchor_pos[0]];
  bool have_max = false;
  Letter running_max = 0;

  for (std::size_t p : z.positions()) {
    if (next_anchor < anchor_pos.size() && p == anchor_pos[next_anchor]) {
      ++next_anchor;
      have_lower = true;
      lower = host[p];
      upper = next_anchor < anchor_pos.size() ? host[anchor_pos[next_anchor]] : kNoBound;
      have_max = false;
    }
    const Letter v = host[p];
    const bool in_window = (!have_lower || v >= lower) && (upper == kNoBound || v < upper);
    if (in_window && (!have_max || v > running_max)) {
      beta.push_back(p);
      running_max = v;
      have_max = true;
    } else {
      alpha.push_back(p);
    }
  }

  ExchangeResult result{IndexedSubsequence(sigma.host(), std::move(alpha)),
                        IndexedSubsequence(sigma.host(), std::move(beta))};
  if (!is_increasing(result.alpha, Monotonicity::strict)) {
    throw std::logic_error("exchange left a non-increasing complement");
  }
  return result;
}

ExchangeResult lemma_exchange(const Permutation& sigma, const IndexedSubsequence& u,
                              const IndexedSubsequence& w, const IndexedSubsequence& w2) {
  return lemma_exchange(SeparablePermutation(sigma), u, w, w2);
}

namespace {

// Largest m in [1, k+1] with v^j ∩ s^i = ∅ whenever i < m <= j.
std::size_t cleared_prefix(const std::vector<IndexedSubsequence>& v, const DisjointFamily& fixed) {
  const std::size_t k = fixed.size();
  for (std::size_t m = k + 1; m > 1; --m) {
    bool ok = true;
    for (std::size_t i = 1; i < m && ok; ++i) {
      for (std::size_t j = m; j <= k + 1 && ok; ++j) {
        ok = v[j - 1].is_disjoint(fixed[i - 1]);
      }
    }
    if (ok) return m;
  }
  return 1;
}

}  // namespace

Extension extend_disjoint_traced(const SeparablePermutation& sigma, const DisjointFamily& fixed,
                                 const std::optional<DisjointFamily>& start) {
  const Word& host = *sigma.host();
  if (fixed.host() != host) throw PreconditionError("fixed family is not over sigma");
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (!is_increasing(fixed[i], Monotonicity::strict)) {
      throw PreconditionError("fixed member " + std::to_string(i + 1) + " is not increasing");
    }
  }
  const std::size_t k = fixed.size();

  std::vector<IndexedSubsequence> v;
  if (start) {
    if (start->host() != host) throw PreconditionError("starting family is not over sigma");
    if (start->size() != k + 1) {
      throw PreconditionError("starting family must have k+1 = " + std::to_string(k + 1) +
                              " members");
    }
    if (start->total_size() != greene_sum(host, k + 1)) {
      throw PreconditionError("starting family does not have maximum total size");
    }
    for (const auto& member : start->members()) {
      v.emplace_back(sigma.host(), member.positions());
    }
  } else {
    v = max_family(sigma.host(), k + 1).members();
  }

  std::vector<ExchangeStep> trace;
  std::size_t m = cleared_prefix(v, fixed);
  while (m < k + 1) {
    const IndexedSubsequence u(sigma.host(), fixed[m - 1].positions());

    std::vector<std::pair<std::size_t, std::size_t>> order;  // (first shared position, slot)
    for (std::size_t j = m; j <= k; ++j) {
      const IndexedSubsequence shared = v[j].intersection(u);
      if (!shared.empty()) order.emplace_back(shared.positions().front(), j);
    }
    std::sort(order.begin(), order.end());

    IndexedSubsequence carrier = v[m - 1];
    std::vector<IndexedSubsequence> alphas;
    std::vector<std::size_t> slots;
    for (const auto& [first_shared, slot] : order) {
      ExchangeResult r = lemma_exchange(sigma, u, carrier, v[slot]);
      trace.push_back(ExchangeStep{m, u, carrier, v[slot], r});
      carrier = r.beta;
      alphas.push_back(r.alpha);
      slots.push_back(slot);
    }
    std::sort(slots.begin(), slots.end());
    for (std::size_t i = 0; i < slots.size(); ++i) v[slots[i]] = alphas[i];
    v[m - 1] = carrier;

    const std::size_t next = cleared_prefix(v, fixed);
    if (next <= m) throw std::logic_error("extension stage made no progress");
    m = next;
  }

  IndexedSubsequence member = v.back();
  return Extension{member, DisjointFamily(sigma.host(), std::move(v)), std::move(trace)};
}

IndexedSubsequence extend_disjoint(const SeparablePermutation& sigma, const DisjointFamily& fixed) {
  return extend_disjoint_traced(sigma, fixed).member;
}

IndexedSubsequence extend_disjoint(const Permutation& sigma, const DisjointFamily& fixed) {
  return extend_disjoint(SeparablePermutation(sigma), fixed);
}

DisjointFamily greene_witness(const Permutation& sigma, std::size_t d) {
  std::optional<SeparablePermutation> separable;
  try {
    separable.emplace(sigma);
  } catch (const NotSeparable& e) {
    throw NotSeparable(std::string(e.what()) +
                       "; exact-length witnesses are only guaranteed for separable permutations");
  }
  const Partition shape = shape_of(sigma.word());
  std::vector<IndexedSubsequence> members;
  members.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    const DisjointFamily fixed(separable->host(), members);
    const IndexedSubsequence next = extend_disjoint(*separable, fixed);
    if (next.size() < shape.part(i)) {
      throw std::logic_error("extension shorter than the shape part");
    }
    members.push_back(next.prefix(shape.part(i)));
  }
  return DisjointFamily(separable->host(), std::move(members));
}

ContainmentVerdict verify_shape_containment(const Word& w, const Permutation& sigma) {
  ContainmentVerdict verdict;
  verdict.separable = is_separable(sigma);
  verdict.occurrence = contains_pattern(w, sigma);
  verdict.word_shape = shape_of(w);
  verdict.pattern_shape = shape_of(sigma.word());
  verdict.shape_contained = partition_contains(verdict.word_shape, verdict.pattern_shape);
  return verdict;
}

}  // namespace sepshape
