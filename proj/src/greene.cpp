#include "sepshape/greene.hpp"

#include <algorithm>
#include <numeric>

#include "sepshape/rsk.hpp"

namespace sepshape {

DisjointFamily::DisjointFamily(std::shared_ptr<const Word> host) : host_(std::move(host)) {
  if (!host_) throw InvalidInput("family without a host word");
}

DisjointFamily::DisjointFamily(std::shared_ptr<const Word> host,
                               std::vector<IndexedSubsequence> members)
    : host_(std::move(host)), members_(std::move(members)) {
  if (!host_) throw InvalidInput("family without a host word");
  std::vector<bool> used(host_->size(), false);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const auto& m = members_[i];
    if (*m.host_ptr() != *host_) {
      throw InvalidInput("family member " + std::to_string(i + 1) + " has a different host");
    }
    if (!is_increasing(m)) {
      throw InvalidInput("family member " + std::to_string(i + 1) + " is not increasing");
    }
    for (std::size_t p : m.positions()) {
      if (used[p]) {
        throw InvalidInput("family members overlap at position " + std::to_string(p));
      }
      used[p] = true;
    }
  }
}

std::size_t DisjointFamily::total_size() const {
  std::size_t total = 0;
  for (const auto& m : members_) total += m.size();
  return total;
}

std::vector<std::size_t> DisjointFamily::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.size());
  return out;
}

IndexedSubsequence DisjointFamily::unused() const {
  std::vector<bool> used(host_->size(), false);
  for (const auto& m : members_) {
    for (std::size_t p : m.positions()) used[p] = true;
  }
  std::vector<std::size_t> free;
  for (std::size_t p = 0; p < used.size(); ++p) {
    if (!used[p]) free.push_back(p);
  }
  return IndexedSubsequence(host_, std::move(free));
}

namespace {

// Depth-first assignment of each position to a chain or to "unused".
//
// Chains are interchangeable apart from their last letter, and a chain whose
// last letter is smaller accepts every letter a larger one accepts. So when
// a letter joins some chain it joins the open chain with the largest last
// letter not exceeding it (or opens a new chain if none fits); any other
// choice leaves a state dominated by that one. The search still branches on
// use/skip for every position and is exact.
class GreeneSearch {
 public:
  GreeneSearch(const Word& w, std::size_t d)
      : word_(w), max_chains_(d), assignment_(w.size(), kUnused) {}

  void run() {
    best_size_ = 0;
    best_assignment_.assign(word_.size(), kUnused);
    if (max_chains_ > 0) descend(0, 0);
  }

  std::size_t best_size() const { return best_size_; }
  const std::vector<std::size_t>& best_assignment() const { return best_assignment_; }

  static constexpr std::size_t kUnused = static_cast<std::size_t>(-1);

 private:
  void descend(std::size_t i, std::size_t used) {
    if (used + (word_.size() - i) <= best_size_) return;
    if (i == word_.size()) {
      if (used > best_size_) {
        best_size_ = used;
        best_assignment_ = assignment_;
      }
      return;
    }
    const Letter x = word_[i];
    std::size_t target = kUnused;
    for (std::size_t c = 0; c < last_.size(); ++c) {
      if (last_[c] <= x && (target == kUnused || last_[c] > last_[target])) target = c;
    }
    if (target != kUnused) {
      const Letter saved = last_[target];
      last_[target] = x;
      assignment_[i] = target;
      descend(i + 1, used + 1);
      last_[target] = saved;
    } else if (last_.size() < max_chains_) {
      last_.push_back(x);
      assignment_[i] = last_.size() - 1;
      descend(i + 1, used + 1);
      last_.pop_back();
    }
    assignment_[i] = kUnused;
    descend(i + 1, used);
  }

  const Word& word_;
  std::size_t max_chains_;
  std::vector<Letter> last_;
  std::vector<std::size_t> assignment_;
  std::vector<std::size_t> best_assignment_;
  std::size_t best_size_ = 0;
};

}  // namespace

std::size_t greene_sum(const Word& w, std::size_t d) {
  GreeneSearch search(w, d);
  search.run();
  return search.best_size();
}

DisjointFamily max_family(std::shared_ptr<const Word> w, std::size_t d) {
  GreeneSearch search(*w, d);
  search.run();
  std::vector<std::vector<std::size_t>> chains(d);
  const auto& assignment = search.best_assignment();
  for (std::size_t p = 0; p < assignment.size(); ++p) {
    if (assignment[p] != GreeneSearch::kUnused) chains[assignment[p]].push_back(p);
  }
  std::vector<IndexedSubsequence> members;
  members.reserve(d);
  for (auto& chain : chains) members.emplace_back(w, std::move(chain));
  return DisjointFamily(std::move(w), std::move(members));
}

DisjointFamily max_family(const Word& w, std::size_t d) {
  return max_family(std::make_shared<const Word>(w), d);
}

bool greene_consistency(const Word& w, std::size_t d_max) {
  const Partition shape = shape_of(w);
  std::size_t prefix = 0;
  for (std::size_t d = 0; d <= d_max; ++d) {
    if (d > 0) prefix += shape.part(d - 1);
    if (greene_sum(w, d) != prefix) return false;
  }
  return true;
}

namespace {

class PrescribedSearch {
 public:
  PrescribedSearch(const Word& w, const std::vector<std::size_t>& lengths)
      : word_(w), lengths_(lengths), chains_(lengths.size()) {
    needed_ = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  }

  bool run() { return needed_ <= word_.size() && descend(0); }
  const std::vector<std::vector<std::size_t>>& chains() const { return chains_; }

 private:
  bool descend(std::size_t i) {
    if (needed_ == 0) return true;
    if (word_.size() - i < needed_) return false;
    const Letter x = word_[i];
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      auto& chain = chains_[c];
      if (chain.size() == lengths_[c]) continue;
      if (!chain.empty() && word_[chain.back()] > x) continue;
      chain.push_back(i);
      --needed_;
      if (descend(i + 1)) return true;
      ++needed_;
      chain.pop_back();
    }
    return descend(i + 1);
  }

  const Word& word_;
  const std::vector<std::size_t>& lengths_;
  std::vector<std::vector<std::size_t>> chains_;
  std::size_t needed_ = 0;
};

}  // namespace

std::optional<DisjointFamily> find_family_with_lengths(std::shared_ptr<const Word> w,
                                                       const std::vector<std::size_t>& lengths) {
  PrescribedSearch search(*w, lengths);
  if (!search.run()) return std::nullopt;
  std::vector<IndexedSubsequence> members;
  for (const auto& chain : search.chains()) members.emplace_back(w, chain);
  return DisjointFamily(std::move(w), std::move(members));
}

}  // namespace sepshape
