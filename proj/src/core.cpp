#include "sepshape/core.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <unordered_map>

namespace sepshape {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Letter> values) {
  if (values.empty()) return;
  const Letter lo = *std::min_element(values.begin(), values.end());
  if (lo > 1) {
    throw InvalidInput("permutation values must start at 0 or 1");
  }
  std::vector<bool> seen(values.size(), false);
  for (Letter v : values) {
    const Letter offset = v - lo;
    if (offset >= values.size()) {
      throw InvalidInput("permutation values are not a contiguous range");
    }
    if (seen[offset]) {
      throw InvalidInput("permutation repeats the value " + std::to_string(v));
    }
    seen[offset] = true;
  }
  base_ = lo;
  for (Letter& v : values) v = v - lo + 1;
  values_ = Word(std::move(values));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Letter> values(n);
  std::iota(values.begin(), values.end(), Letter{1});
  return Permutation(std::move(values));
}

Word Permutation::display_word() const {
  std::vector<Letter> out;
  out.reserve(size());
  for (Letter v : values_) out.push_back(display_value(v));
  return Word(std::move(out));
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<std::size_t> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) {
      throw InvalidInput("partition parts must be weakly decreasing");
    }
  }
  if (std::find(parts.begin(), parts.end(), 0) != parts.end()) {
    throw InvalidInput("zero part before a positive part");
  }
  parts_ = std::move(parts);
}

std::size_t Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

bool partition_contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.length(); ++i) {
    if (inner.part(i) > outer.part(i)) return false;
  }
  return true;
}

Partition partition_union(const Partition& a, const Partition& b) {
  const std::size_t rows = std::max(a.length(), b.length());
  std::vector<std::size_t> parts(rows);
  for (std::size_t i = 0; i < rows; ++i) parts[i] = std::max(a.part(i), b.part(i));
  return Partition(std::move(parts));
}

std::size_t corner_count(const Partition& p) {
  std::size_t corners = 0;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (p.part(i + 1) < p.part(i)) ++corners;
  }
  return corners;
}

// ---------------------------------------------------------------------------
// Tableau

Tableau::Tableau(std::vector<std::vector<Letter>> rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) throw InvalidInput("tableau rows must be non-empty");
    if (r > 0 && rows[r].size() > rows[r - 1].size()) {
      throw InvalidInput("tableau row lengths must be weakly decreasing");
    }
  }
  rows_ = std::move(rows);
}

std::size_t Tableau::size() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

Partition Tableau::shape() const {
  std::vector<std::size_t> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(row.size());
  return Partition(std::move(parts));
}

bool Tableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (!std::is_sorted(row.begin(), row.end())) return false;
    if (r == 0) continue;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (rows_[r - 1][c] >= row[c]) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  std::vector<bool> seen(size() + 1, false);
  for (const auto& row : rows_) {
    for (Letter v : row) {
      if (v == 0 || v > size() || seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// IndexedSubsequence

IndexedSubsequence::IndexedSubsequence(std::shared_ptr<const Word> host,
                                       std::vector<std::size_t> positions)
    : host_(std::move(host)), positions_(std::move(positions)) {
  if (!host_) throw InvalidInput("subsequence without a host word");
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] >= host_->size()) {
      throw InvalidInput("subsequence position " + std::to_string(positions_[i]) +
                         " is outside a host of length " + std::to_string(host_->size()));
    }
    if (i > 0 && positions_[i] <= positions_[i - 1]) {
      throw InvalidInput("subsequence positions must be strictly increasing");
    }
  }
}

Word IndexedSubsequence::values() const {
  std::vector<Letter> out;
  out.reserve(positions_.size());
  for (std::size_t p : positions_) out.push_back((*host_)[p]);
  return Word(std::move(out));
}

bool IndexedSubsequence::contains(std::size_t position) const {
  return std::binary_search(positions_.begin(), positions_.end(), position);
}

bool IndexedSubsequence::same_host(const IndexedSubsequence& other) const {
  return host_ == other.host_ || *host_ == *other.host_;
}

bool IndexedSubsequence::is_disjoint(const IndexedSubsequence& other) const {
  auto a = positions_.begin();
  auto b = other.positions_.begin();
  while (a != positions_.end() && b != other.positions_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

namespace {

void require_same_host(const IndexedSubsequence& a, const IndexedSubsequence& b) {
  if (!a.same_host(b)) {
    throw InvalidInput("subsequences of different host words are incompatible");
  }
}

}  // namespace

IndexedSubsequence IndexedSubsequence::intersection(const IndexedSubsequence& other) const {
  require_same_host(*this, other);
  std::vector<std::size_t> out;
  std::set_intersection(positions_.begin(), positions_.end(), other.positions_.begin(),
                        other.positions_.end(), std::back_inserter(out));
  return IndexedSubsequence(host_, std::move(out));
}

IndexedSubsequence IndexedSubsequence::difference(const IndexedSubsequence& other) const {
  require_same_host(*this, other);
  std::vector<std::size_t> out;
  std::set_difference(positions_.begin(), positions_.end(), other.positions_.begin(),
                      other.positions_.end(), std::back_inserter(out));
  return IndexedSubsequence(host_, std::move(out));
}

IndexedSubsequence IndexedSubsequence::prefix(std::size_t count) const {
  count = std::min(count, positions_.size());
  return IndexedSubsequence(host_, std::vector<std::size_t>(positions_.begin(),
                                                            positions_.begin() + count));
}

IndexedSubsequence subsequence_union(const IndexedSubsequence& a, const IndexedSubsequence& b) {
  require_same_host(a, b);
  std::vector<std::size_t> out;
  std::set_union(a.positions().begin(), a.positions().end(), b.positions().begin(),
                 b.positions().end(), std::back_inserter(out));
  return IndexedSubsequence(a.host_ptr(), std::move(out));
}

bool is_increasing(const IndexedSubsequence& s, Monotonicity kind) {
  const auto& pos = s.positions();
  const Word& host = s.host();
  for (std::size_t i = 1; i < pos.size(); ++i) {
    const Letter prev = host[pos[i - 1]];
    const Letter cur = host[pos[i]];
    if (cur < prev || (kind == Monotonicity::strict && cur == prev)) return false;
  }
  return true;
}

IndexedSubsequence subsequence_of_values(std::shared_ptr<const Word> host,
                                         std::span<const Letter> values) {
  std::unordered_map<Letter, std::size_t> where;
  for (std::size_t i = 0; i < host->size(); ++i) {
    if (!where.emplace((*host)[i], i).second) {
      throw InvalidInput("host word repeats the letter " + std::to_string((*host)[i]));
    }
  }
  std::vector<std::size_t> positions;
  positions.reserve(values.size());
  for (Letter v : values) {
    auto it = where.find(v);
    if (it == where.end()) {
      throw InvalidInput("value " + std::to_string(v) + " does not occur in the host word");
    }
    positions.push_back(it->second);
  }
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
    throw InvalidInput("a value is listed more than once");
  }
  return IndexedSubsequence(std::move(host), std::move(positions));
}

}  // namespace sepshape
