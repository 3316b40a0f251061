#pragma once

// Value types shared by every sepshape module: words, permutations,
// partitions, tableaux and positional subsequences.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepshape {

using Letter = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text, or a value that violates its type's invariants.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Arguments are well-formed but an operation's precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotSeparable : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Word

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// ---------------------------------------------------------------------------
// Permutation

/// A bijection on {b, ..., b+n-1} with b in {0, 1}, stored normalized to
/// base 1. The input base is kept so values can be displayed as given.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidInput unless `values` is a bijection on a contiguous range
  /// starting at 0 or 1.
  explicit Permutation(std::vector<Letter> values);
  Permutation(std::initializer_list<Letter> values)
      : Permutation(std::vector<Letter>(values)) {}

  static Permutation identity(std::size_t n);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  /// Normalized (base-1) value at position i.
  Letter operator[](std::size_t i) const { return values_[i]; }
  /// Normalized one-line notation.
  const Word& word() const { return values_; }
  Letter base() const { return base_; }

  Letter display_value(Letter normalized) const { return normalized - 1 + base_; }
  /// One-line notation in the base the permutation was given in.
  Word display_word() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  Word values_;
  Letter base_ = 1;
};

// ---------------------------------------------------------------------------
// Partition

class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped. Throws InvalidInput if the parts are not
  /// weakly decreasing or a zero precedes a positive part.
  explicit Partition(std::vector<std::size_t> parts);
  Partition(std::initializer_list<std::size_t> parts)
      : Partition(std::vector<std::size_t>(parts)) {}

  const std::vector<std::size_t>& parts() const { return parts_; }
  /// Number of positive parts.
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); zero past the last positive part.
  std::size_t part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t size() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> parts_;
};

/// Diagram containment: inner.part(i) <= outer.part(i) for every i.
bool partition_contains(const Partition& outer, const Partition& inner);

/// Diagram union (rowwise maximum).
Partition partition_union(const Partition& a, const Partition& b);

/// Distinct row lengths of the diagram, one per corner cell.
std::size_t corner_count(const Partition& p);

// ---------------------------------------------------------------------------
// Tableau

/// Rows of a Ferrers diagram filled with letters. Construction only checks
/// that the row lengths form a partition; the fill conditions are queries.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<Letter>> rows);

  const std::vector<std::vector<Letter>>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t size() const;
  Partition shape() const;

  /// Rows weakly increase, columns strictly increase.
  bool is_semistandard() const;
  /// Semistandard and filled with exactly 1..size().
  bool is_standard() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<Letter>> rows_;
};

// ---------------------------------------------------------------------------
// IndexedSubsequence

/// A subsequence of a host word identified by its (0-based) position set.
/// Hosts are compared by content, so subsequences built over separately
/// allocated copies of the same word are compatible.
class IndexedSubsequence {
 public:
  /// Throws InvalidInput unless positions are strictly increasing and in range.
  IndexedSubsequence(std::shared_ptr<const Word> host, std::vector<std::size_t> positions);

  /// Empty subsequence of `host`.
  explicit IndexedSubsequence(std::shared_ptr<const Word> host)
      : IndexedSubsequence(std::move(host), {}) {}

  const Word& host() const { return *host_; }
  const std::shared_ptr<const Word>& host_ptr() const { return host_; }
  const std::vector<std::size_t>& positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  bool empty() const { return positions_.empty(); }

  /// Host letters at the positions, in order.
  Word values() const;
  bool contains(std::size_t position) const;
  bool same_host(const IndexedSubsequence& other) const;
  bool is_disjoint(const IndexedSubsequence& other) const;

  IndexedSubsequence intersection(const IndexedSubsequence& other) const;
  IndexedSubsequence difference(const IndexedSubsequence& other) const;
  /// The first `count` positions.
  IndexedSubsequence prefix(std::size_t count) const;

  friend bool operator==(const IndexedSubsequence& a, const IndexedSubsequence& b) {
    return a.same_host(b) && a.positions_ == b.positions_;
  }

 private:
  std::shared_ptr<const Word> host_;
  std::vector<std::size_t> positions_;
};

/// Set union of position sets. Throws InvalidInput for different hosts.
IndexedSubsequence subsequence_union(const IndexedSubsequence& a, const IndexedSubsequence& b);

enum class Monotonicity { weak, strict };

bool is_increasing(const IndexedSubsequence& s, Monotonicity kind = Monotonicity::weak);

/// Locates each value in a host whose letters are distinct. Throws
/// InvalidInput if a value is absent or occurs more than once.
IndexedSubsequence subsequence_of_values(std::shared_ptr<const Word> host,
                                         std::span<const Letter> values);

}  // namespace sepshape
