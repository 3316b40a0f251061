#include "sepshape/rsk.hpp"

#include <algorithm>

namespace sepshape {

namespace {

using Rows = std::vector<std::vector<Letter>>;

// Returns the 0-based row of the new box; the column is rows[row].size()-1.
std::size_t insert_in_place(Rows& rows, Letter x) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({x});
      return r;
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return r;
    }
    std::swap(x, *it);
  }
}

}  // namespace

Insertion row_insert(const Tableau& t, Letter x) {
  if (!t.is_semistandard()) {
    throw PreconditionError("row insertion needs a semistandard tableau");
  }
  Rows rows = t.rows();
  const std::size_t r = insert_in_place(rows, x);
  const std::size_t c = rows[r].size();
  return Insertion{Tableau(std::move(rows)), r + 1, c};
}

RskPair rsk(const Word& w) {
  Rows p;
  Rows q;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t r = insert_in_place(p, w[i]);
    if (r == q.size()) q.emplace_back();
    q[r].push_back(static_cast<Letter>(i + 1));
  }
  return RskPair{Tableau(std::move(p)), Tableau(std::move(q))};
}

Partition shape_of(const Word& w) {
  Rows p;
  for (Letter x : w) insert_in_place(p, x);
  std::vector<std::size_t> parts;
  parts.reserve(p.size());
  for (const auto& row : p) parts.push_back(row.size());
  return Partition(std::move(parts));
}

Word reading_word(const Tableau& t) {
  std::vector<Letter> out;
  out.reserve(t.size());
  for (auto row = t.rows().rbegin(); row != t.rows().rend(); ++row) {
    out.insert(out.end(), row->begin(), row->end());
  }
  return Word(std::move(out));
}

Tableau superstandard(const Partition& mu) {
  Rows rows;
  Letter next = 1;
  for (std::size_t len : mu.parts()) {
    auto& row = rows.emplace_back();
    for (std::size_t c = 0; c < len; ++c) row.push_back(next++);
  }
  return Tableau(std::move(rows));
}

}  // namespace sepshape
