#pragma once

#include <cstddef>

#include "sepshape/core.hpp"

namespace sepshape {

/// Insertion tableau P (semistandard) and recording tableau Q (standard).
struct RskPair {
  Tableau p;
  Tableau q;
};

struct Insertion {
  Tableau tableau;
  std::size_t row;     // 1-based row of the new box
  std::size_t column;  // 1-based column of the new box
};

/// Row insertion: x bumps the leftmost entry strictly greater than it, the
/// bumped entry is inserted into the next row, and so on until an entry
/// lands at the end of a row. Throws PreconditionError if `t` is not
/// semistandard.
Insertion row_insert(const Tableau& t, Letter x);

/// Inserts the letters of `w` left to right. Q holds the 1-based insertion
/// index in each new box.
RskPair rsk(const Word& w);

Partition shape_of(const Word& w);

/// Rows concatenated, bottom row first.
Word reading_word(const Tableau& t);

/// Standard tableau of shape `mu` filled 1, 2, ... row by row from the top.
Tableau superstandard(const Partition& mu);

}  // namespace sepshape
