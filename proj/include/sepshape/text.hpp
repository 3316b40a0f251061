#pragma once

// Text forms for words, permutations, partitions, position lists and
// tableaux.
//
// A word is written either compactly, one character per letter with the
// extended digits a=10 ... z=35 ("10652438ba97"), or as integers separated by
// commas and/or whitespace ("1, 0, 6, 5"). The compact form applies only when
// the text contains no separator; the two forms cannot be mixed.

#include <string>
#include <string_view>
#include <vector>

#include "sepshape/core.hpp"

namespace sepshape {

Word parse_word(std::string_view text);
Permutation parse_permutation(std::string_view text);
/// Comma- or whitespace-separated positive parts; "" is the empty partition.
Partition parse_partition(std::string_view text);
/// Separated non-negative integers (never compact).
std::vector<std::size_t> parse_positions(std::string_view text);

/// Compact when every letter is at most 35, comma-separated otherwise.
std::string format_word(const Word& w);
/// The permutation in the base it was given in.
std::string format_permutation(const Permutation& p);
std::string format_partition(const Partition& p);
std::string format_positions(const std::vector<std::size_t>& positions);
/// One row per line, entries separated by single spaces.
std::string format_tableau(const Tableau& t);

}  // namespace sepshape
