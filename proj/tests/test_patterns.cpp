#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sepshape/harness.hpp"
#include "sepshape/patterns.hpp"
#include "sepshape/text.hpp"

using namespace sepshape;

namespace {

// Re-checks a witness against the order-isomorphism definition.
bool valid_witness(const Word& w, const Permutation& pi, const std::vector<std::size_t>& pos) {
  if (pos.size() != pi.size()) return false;
  for (std::size_t a = 0; a < pos.size(); ++a) {
    if (pos[a] >= w.size() || (a > 0 && pos[a] <= pos[a - 1])) return false;
    for (std::size_t b = 0; b < pos.size(); ++b) {
      const Letter x = w[pos[a]];
      const Letter y = w[pos[b]];
      if ((x < y) != (pi[a] < pi[b]) || (x > y) != (pi[a] > pi[b])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("contains_pattern examples") {
  const Word pi = parse_word("7135264");
  const auto found = contains_pattern(pi, Permutation{4, 2, 3, 1});
  REQUIRE(found);
  CHECK(valid_witness(pi, Permutation{4, 2, 3, 1}, *found));
  CHECK_FALSE(contains_pattern(pi, Permutation{3, 4, 1, 2}));
  CHECK(contains_pattern(parse_word("5"), Permutation{1}));
  CHECK(contains_pattern(Word{}, Permutation{}));
  CHECK_FALSE(contains_pattern(parse_word("12"), Permutation{1, 2, 3}));
  // Equal letters realize neither < nor >.
  CHECK_FALSE(contains_pattern(parse_word("22"), Permutation{1, 2}));
  CHECK(contains_pattern(parse_word("24213"), Permutation{2, 4, 1, 3}));
}

TEST_CASE("is_separable examples") {
  CHECK_FALSE(is_separable(Permutation{2, 4, 1, 3}));
  CHECK_FALSE(is_separable(Permutation{3, 1, 4, 2}));
  CHECK(is_separable(Permutation{1}));
  CHECK(is_separable(Permutation{}));
  CHECK_FALSE(is_separable(parse_permutation("236145")));
  CHECK(oracle::contains_pattern(parse_word("236145"), Permutation{2, 4, 1, 3}));
  CHECK(is_separable(parse_permutation("10652438ba97")));

  const auto obstruction = separability_obstruction(parse_permutation("236145"));
  REQUIRE(obstruction);
  CHECK(valid_witness(parse_word("236145"), obstruction->pattern, obstruction->positions));
}

TEST_CASE("inversion poset") {
  const InversionPoset p = inversion_poset(Permutation{2, 4, 1, 3});
  CHECK(p.points() == std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 4}, {3, 1}, {4, 3}});
  // (1,2)<(2,4), (1,2)<(4,3), (3,1)<(4,3)
  CHECK(p.cover_relations() ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 3}, {2, 3}});
  CHECK(has_n_subposet(p));
  CHECK(has_n_subposet(inversion_poset(Permutation{3, 1, 4, 2})));

  const InversionPoset chain = inversion_poset(Permutation{1, 2});
  CHECK(chain.precedes(0, 1));
  const InversionPoset antichain = inversion_poset(Permutation{2, 1});
  CHECK_FALSE(antichain.comparable(0, 1));
  CHECK_FALSE(has_n_subposet(inversion_poset(Permutation{1, 2, 3})));
}

TEST_CASE("separable iff the inversion poset has no induced N") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& pi : all_permutations(n)) {
      REQUIRE(is_separable(pi) == !has_n_subposet(inversion_poset(pi)));
    }
  }
}

TEST_CASE("separable census follows the large Schroeder numbers") {
  const std::vector<std::size_t> expected{1, 2, 6, 22, 90, 394};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t brute = 0;
    for (const auto& pi : all_permutations(n)) {
      brute += !oracle::contains_pattern(pi.word(), Permutation{2, 4, 1, 3}) &&
               !oracle::contains_pattern(pi.word(), Permutation{3, 1, 4, 2});
    }
    CHECK(brute == expected[n - 1]);
    CHECK(separable_permutations(n).size() == expected[n - 1]);
  }
}

TEST_CASE("contains_pattern agrees with subset enumeration and returns valid witnesses") {
  std::vector<Permutation> patterns;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (auto& p : all_permutations(m)) patterns.push_back(std::move(p));
  }
  std::mt19937 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<Letter> letter(1, 1 + trial % 6);
    std::vector<Letter> letters(static_cast<std::size_t>(trial % 9));
    for (auto& l : letters) l = letter(rng);
    const Word w(letters);
    for (const auto& pi : patterns) {
      const auto found = contains_pattern(w, pi);
      REQUIRE(found.has_value() == oracle::contains_pattern(w, pi));
      if (found) REQUIRE(valid_witness(w, pi, *found));
    }
  }
}

TEST_CASE("pattern containment is transitive") {
  std::vector<Permutation> middles;
  std::vector<Permutation> smalls;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (auto& p : all_permutations(m)) middles.push_back(std::move(p));
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    for (auto& p : all_permutations(m)) smalls.push_back(std::move(p));
  }
  std::vector<Word> words;
  for (std::size_t len = 0; len <= 6; ++len) {
    for (const auto& p : all_permutations(len)) words.push_back(p.word());
  }
  for (std::size_t len = 0; len <= 5; ++len) {
    for (auto& w : all_words(3, len)) words.push_back(std::move(w));
  }
  for (const auto& pi : middles) {
    for (const auto& rho : smalls) {
      if (!contains_pattern(pi.word(), rho)) continue;
      for (const auto& w : words) {
        if (contains_pattern(w, pi)) REQUIRE(contains_pattern(w, rho));
      }
    }
  }
}
