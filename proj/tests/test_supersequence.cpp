#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sepshape/harness.hpp"
#include "sepshape/patterns.hpp"
#include "sepshape/rsk.hpp"
#include "sepshape/supersequence.hpp"
#include "sepshape/text.hpp"

using namespace sepshape;

namespace {

PermutationSet flagship() {
  return PermutationSet({parse_permutation("123456789"), parse_permutation("678912345"),
                         parse_permutation("789456123"), parse_permutation("978563412"),
                         parse_permutation("987654321")});
}

std::vector<std::vector<Letter>> literal_members(const PermutationSet& b) {
  std::vector<std::vector<Letter>> out;
  for (const auto& m : b.members()) {
    const Word w = m.display_word();
    out.emplace_back(w.begin(), w.end());
  }
  return out;
}

std::size_t direct_corner_count(const Partition& p) {
  std::size_t count = 0;
  for (std::size_t r = 0; r < p.length(); ++r) count += p.part(r) != p.part(r + 1);
  return count;
}

}  // namespace

TEST_CASE("permutation set validation") {
  CHECK_THROWS_AS(PermutationSet({Permutation{1, 2}, Permutation{1, 2, 3}}), InvalidInput);
  CHECK_THROWS_AS(PermutationSet({Permutation{1, 2}, Permutation{1, 2}}), InvalidInput);
  CHECK_THROWS_AS(PermutationSet({Permutation{1, 2}, Permutation({1, 0})}), InvalidInput);
  CHECK(PermutationSet().degree() == 0);
  CHECK(flagship().degree() == 9);
}

TEST_CASE("is_supersequence examples") {
  const Word w = parse_word("2214312");
  CHECK(is_supersequence(w, Permutation{1, 3, 2}));
  CHECK_FALSE(is_supersequence(w, Permutation{3, 2, 1}));
  CHECK(is_supersequence(w, Permutation{3, 1, 2}));
  CHECK(is_supersequence(w, Permutation{2, 1, 3}));
  CHECK_FALSE(is_supersequence(parse_word("123"), Permutation{3, 2, 1}));
  CHECK(is_supersequence(parse_word("69785765439123456123789"), parse_permutation("978563412")));
}

TEST_CASE("scs_exact on the flagship set") {
  const PermutationSet b = flagship();
  const ScsResult r = scs_exact(b);
  CHECK(r.length == 23);
  CHECK(r.witness.size() == 23);
  for (const auto& m : b.members()) CHECK(is_supersequence(r.witness, m));
  REQUIRE(r.lower_bound);
  CHECK(*r.lower_bound == 23);
  CHECK(*r.bound_tight);

  const Word published = parse_word("6,9,7,8,7,5,9,6,5,4,3,1,2,3,4,5,6,7,8,9,1,2,3");
  CHECK(published.size() == 23);
  for (const auto& m : b.members()) CHECK(is_supersequence(published, m));

  const std::vector<Partition> shapes{Partition{9}, Partition{5, 4}, Partition{3, 3, 3},
                                      Partition{2, 2, 2, 2, 1},
                                      Partition{1, 1, 1, 1, 1, 1, 1, 1, 1}};
  for (std::size_t i = 0; i < shapes.size(); ++i) CHECK(shape_of(b.members()[i].word()) == shapes[i]);
  CHECK(shape_union_bound(b) == 23);
}

TEST_CASE("scs_exact small cases") {
  const ScsResult empty = scs_exact(PermutationSet());
  CHECK(empty.length == 0);
  CHECK(empty.witness.empty());

  const ScsResult single = scs_exact(PermutationSet({parse_permutation("2413")}));
  CHECK(single.length == 4);
  CHECK(single.witness == parse_word("2413"));
  CHECK_FALSE(single.lower_bound.has_value());

  const ScsResult zero_based = scs_exact(PermutationSet({parse_permutation("102"), parse_permutation("021")}));
  CHECK(zero_based.length == 4);
  CHECK(is_supersequence(zero_based.witness, parse_permutation("102")));
  CHECK(is_supersequence(zero_based.witness, parse_permutation("021")));

  const PermutationSet s3(all_permutations(3));
  const ScsResult all3 = scs_exact(s3);
  CHECK(all3.length == 7);
  CHECK(oracle::scs_length(literal_members(s3), 3, 8) == 7);
  for (const auto& m : s3.members()) CHECK(is_supersequence(all3.witness, m));

  CHECK_THROWS_AS(scs_exact(flagship(), 1000), BudgetExceeded);
}

TEST_CASE("scs_exact returns the lexicographically smallest optimum on tiny sets") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 2;
    auto perms = all_permutations(n);
    std::shuffle(perms.begin(), perms.end(), rng);
    perms.resize(std::min<std::size_t>(1 + trial % 3, perms.size()));
    const PermutationSet b(perms);
    const ScsResult r = scs_exact(b);
    const auto members = literal_members(b);
    REQUIRE(r.length == oracle::scs_length(members, n, 2 * n + 2));
    // Every word of the same length that sorts earlier must fail.
    std::vector<Letter> w(r.length, 1);
    const std::vector<Letter> best(r.witness.begin(), r.witness.end());
    while (w < best) {
      bool all = true;
      for (const auto& m : members) all = all && oracle::embeds(w, m);
      REQUIRE_FALSE(all);
      std::size_t i = w.size();
      while (i > 0 && w[i - 1] == n) w[--i] = 1;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

TEST_CASE("the shape-union bound never exceeds the exact length") {
  std::mt19937 rng(4);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto separable = separable_permutations(n);
    for (int trial = 0; trial < 40; ++trial) {
      std::set<std::size_t> picks;
      const std::size_t want = std::min<std::size_t>(1 + trial % 3, separable.size());
      while (picks.size() < want) picks.insert(rng() % separable.size());
      std::vector<Permutation> members;
      for (std::size_t i : picks) members.push_back(separable[i]);
      const PermutationSet b(members);
      const ScsResult r = scs_exact(b);
      REQUIRE(r.lower_bound);
      REQUIRE(*r.lower_bound == shape_union_bound(b));
      REQUIRE(*r.lower_bound <= r.length);
      REQUIRE(*r.bound_tight == (*r.lower_bound == r.length));
      for (const auto& m : b.members()) REQUIRE(is_supersequence(r.witness, m));
    }
  }
  CHECK_THROWS_AS(shape_union_bound(PermutationSet({Permutation{1, 2, 3, 4}, Permutation{2, 4, 1, 3}})),
                  NotSeparable);
}

TEST_CASE("mu diagram examples") {
  CHECK(mu_diagram(9) == Partition{9, 4, 3, 2, 1, 1, 1, 1, 1});
  CHECK(mu_size(9) == 23);
  CHECK(mu_corners(9) == 5);
  CHECK(mu_diagram(1) == Partition{1});
  CHECK(mu_size(1) == 1);
  CHECK(mu_corners(1) == 1);
  CHECK(corners(Partition{9, 4, 3, 2, 1, 1, 1, 1, 1}) ==
        std::vector<std::pair<std::size_t, std::size_t>>{{1, 9}, {2, 4}, {3, 3}, {4, 2}, {9, 1}});
  CHECK(corners(Partition{}).empty());
}

TEST_CASE("mu_diagram is the union of all partitions") {
  for (std::size_t n = 1; n <= 20; ++n) {
    const Partition brute = oracle::mu_diagram(n);
    REQUIRE(mu_diagram(n) == brute);
    REQUIRE(mu_size(n) == brute.size());
    REQUIRE(mu_corners(n) == direct_corner_count(brute));
  }
}

TEST_CASE("mu_size and mu_corners match direct counts") {
  std::size_t tau_sum = 0;
  for (std::size_t n = 1; n <= 10000; ++n) {
    tau_sum += oracle::divisor_count(n) * (n <= 2000);
    if (n <= 2000) REQUIRE(mu_size(n) == tau_sum);
    REQUIRE(mu_corners(n) == direct_corner_count(mu_diagram(n)));
    REQUIRE(mu_size(n) == mu_diagram(n).size());
  }
}

TEST_CASE("mu diagrams are nested and grow by the divisor count") {
  for (std::size_t n = 1; n < 300; ++n) {
    REQUIRE(partition_contains(mu_diagram(n + 1), mu_diagram(n)));
    REQUIRE(mu_size(n + 1) - mu_size(n) == oracle::divisor_count(n + 1));
  }
}

TEST_CASE("separable_witness_for_shape") {
  CHECK(separable_witness_for_shape(Partition{3, 3, 2}) == parse_permutation("78456123"));
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const auto& lambda : oracle::partitions(n)) {
      const Permutation pi = separable_witness_for_shape(lambda);
      REQUIRE(shape_of(pi.word()) == lambda);
      REQUIRE(is_separable(pi));
      REQUIRE_FALSE(oracle::contains_pattern(pi.word(), Permutation{2, 1, 3}));
    }
  }
}

TEST_CASE("mu_family covers mu(n) with separable members") {
  const PermutationSet nine = mu_family(9);
  CHECK(nine.size() == 5);
  for (std::size_t n = 1; n <= 12; ++n) {
    const PermutationSet family = mu_family(n);
    REQUIRE(family.size() == mu_corners(n));
    Partition cover;
    for (const auto& m : family.members()) {
      REQUIRE(m.size() == n);
      REQUIRE(is_separable(m));
      cover = partition_union(cover, shape_of(m.word()));
    }
    REQUIRE(cover == mu_diagram(n));
    REQUIRE(shape_union_bound(family) == mu_size(n));
  }
}
