#pragma once

// Exhaustive and sampled sweeps checking that every occurrence of a
// separable pattern in a word comes with shape containment.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sepshape/core.hpp"

namespace sepshape {

enum class WordSource {
  all_words,     // every word of word_len letters over {1..alphabet}
  permutations,  // every permutation of length word_len
};

struct SweepConfig {
  std::size_t sigma_len = 4;
  std::size_t alphabet = 4;
  std::size_t word_len = 6;
  WordSource source = WordSource::all_words;
  /// Draw this many random words instead of enumerating.
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  /// 0 = hardware concurrency.
  unsigned jobs = 0;
};

struct Violation {
  Word word;
  Permutation sigma;
  Partition word_shape;
  Partition sigma_shape;
};

struct VerificationReport {
  std::size_t sigma_count = 0;
  std::size_t instance_count = 0;
  /// Instances where sigma occurs in the word.
  std::size_t contained_count = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;
  std::chrono::duration<double> elapsed{};
};

/// All separable sigma of length sigma_len against every generated word.
VerificationReport verify_theorem_sweep(const SweepConfig& config);

std::vector<Permutation> all_permutations(std::size_t n);
std::vector<Permutation> separable_permutations(std::size_t n);
/// Every word of length `len` over {1..alphabet}, in lexicographic order.
std::vector<Word> all_words(std::size_t alphabet, std::size_t len);

/// Runs body(i) for i in [0, count) on `jobs` threads (0 = hardware
/// concurrency). Indices are handed out dynamically.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace sepshape
