#include "sepshape/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>
#include <tuple>

#include "sepshape/exchange.hpp"
#include "sepshape/patterns.hpp"

namespace sepshape {

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Letter> values(n);
  std::iota(values.begin(), values.end(), Letter{1});
  std::vector<Permutation> out;
  do {
    out.emplace_back(values);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

std::vector<Permutation> separable_permutations(std::size_t n) {
  std::vector<Permutation> out;
  for (auto& p : all_permutations(n)) {
    if (is_separable(p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Word> all_words(std::size_t alphabet, std::size_t len) {
  std::vector<Word> out;
  if (alphabet == 0) {
    if (len == 0) out.emplace_back();
    return out;
  }
  std::vector<Letter> letters(len, 1);
  while (true) {
    out.emplace_back(letters);
    std::size_t i = len;
    while (i > 0 && letters[i - 1] == alphabet) letters[--i] = 1;
    if (i == 0) break;
    ++letters[i - 1];
  }
  return out;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

std::vector<Word> sample_words(const SweepConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::vector<Word> out;
  out.reserve(*config.samples);
  std::vector<Letter> letters(config.word_len);
  for (std::size_t s = 0; s < *config.samples; ++s) {
    if (config.source == WordSource::permutations) {
      std::iota(letters.begin(), letters.end(), Letter{1});
      std::shuffle(letters.begin(), letters.end(), rng);
    } else {
      std::uniform_int_distribution<Letter> pick(1, static_cast<Letter>(config.alphabet));
      for (auto& l : letters) l = pick(rng);
    }
    out.emplace_back(letters);
  }
  return out;
}

}  // namespace

VerificationReport verify_theorem_sweep(const SweepConfig& config) {
  if (config.source == WordSource::all_words && config.alphabet == 0 && config.word_len > 0) {
    throw InvalidInput("word alphabet must be positive");
  }
  const auto started = std::chrono::steady_clock::now();

  const std::vector<Permutation> sigmas = separable_permutations(config.sigma_len);
  std::vector<Word> words;
  if (config.samples) {
    words = sample_words(config);
  } else if (config.source == WordSource::permutations) {
    for (const auto& p : all_permutations(config.word_len)) words.push_back(p.word());
  } else {
    words = all_words(config.alphabet, config.word_len);
  }

  std::atomic<std::size_t> contained{0};
  std::mutex violations_mutex;
  std::vector<Violation> violations;
  parallel_for(words.size(), config.jobs, [&](std::size_t i) {
    std::size_t local_contained = 0;
    for (const auto& sigma : sigmas) {
      const ContainmentVerdict v = verify_shape_containment(words[i], sigma);
      if (v.hypothesis_holds()) ++local_contained;
      if (v.violation()) {
        std::lock_guard lock(violations_mutex);
        violations.push_back(Violation{words[i], sigma, v.word_shape, v.pattern_shape});
      }
    }
    contained += local_contained;
  });
  std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.sigma.word(), a.word) < std::tie(b.sigma.word(), b.word);
  });

  VerificationReport report;
  report.sigma_count = sigmas.size();
  report.instance_count = sigmas.size() * words.size();
  report.contained_count = contained;
  report.violation_count = violations.size();
  report.violations = std::move(violations);
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace sepshape
