#include "sepshape/cli.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sepshape/exchange.hpp"
#include "sepshape/greene.hpp"
#include "sepshape/harness.hpp"
#include "sepshape/patterns.hpp"
#include "sepshape/rsk.hpp"
#include "sepshape/supersequence.hpp"
#include "sepshape/text.hpp"

namespace sepshape {

using nlohmann::json;

std::string render_ferrers(const Partition& p) {
  std::string out;
  for (std::size_t len : p.parts()) {
    for (std::size_t c = 0; c < len; ++c) out += "\u25A0";
    out += '\n';
  }
  return out;
}

namespace {

struct GlobalOptions {
  bool json = false;
  std::uint64_t budget = kDefaultScsBudget;
  unsigned jobs = 0;
  std::uint64_t seed = 0;
};

json subsequence_json(const IndexedSubsequence& s, const Permutation* display) {
  Word values = s.values();
  if (display) {
    std::vector<Letter> shown;
    for (Letter v : values) shown.push_back(display->display_value(v));
    values = Word(std::move(shown));
  }
  return json{{"positions", s.positions()}, {"values", format_word(values)}};
}

std::string describe(const IndexedSubsequence& s, const Permutation* display) {
  const json j = subsequence_json(s, display);
  const std::string values = j["values"].get<std::string>();
  return (values.empty() ? std::string("(empty)") : values) + "  (positions " +
         (s.empty() ? std::string("none") : format_positions(s.positions())) + ")";
}

std::string shape_text(const Partition& p) {
  return p.empty() ? std::string("(empty)") : format_partition(p);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_rsk(const GlobalOptions& g, const std::string& text, std::ostream& out) {
  const Word w = parse_word(text);
  const RskPair pair = rsk(w);
  if (g.json) {
    emit(out, json{{"word", format_word(w)},
                   {"p", pair.p.rows()},
                   {"q", pair.q.rows()},
                   {"shape", format_partition(pair.p.shape())}});
  } else {
    out << "P:\n" << format_tableau(pair.p) << "Q:\n" << format_tableau(pair.q)
        << "shape: " << shape_text(pair.p.shape()) << '\n';
  }
  return kExitOk;
}

int cmd_shape(const GlobalOptions& g, const std::string& text, std::ostream& out) {
  const Word w = parse_word(text);
  const Partition shape = shape_of(w);
  if (g.json) {
    emit(out, json{{"word", format_word(w)}, {"shape", format_partition(shape)}});
  } else {
    out << "shape: " << shape_text(shape) << '\n';
  }
  return kExitOk;
}

int cmd_pattern(const GlobalOptions& g, const std::string& word_text,
                const std::string& pattern_text, std::ostream& out) {
  const Word w = parse_word(word_text);
  const Permutation pattern = parse_permutation(pattern_text);
  const auto occurrence = contains_pattern(w, pattern);
  if (g.json) {
    json j{{"word", format_word(w)},
           {"pattern", format_permutation(pattern)},
           {"contains", occurrence.has_value()},
           {"positions", nullptr}};
    if (occurrence) j["positions"] = *occurrence;
    emit(out, j);
  } else if (occurrence) {
    std::vector<Letter> letters;
    for (std::size_t p : *occurrence) letters.push_back(w[p]);
    out << "contains " << format_permutation(pattern) << " at positions "
        << format_positions(*occurrence) << " (letters " << format_word(Word(letters)) << ")\n";
  } else {
    out << "avoids " << format_permutation(pattern) << '\n';
  }
  return occurrence ? kExitOk : kExitFalse;
}

int cmd_separable(const GlobalOptions& g, const std::string& text, std::ostream& out) {
  const Permutation pi = parse_permutation(text);
  const auto obstruction = separability_obstruction(pi);
  if (g.json) {
    json j{{"permutation", format_permutation(pi)},
           {"separable", !obstruction.has_value()},
           {"obstruction", nullptr}};
    if (obstruction) {
      j["obstruction"] = json{{"pattern", format_permutation(obstruction->pattern)},
                              {"positions", obstruction->positions}};
    }
    emit(out, j);
  } else if (obstruction) {
    out << "no: " << format_permutation(obstruction->pattern) << " occurs at positions "
        << format_positions(obstruction->positions) << '\n';
  } else {
    out << "yes\n";
  }
  return obstruction ? kExitFalse : kExitOk;
}

json family_json(const DisjointFamily& family, const Permutation* display) {
  json members = json::array();
  for (const auto& m : family.members()) members.push_back(subsequence_json(m, display));
  return members;
}

void print_family(std::ostream& out, const DisjointFamily& family, const Permutation* display) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    out << "  " << (i + 1) << ": " << describe(family[i], display) << '\n';
  }
}

int cmd_greene(const GlobalOptions& g, const std::string& text, std::size_t d, std::ostream& out) {
  const auto w = std::make_shared<const Word>(parse_word(text));
  const DisjointFamily family = max_family(w, d);
  if (g.json) {
    emit(out, json{{"word", format_word(*w)},
                   {"d", d},
                   {"max", family.total_size()},
                   {"family", family_json(family, nullptr)}});
  } else {
    out << "max: " << family.total_size() << '\n';
    print_family(out, family, nullptr);
  }
  return kExitOk;
}

int cmd_exchange(const GlobalOptions& g, const std::string& perm_text, const std::string& u_text,
                 const std::string& w_text, const std::string& w2_text, std::ostream& out) {
  const SeparablePermutation sigma(parse_permutation(perm_text));
  const IndexedSubsequence u(sigma.host(), parse_positions(u_text));
  const IndexedSubsequence w(sigma.host(), parse_positions(w_text));
  const IndexedSubsequence w2(sigma.host(), parse_positions(w2_text));
  const ExchangeResult r = lemma_exchange(sigma, u, w, w2);
  const Permutation* display = &sigma.permutation();
  if (g.json) {
    emit(out, json{{"permutation", format_permutation(sigma.permutation())},
                   {"alpha", subsequence_json(r.alpha, display)},
                   {"beta", subsequence_json(r.beta, display)}});
  } else {
    out << "alpha: " << describe(r.alpha, display) << '\n'
        << "beta:  " << describe(r.beta, display) << '\n';
  }
  return kExitOk;
}

int cmd_witness(const GlobalOptions& g, const std::string& text, std::optional<std::size_t> d,
                std::ostream& out) {
  const Permutation sigma = parse_permutation(text);
  const Partition shape = shape_of(sigma.word());
  const DisjointFamily family = greene_witness(sigma, d.value_or(shape.length()));
  if (g.json) {
    emit(out, json{{"permutation", format_permutation(sigma)},
                   {"shape", format_partition(shape)},
                   {"family", family_json(family, &sigma)}});
  } else {
    out << "shape: " << shape_text(shape) << '\n';
    print_family(out, family, &sigma);
  }
  return kExitOk;
}

int cmd_verify(const GlobalOptions& g, SweepConfig config, std::ostream& out) {
  config.jobs = g.jobs;
  config.seed = g.seed;
  const VerificationReport report = verify_theorem_sweep(config);
  if (g.json) {
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back(json{{"word", format_word(v.word)},
                                {"sigma", format_permutation(v.sigma)},
                                {"word_shape", format_partition(v.word_shape)},
                                {"sigma_shape", format_partition(v.sigma_shape)}});
    }
    emit(out, json{{"sigma_count", report.sigma_count},
                   {"instance_count", report.instance_count},
                   {"contained_count", report.contained_count},
                   {"violation_count", report.violation_count},
                   {"violations", violations},
                   {"elapsed_seconds", report.elapsed.count()}});
  } else {
    out << "separable patterns: " << report.sigma_count << '\n'
        << "instances: " << report.instance_count << '\n'
        << "pattern occurrences: " << report.contained_count << '\n'
        << "violations: " << report.violation_count << '\n';
    for (const auto& v : report.violations) {
      out << "  VIOLATION word " << format_word(v.word) << " (" << format_partition(v.word_shape)
          << ") contains " << format_permutation(v.sigma) << " ("
          << format_partition(v.sigma_shape) << ")\n";
    }
    out << "elapsed: " << std::fixed << std::setprecision(3) << report.elapsed.count() << " s\n";
  }
  return report.violation_count == 0 ? kExitOk : kExitViolation;
}

PermutationSet parse_set(const std::vector<std::string>& texts) {
  std::vector<Permutation> members;
  for (const auto& t : texts) members.push_back(parse_permutation(t));
  return PermutationSet(std::move(members));
}

int cmd_scs(const GlobalOptions& g, const std::vector<std::string>& texts, std::ostream& out) {
  const PermutationSet set = parse_set(texts);
  const ScsResult r = scs_exact(set, g.budget);
  if (g.json) {
    json members = json::array();
    for (const auto& m : set.members()) members.push_back(format_permutation(m));
    json j{{"length", r.length},
           {"witness", format_word(r.witness)},
           {"lower_bound", nullptr},
           {"tight", nullptr},
           {"members", members}};
    if (r.lower_bound) j["lower_bound"] = *r.lower_bound;
    if (r.bound_tight) j["tight"] = *r.bound_tight;
    emit(out, j);
  } else {
    out << "length: " << r.length << '\n' << "witness: " << format_word(r.witness) << '\n';
    if (r.lower_bound) {
      out << "lower bound: " << *r.lower_bound << '\n'
          << "tight: " << (*r.bound_tight ? "yes" : "no") << '\n';
    } else {
      out << "lower bound: n/a (a member is not separable)\n";
    }
  }
  return kExitOk;
}

int cmd_supersequence(const GlobalOptions& g, const std::string& word_text,
                      const std::vector<std::string>& texts, std::ostream& out) {
  const Word w = parse_word(word_text);
  bool all = true;
  json members = json::array();
  for (const auto& t : texts) {
    const Permutation sigma = parse_permutation(t);
    const bool ok = is_supersequence(w, sigma);
    all = all && ok;
    if (g.json) {
      members.push_back(json{{"permutation", format_permutation(sigma)}, {"supersequence", ok}});
    } else {
      out << format_permutation(sigma) << ": " << (ok ? "yes" : "no") << '\n';
    }
  }
  if (g.json) emit(out, json{{"word", format_word(w)}, {"members", members}, {"all", all}});
  return all ? kExitOk : kExitFalse;
}

int cmd_mu(const GlobalOptions& g, std::size_t n, std::ostream& out) {
  if (n == 0) throw InvalidInput("mu needs n >= 1");
  const Partition diagram = mu_diagram(n);
  const PermutationSet family = mu_family(n);
  const std::size_t size = mu_size(n);
  // Inspection only: the divisor sum grows like n ln n.
  const double ratio = n > 1 ? static_cast<double>(size) / (n * std::log(static_cast<double>(n)))
                             : 0.0;
  if (g.json) {
    json members = json::array();
    json shapes = json::array();
    for (const auto& m : family.members()) {
      members.push_back(format_permutation(m));
      shapes.push_back(format_partition(shape_of(m.word())));
    }
    json j{{"n", n},
           {"diagram", format_partition(diagram)},
           {"size", size},
           {"corners", mu_corners(n)},
           {"members", members},
           {"shapes", shapes},
           {"bound", shape_union_bound(family)},
           {"size_over_n_ln_n", nullptr}};
    if (n > 1) j["size_over_n_ln_n"] = ratio;
    emit(out, j);
  } else {
    out << render_ferrers(diagram) << "size: " << size << '\n'
        << "corners: " << mu_corners(n) << '\n'
        << "family (shape-union bound " << shape_union_bound(family) << "):\n";
    for (const auto& m : family.members()) {
      out << "  " << format_permutation(m) << "  shape " << format_partition(shape_of(m.word()))
          << '\n';
    }
    if (n > 1) {
      out << "size / (n ln n): " << std::fixed << std::setprecision(4) << ratio << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"RSK shapes, pattern containment and supersequence bounds for separable "
               "permutations",
               "sepshape"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_flag("--json", g.json, "Structured output");
  app.add_option("--budget", g.budget, "State budget for scs")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for sweeps (0 = all cores)");
  app.add_option("--seed", g.seed, "Seed for sampled sweeps");

  std::string word_text;
  std::string second_text;
  std::size_t count = 0;
  std::optional<std::size_t> depth;
  std::vector<std::string> perm_texts;
  std::string u_text;
  std::string w_text;
  std::string w2_text;
  SweepConfig sweep;
  std::string word_kind = "words";
  std::size_t samples = 0;

  auto* rsk_cmd = app.add_subcommand("rsk", "Insertion and recording tableaux of a word");
  rsk_cmd->add_option("word", word_text, "Word")->required();

  auto* shape_cmd = app.add_subcommand("shape", "RSK shape of a word");
  shape_cmd->add_option("word", word_text, "Word")->required();

  auto* pattern_cmd = app.add_subcommand("pattern", "Find an occurrence of a pattern in a word");
  pattern_cmd->add_option("word", word_text, "Word")->required();
  pattern_cmd->add_option("pattern", second_text, "Permutation pattern")->required();

  auto* separable_cmd = app.add_subcommand("separable", "Test a permutation for separability");
  separable_cmd->add_option("permutation", word_text, "Permutation")->required();

  auto* greene_cmd =
      app.add_subcommand("greene", "Largest total size of d disjoint increasing subsequences");
  greene_cmd->add_option("word", word_text, "Word")->required();
  greene_cmd->add_option("d", count, "Number of subsequences")->required();

  auto* exchange_cmd = app.add_subcommand("exchange", "Exchange two increasing subsequences");
  exchange_cmd->add_option("permutation", word_text, "Separable permutation")->required();
  exchange_cmd->add_option("--u", u_text, "Positions of u (0-based, comma-separated)")->required();
  exchange_cmd->add_option("--w", w_text, "Positions of w")->required();
  exchange_cmd->add_option("--w2", w2_text, "Positions of w2")->required();

  auto* witness_cmd = app.add_subcommand("witness", "Disjoint increasing subsequences of shape lengths");
  witness_cmd->add_option("permutation", word_text, "Separable permutation")->required();
  witness_cmd->add_option("-d", depth, "Number of subsequences (default: number of parts)");

  auto* verify_cmd =
      app.add_subcommand("verify-theorem", "Sweep words for shape-containment violations");
  verify_cmd->add_option("--sigma-len", sweep.sigma_len, "Length of the separable patterns")
      ->capture_default_str();
  verify_cmd->add_option("--word-alphabet", sweep.alphabet, "Alphabet size of the words")
      ->capture_default_str();
  verify_cmd->add_option("--word-len", sweep.word_len, "Length of the words")
      ->capture_default_str();
  verify_cmd->add_option("--words", word_kind, "Word source")
      ->check(CLI::IsMember({"words", "permutations"}))
      ->capture_default_str();
  verify_cmd->add_option("--samples", samples, "Random words instead of all (uses --seed)");

  auto* scs_cmd = app.add_subcommand("scs", "Shortest common supersequence of permutations");
  scs_cmd->add_option("permutations", perm_texts, "Permutations of a common length");

  auto* super_cmd = app.add_subcommand("supersequence-check", "Is a word a supersequence of each permutation");
  super_cmd->add_option("word", word_text, "Word")->required();
  super_cmd->add_option("permutations", perm_texts, "Permutations")->required();

  auto* mu_cmd = app.add_subcommand("mu", "Union of all Ferrers diagrams of size n");
  mu_cmd->add_option("n", count, "Size")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (rsk_cmd->parsed()) return cmd_rsk(g, word_text, out);
    if (shape_cmd->parsed()) return cmd_shape(g, word_text, out);
    if (pattern_cmd->parsed()) return cmd_pattern(g, word_text, second_text, out);
    if (separable_cmd->parsed()) return cmd_separable(g, word_text, out);
    if (greene_cmd->parsed()) return cmd_greene(g, word_text, count, out);
    if (exchange_cmd->parsed()) {
      return cmd_exchange(g, word_text, u_text, w_text, w2_text, out);
    }
    if (witness_cmd->parsed()) return cmd_witness(g, word_text, depth, out);
    if (verify_cmd->parsed()) {
      sweep.source = word_kind == "permutations" ? WordSource::permutations : WordSource::all_words;
      if (verify_cmd->count("--samples") > 0) sweep.samples = samples;
      return cmd_verify(g, sweep, out);
    }
    if (scs_cmd->parsed()) return cmd_scs(g, perm_texts, out);
    if (super_cmd->parsed()) return cmd_supersequence(g, word_text, perm_texts, out);
    if (mu_cmd->parsed()) return cmd_mu(g, count, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace sepshape
