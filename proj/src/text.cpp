#include "sepshape/text.hpp"

#include <charconv>
#include <limits>

namespace sepshape {

namespace {

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

char digit_char(Letter v) {
  return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + (v - 10));
}

bool has_separator(std::string_view text) {
  for (char c : text) {
    if (is_separator(c)) return true;
  }
  return false;
}

std::vector<unsigned long long> parse_integers(std::string_view text, std::string_view what) {
  std::vector<unsigned long long> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    const std::string_view token = text.substr(i, j - i);
    unsigned long long value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
      throw InvalidInput("malformed " + std::string(what) + " token '" + std::string(token) +
                         "' (separated form takes decimal integers only)");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

std::string join(const std::vector<unsigned long long>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  if (!has_separator(text)) {
    letters.reserve(text.size());
    for (char c : text) {
      const int v = digit_value(c);
      if (v < 0) {
        throw InvalidInput(std::string("invalid letter '") + c +
                           "' in compact word (use 0-9 and a-z)");
      }
      letters.push_back(static_cast<Letter>(v));
    }
    return Word(std::move(letters));
  }
  for (unsigned long long v : parse_integers(text, "word")) {
    if (v > std::numeric_limits<Letter>::max()) throw InvalidInput("letter out of range");
    letters.push_back(static_cast<Letter>(v));
  }
  return Word(std::move(letters));
}

Permutation parse_permutation(std::string_view text) {
  return Permutation(parse_word(text).letters());
}

Partition parse_partition(std::string_view text) {
  std::vector<std::size_t> parts;
  for (unsigned long long v : parse_integers(text, "partition")) {
    if (v == 0) throw InvalidInput("partition parts must be positive");
    parts.push_back(static_cast<std::size_t>(v));
  }
  return Partition(std::move(parts));
}

std::vector<std::size_t> parse_positions(std::string_view text) {
  std::vector<std::size_t> out;
  for (unsigned long long v : parse_integers(text, "position")) {
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::string format_word(const Word& w) {
  bool compact = true;
  for (Letter v : w) compact = compact && v <= 35;
  if (compact) {
    std::string out;
    out.reserve(w.size());
    for (Letter v : w) out += digit_char(v);
    return out;
  }
  // A lone letter needs a separator or it would read back as compact digits.
  std::string out = join(std::vector<unsigned long long>(w.begin(), w.end()));
  if (w.size() == 1) out += ',';
  return out;
}

std::string format_permutation(const Permutation& p) { return format_word(p.display_word()); }

std::string format_partition(const Partition& p) {
  return join(std::vector<unsigned long long>(p.parts().begin(), p.parts().end()));
}

std::string format_positions(const std::vector<std::size_t>& positions) {
  return join(std::vector<unsigned long long>(positions.begin(), positions.end()));
}

std::string format_tableau(const Tableau& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace sepshape
