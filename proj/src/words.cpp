#include "idsem/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace idsem {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw std::invalid_argument("Word: empty letter sequence");
  }
  for (auto const& a : letters_) {
    if (a.index == 0) {
      throw std::invalid_argument("Word: letter index must be >= 1");
    }
  }
}

bool Word::has_star() const noexcept {
  return std::any_of(letters_.begin(), letters_.end(),
                     [](Letter const& a) { return a.starred; });
}

std::vector<uint32_t> Word::letter_indices() const {
  std::set<uint32_t> seen;
  for (auto const& a : letters_) {
    seen.insert(a.index);
  }
  return {seen.begin(), seen.end()};
}

Word operator*(Word const& u, Word const& v) {
  std::vector<Letter> cat = u.letters();
  cat.insert(cat.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(cat));
}

Identity::Identity(Word l, Word r, bool inv)
    : lhs(std::move(l)), rhs(std::move(r)), involutory(inv) {
  if (!involutory && (lhs.has_star() || rhs.has_star())) {
    throw std::invalid_argument(
        "Identity: starred letters require the involutory flag");
  }
}

Word zimin(uint32_t n) {
  if (n == 0) {
    throw std::invalid_argument("zimin: n must be >= 1");
  }
  std::vector<Letter> w{Letter{1}};
  for (uint32_t k = 2; k <= n; ++k) {
    std::vector<Letter> next = w;
    next.push_back(Letter{k});
    next.insert(next.end(), w.begin(), w.end());
    w = std::move(next);
  }
  return Word(std::move(w));
}

Letter star_of(Letter a) { return Letter{a.index, !a.starred}; }

Word star_of(Word const& w) {
  std::vector<Letter> rev(w.letters().rbegin(), w.letters().rend());
  for (auto& a : rev) {
    a.starred = !a.starred;
  }
  return Word(std::move(rev));
}

Word substitute(Word const& w, std::map<uint32_t, Word> const& sigma) {
  std::vector<Letter> out;
  for (auto const& a : w.letters()) {
    auto it = sigma.find(a.index);
    if (it == sigma.end()) {
      throw std::invalid_argument("substitute: no image for letter x" +
                                  std::to_string(a.index));
    }
    Word img = a.starred ? star_of(it->second) : it->second;
    out.insert(out.end(), img.letters().begin(), img.letters().end());
  }
  return Word(std::move(out));
}

OccurrenceStats occurrence_stats(Word const& w) {
  OccurrenceStats st{{}, {}, w[0], w[w.size() - 1]};
  for (size_t i = 0; i < w.size(); ++i) {
    ++st.letter_counts[w[i]];
    if (i + 1 < w.size()) {
      ++st.pair_counts[{w[i], w[i + 1]}];
    }
  }
  return st;
}

bool is_balanced(Identity const& id) {
  return occurrence_stats(id.lhs).letter_counts ==
         occurrence_stats(id.rhs).letter_counts;
}

ParseError::ParseError(std::string const& msg, size_t position)
    : std::runtime_error(msg + " (at position " + std::to_string(position) +
                         ")"),
      pos(position) {}

namespace {

std::vector<Letter> parse_side(std::string const& text, size_t begin,
                               size_t end, char const* side_name) {
  std::vector<Letter> letters;
  size_t i = begin;
  while (i < end) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != 'x') {
      throw ParseError("expected 'x'", i);
    }
    size_t j = i + 1;
    while (j < end && std::isdigit(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j == i + 1) {
      throw ParseError("expected digits after 'x'", j);
    }
    uint32_t index = 0;
    try {
      index = static_cast<uint32_t>(std::stoul(text.substr(i + 1, j - i - 1)));
    } catch (std::out_of_range const&) {
      throw ParseError("letter index out of range", i + 1);
    }
    if (index == 0) {
      throw ParseError("letter index must be >= 1", i + 1);
    }
    bool starred = false;
    if (j < end && text[j] == '*') {
      starred = true;
      ++j;
    }
    if (j < end && !std::isspace(static_cast<unsigned char>(text[j]))) {
      throw ParseError("unexpected character in token", j);
    }
    letters.push_back(Letter{index, starred});
    i = j;
  }
  if (letters.empty()) {
    throw ParseError(std::string("empty ") + side_name + " side", begin);
  }
  return letters;
}

}  // namespace

Word parse_word(std::string const& text) {
  return Word(parse_side(text, 0, text.size(), "word"));
}

Identity parse_identity(std::string const& text) {
  size_t eq = text.find('=');
  if (eq == std::string::npos) {
    throw ParseError("missing '='", text.size());
  }
  if (text.find('=', eq + 1) != std::string::npos) {
    throw ParseError("more than one '='", text.find('=', eq + 1));
  }
  Word lhs(parse_side(text, 0, eq, "left"));
  Word rhs(parse_side(text, eq + 1, text.size(), "right"));
  bool inv = lhs.has_star() || rhs.has_star();
  return Identity(std::move(lhs), std::move(rhs), inv);
}

std::string print_letter(Letter a) {
  std::string s = "x" + std::to_string(a.index);
  if (a.starred) {
    s += '*';
  }
  return s;
}

std::string print_word(Word const& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      s += ' ';
    }
    s += print_letter(w[i]);
  }
  return s;
}

std::string print_identity(Identity const& id) {
  return print_word(id.lhs) + " = " + print_word(id.rhs);
}

}  // namespace idsem
