// Words over an indexed alphabet with optional involution stars, Zimin
// words, substitution, and occurrence statistics.

#ifndef IDSEM_WORDS_HPP_
#define IDSEM_WORDS_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace idsem {

// A letter x_index, optionally carrying the formal involution star.
struct Letter {
  uint32_t index;   // >= 1
  bool starred = false;

  friend auto operator<=>(Letter const&, Letter const&) = default;
};

// Nonempty sequence of letters; an element of a free (involution)
// semigroup, so the empty word is not representable.
class Word {
 public:
  explicit Word(std::vector<Letter> letters);

  size_t size() const noexcept { return letters_.size(); }
  Letter const& operator[](size_t i) const { return letters_[i]; }
  std::vector<Letter> const& letters() const noexcept { return letters_; }

  bool has_star() const noexcept;
  // Distinct unstarred letter indices, ascending.
  std::vector<uint32_t> letter_indices() const;

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const&, Word const&) = default;
  friend Word operator*(Word const& u, Word const& v);  // concatenation

 private:
  std::vector<Letter> letters_;
};

// A pair of words read as the identity lhs = rhs. When involutory is
// false neither side may contain a starred letter.
struct Identity {
  Word lhs;
  Word rhs;
  bool involutory = false;

  Identity(Word l, Word r, bool inv = false);

  bool trivial() const { return lhs == rhs; }
};

// Z_1 = x1, Z_{n+1} = Z_n x_{n+1} Z_n. |Z_n| = 2^n - 1.
Word zimin(uint32_t n);

// (a_1 ... a_m)* = a_m* ... a_1*: reverse and toggle every star flag.
Word star_of(Word const& w);
Letter star_of(Letter a);

// Replaces every letter by its image; a starred occurrence of x_i maps
// to star_of(sigma(i)). Throws std::invalid_argument when sigma misses
// an occurring letter.
Word substitute(Word const& w, std::map<uint32_t, Word> const& sigma);

// Letter counts, adjacent ordered-pair counts, first and last letter.
// Starred and unstarred occurrences are counted as distinct symbols.
struct OccurrenceStats {
  std::map<Letter, size_t> letter_counts;
  std::map<std::pair<Letter, Letter>, size_t> pair_counts;
  Letter first;
  Letter last;
};
OccurrenceStats occurrence_stats(Word const& w);

// True iff both sides have identical letter counts.
bool is_balanced(Identity const& id);

struct ParseError : std::runtime_error {
  ParseError(std::string const& msg, size_t position);
  size_t pos;
};

// Grammar: side = token (ws token)*, token = 'x' digits ['*'], sides
// separated by '='. Round-trips through print_identity.
Identity parse_identity(std::string const& text);
Word parse_word(std::string const& text);

std::string print_letter(Letter a);
std::string print_word(Word const& w);
std::string print_identity(Identity const& id);

}  // namespace idsem

#endif  // IDSEM_WORDS_HPP_
