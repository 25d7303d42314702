#include "doctest.h"

#include <random>

#include "idsem/words.hpp"

using namespace idsem;

namespace {

Word random_word(std::mt19937_64& rng, size_t max_len = 10,
                 uint32_t max_letter = 4, bool stars = false) {
  size_t len = 1 + rng() % max_len;
  std::vector<Letter> letters;
  for (size_t i = 0; i < len; ++i) {
    letters.push_back(
        Letter{uint32_t(rng() % max_letter) + 1, stars && rng() % 2 == 0});
  }
  return Word(std::move(letters));
}

}  // namespace

TEST_CASE("zimin words") {
  CHECK(print_word(zimin(1)) == "x1");
  CHECK(print_word(zimin(3)) == "x1 x2 x1 x3 x1 x2 x1");
  CHECK_THROWS_AS(zimin(0), std::invalid_argument);

  Word z4 = zimin(4);
  CHECK(z4.size() == 15);
  auto st = occurrence_stats(z4);
  CHECK(st.letter_counts.at(Letter{1}) == 8);
  CHECK(st.letter_counts.at(Letter{2}) == 4);
  CHECK(st.letter_counts.at(Letter{3}) == 2);
  CHECK(st.letter_counts.at(Letter{4}) == 1);

  for (uint32_t n = 1; n <= 20; ++n) {
    CHECK(zimin(n).size() == (size_t(1) << n) - 1);
  }
  // x_k occurs exactly 2^(n-k) times in Z_n.
  auto st20 = occurrence_stats(zimin(20));
  for (uint32_t k = 1; k <= 20; ++k) {
    CHECK(st20.letter_counts.at(Letter{k}) == (size_t(1) << (20 - k)));
  }
}

TEST_CASE("star_of reverses and toggles") {
  CHECK(print_word(star_of(parse_word("x1 x2"))) == "x2* x1*");
  CHECK(print_word(star_of(parse_word("x1*"))) == "x1");

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Word u = random_word(rng, 8, 3, true);
    Word v = random_word(rng, 8, 3, true);
    CHECK(star_of(star_of(u)) == u);
    CHECK(star_of(u * v) == star_of(v) * star_of(u));
  }
}

TEST_CASE("substitution") {
  // x y x with x -> x1, y -> x1 x2 x1.
  std::map<uint32_t, Word> sigma{{1, parse_word("x1")},
                                 {2, parse_word("x1 x2 x1")}};
  CHECK(print_word(substitute(parse_word("x1 x2 x1"), sigma)) ==
        "x1 x1 x2 x1 x1");

  // x z y t y z x with x -> x1, z -> x3, y -> x1x2x1, t -> x4.
  std::map<uint32_t, Word> case8{{1, parse_word("x1")},
                                 {2, parse_word("x3")},
                                 {3, parse_word("x1 x2 x1")},
                                 {4, parse_word("x4")}};
  CHECK(print_word(substitute(parse_word("x1 x2 x3 x4 x3 x2 x1"), case8)) ==
        "x1 x3 x1 x2 x1 x4 x1 x2 x1 x3 x1");

  std::mt19937_64 rng(11);
  std::map<uint32_t, Word> identity_sub;
  for (uint32_t i = 1; i <= 4; ++i) {
    identity_sub.emplace(i, Word({Letter{i}}));
  }
  for (int i = 0; i < 30; ++i) {
    Word u = random_word(rng);
    CHECK(substitute(u, identity_sub) == u);
    Word v = random_word(rng);
    // Distributes over concatenation.
    CHECK(substitute(u * v, case8) ==
          substitute(u, case8) * substitute(v, case8));
  }
  CHECK_THROWS_AS(substitute(parse_word("x9"), sigma), std::invalid_argument);

  // A starred occurrence maps to the star of the image.
  std::map<uint32_t, Word> sub{{1, parse_word("x1 x2")}};
  CHECK(print_word(substitute(parse_word("x1*"), sub)) == "x2* x1*");
}

TEST_CASE("occurrence statistics") {
  Word z4 = zimin(4);
  auto st = occurrence_stats(z4);
  CHECK(st.first == Letter{1});
  CHECK(st.last == Letter{1});
  auto pair = [](uint32_t a, uint32_t b) {
    return std::pair{Letter{a}, Letter{b}};
  };
  CHECK(st.pair_counts.at(pair(1, 2)) == 4);
  CHECK(st.pair_counts.at(pair(2, 1)) == 4);
  CHECK(st.pair_counts.at(pair(1, 3)) == 2);
  CHECK(st.pair_counts.at(pair(3, 1)) == 2);
  CHECK(st.pair_counts.at(pair(1, 4)) == 1);
  CHECK(st.pair_counts.at(pair(4, 1)) == 1);
  CHECK(st.pair_counts.size() == 6);

  // The right side of z4 has identical statistics.
  auto st2 = occurrence_stats(
      parse_word("x1 x2 x1 x2 x1 x3 x1 x4 x1 x3 x1 x2 x1 x2 x1"));
  CHECK(st2.letter_counts == st.letter_counts);
  CHECK(st2.pair_counts == st.pair_counts);
  CHECK(st2.first == st.first);
  CHECK(st2.last == st.last);

  auto single = occurrence_stats(parse_word("x1"));
  CHECK(single.first == Letter{1});
  CHECK(single.last == Letter{1});
  CHECK(single.letter_counts.size() == 1);
  CHECK(single.pair_counts.empty());

  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    Word u = random_word(rng, 12, 4, true);
    auto s = occurrence_stats(u);
    size_t letter_sum = 0, pair_sum = 0;
    for (auto const& [a, c] : s.letter_counts) {
      letter_sum += c;
    }
    for (auto const& [p, c] : s.pair_counts) {
      pair_sum += c;
    }
    CHECK(letter_sum == u.size());
    CHECK(pair_sum == u.size() - 1);
  }
}

TEST_CASE("balanced identities") {
  Identity z4(zimin(4),
              parse_word("x1 x2 x1 x2 x1 x3 x1 x4 x1 x3 x1 x2 x1 x2 x1"));
  CHECK(is_balanced(z4));
  CHECK(is_balanced(parse_identity("x1 x2 = x2 x1")));
  CHECK_FALSE(is_balanced(parse_identity("x1 x2 x3 = x2 x3")));
  // Starred and unstarred occurrences count separately.
  CHECK_FALSE(is_balanced(parse_identity("x1 x1* = x1 x1")));
}

TEST_CASE("identity parsing and printing") {
  Identity id = parse_identity("x1 x2 x1 = x1 x1 x2");
  CHECK(id.lhs == parse_word("x1 x2 x1"));
  CHECK_FALSE(id.involutory);
  CHECK(print_identity(id) == "x1 x2 x1 = x1 x1 x2");

  Identity inv = parse_identity("x1* x2 = x2 x1*");
  CHECK(inv.involutory);
  CHECK(print_identity(inv) == "x1* x2 = x2 x1*");

  CHECK_THROWS_AS(parse_identity("x1 = "), ParseError);
  CHECK_THROWS_AS(parse_identity(" = x1"), ParseError);
  CHECK_THROWS_AS(parse_identity("x1 x2"), ParseError);
  CHECK_THROWS_AS(parse_identity("x1 = x2 = x3"), ParseError);
  CHECK_THROWS_AS(parse_identity("y1 = x1"), ParseError);
  CHECK_THROWS_AS(parse_identity("x0 = x1"), ParseError);
  CHECK_THROWS_AS(parse_identity("x1** = x1"), ParseError);
  try {
    parse_identity("x1 q2 = x1");
    CHECK(false);
  } catch (ParseError const& e) {
    CHECK(e.pos == 3);
  }

  // Starred letters without the involutory flag are rejected.
  CHECK_THROWS_AS(Identity(parse_word("x1*"), parse_word("x1"), false),
                  std::invalid_argument);

  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    Word u = random_word(rng, 10, 5, true);
    Word v = random_word(rng, 10, 5, true);
    Identity random_id(u, v, true);
    CHECK(print_identity(parse_identity(print_identity(random_id))) ==
          print_identity(random_id));
  }
}

TEST_CASE("words are ordered values") {
  CHECK(parse_word("x1 x2") == parse_word("x1 x2"));
  CHECK(parse_word("x1") != parse_word("x1*"));
  CHECK(parse_word("x1 x2").letter_indices() == std::vector<uint32_t>{1, 2});
  CHECK(parse_word("x3 x1* x3").letter_indices() ==
        std::vector<uint32_t>{1, 3});
}
