#include "idsem/builtins.hpp"

#include <array>

#include "idsem/symbolic.hpp"

namespace idsem {

bool is_builtin_identity(std::string const& name) {
  return name == "z4" || name == "z4new" || name == "class2" ||
         name == "class3";
}

Identity builtin_identity(std::string const& name) {
  if (name == "z4") {
    return Identity(
        zimin(4),
        parse_word("x1 x2 x1 x2 x1 x3 x1 x4 x1 x3 x1 x2 x1 x2 x1"));
  }
  if (name == "z4new") {
    return Identity(
        zimin(4),
        parse_word("x1 x2 x1 x3 x1 x1 x2 x4 x2 x1 x1 x3 x1 x2 x1"));
  }
  if (name == "class2") {
    return parse_identity("x1 x2 x3 x4 x3 x2 x1 = x3 x2 x1 x4 x1 x2 x3");
  }
  if (name == "class3") {
    return parse_identity(
        "x1 x2 x3 x4 x3 x2 x1 x5 x3 x2 x1 x4 x1 x2 x3 = "
        "x3 x2 x1 x4 x1 x2 x3 x5 x1 x2 x3 x4 x3 x2 x1");
  }
  throw std::invalid_argument("unknown builtin identity: " + name);
}

namespace {

FiniteSemigroup diagonal_semigroup(DiagAlphabet const& alphabet) {
  auto pats = all_patterns(3, alphabet);
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (auto const& p : pats) {
    index[p.str()] = int(names.size());
    names.push_back(p.str());
  }
  size_t n = pats.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<int> star(n);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      std::vector<int> prod(3);
      for (size_t i = 0; i < 3; ++i) {
        prod[i] = pats[a][i] * pats[b][i];
      }
      table[a][b] = index.at(DiagonalPattern(prod).str());
    }
    // Skew transposition reverses the diagonal.
    std::vector<int> rev{pats[a][2], pats[a][1], pats[a][0]};
    star[size_t(a)] = index.at(DiagonalPattern(rev).str());
  }
  return FiniteSemigroup(std::move(names), std::move(table), std::move(star));
}

using Mat2 = std::array<std::array<int, 2>, 2>;

Mat2 mul2(Mat2 const& a, Mat2 const& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    }
  }
  return c;
}

FiniteSemigroup ta21_semigroup() {
  std::vector<std::pair<std::string, Mat2>> elems = {
      {"0", {{{0, 0}, {0, 0}}}},   {"e11", {{{1, 0}, {0, 0}}}},
      {"e12", {{{0, 1}, {0, 0}}}}, {"c10", {{{1, 0}, {1, 0}}}},
      {"c01", {{{0, 1}, {0, 1}}}}, {"i", {{{1, 0}, {0, 1}}}}};
  auto find = [&](Mat2 const& m) {
    for (size_t i = 0; i < elems.size(); ++i) {
      if (elems[i].second == m) {
        return int(i);
      }
    }
    throw std::logic_error("ta21: product left the element set");
  };
  std::vector<std::string> names;
  for (auto const& [name, m] : elems) {
    names.push_back(name);
  }
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (size_t a = 0; a < 6; ++a) {
    for (size_t b = 0; b < 6; ++b) {
      table[a][b] = find(mul2(elems[a].second, elems[b].second));
    }
  }
  // The involution swaps e11 and c01 and fixes the other four matrices.
  std::vector<int> star(6);
  for (size_t a = 0; a < 6; ++a) {
    star[a] = int(a);
  }
  star[1] = 4;
  star[4] = 1;
  return FiniteSemigroup(std::move(names), std::move(table), std::move(star));
}

UpperTri<Int> tri3(std::array<int, 6> upper_row_major) {
  // Order: (0,0) (0,1) (0,2) (1,1) (1,2) (2,2).
  UpperTri<Int> m(3);
  m.at(0, 0) = upper_row_major[0];
  m.at(0, 1) = upper_row_major[1];
  m.at(0, 2) = upper_row_major[2];
  m.at(1, 1) = upper_row_major[3];
  m.at(1, 2) = upper_row_major[4];
  m.at(2, 2) = upper_row_major[5];
  return m;
}

}  // namespace

FiniteSemigroup builtin_semigroup(std::string const& name) {
  if (name == "d3") {
    return diagonal_semigroup(DiagAlphabet::zero_one());
  }
  if (name == "d3pm") {
    return diagonal_semigroup(DiagAlphabet::zero_pm_one());
  }
  if (name == "ta21") {
    return ta21_semigroup();
  }
  if (name == "mquot") {
    return closure_with_ideal(m_quotient_generators(), m_quotient_ideal, 100)
        .semigroup;
  }
  throw std::invalid_argument("unknown builtin semigroup: " + name);
}

std::vector<std::pair<std::string, UpperTri<Int>>> builtin_generators(
    std::string const& name) {
  if (name == "t2") {
    UpperTri<Int> g1(2), g2(2);
    g1.at(0, 0) = 2;
    g1.at(1, 1) = 1;
    g2.at(0, 0) = 2;
    g2.at(0, 1) = 1;
    g2.at(1, 1) = 1;
    return {{"g1", g1}, {"g2", g2}};
  }
  if (name == "zeta") {
    UpperTri<Int> z = tri3({2, 0, 0, 1, 1, 2});
    return {{"z", z}, {"z*", skew_transpose(z)}};
  }
  throw std::invalid_argument("unknown builtin generator set: " + name);
}

std::vector<std::pair<std::string, UpperTri<Int>>> m_quotient_generators() {
  return {{"e", tri3({1, 0, 0, 1, 0, 1})},
          {"x", tri3({1, 0, 0, 0, 0, 1})},
          {"y", tri3({1, 1, 0, 0, 1, 1})}};
}

bool m_quotient_ideal(UpperTri<Int> const& m) { return m.at(0, 2) > 0; }

std::vector<std::pair<std::string, std::string>> m_quotient_to_ta21() {
  return {{"e", "i"},   {"x", "c10"}, {"y", "e12"},
          {"xy", "c01"}, {"yx", "e11"}, {"0", "0"}};
}

}  // namespace idsem
