// Parametrized upper triangular matrices with constrained diagonals and
// entrywise symbolic verification of semigroup identities.

#ifndef IDSEM_SYMBOLIC_HPP_
#define IDSEM_SYMBOLIC_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "idsem/poly.hpp"
#include "idsem/report.hpp"
#include "idsem/upper_tri.hpp"
#include "idsem/words.hpp"

namespace idsem {

// Constant diagonal with entries from {0,1} or {0,1,-1}.
class DiagonalPattern {
 public:
  explicit DiagonalPattern(std::vector<int> entries);

  size_t size() const { return entries_.size(); }
  int operator[](size_t i) const { return entries_[i]; }

  // Digit string with optional sign per position: "101", "1-10".
  static DiagonalPattern parse(std::string const& text);
  std::string str() const;

  friend auto operator<=>(DiagonalPattern const&,
                          DiagonalPattern const&) = default;

 private:
  std::vector<int> entries_;
};

struct DiagAlphabet {
  std::vector<int> values;  // enumeration order of the counter digits

  static DiagAlphabet zero_one() { return {{0, 1}}; }
  static DiagAlphabet zero_pm_one() { return {{0, 1, -1}}; }
  static DiagAlphabet parse(std::string const& name);  // "01" | "0pm1"
  std::string name() const;
};

// All |alphabet|^dim diagonal patterns in counter order (first diagonal
// position is the most significant digit).
std::vector<DiagonalPattern> all_patterns(int dim, DiagAlphabet const& a);

using SymMatrix = UpperTri<Polynomial>;

// Matrix with the given constant diagonal and a distinct variable
// EntryVar(letter, i, j) at each strictly-upper position (1-based).
SymMatrix fresh_symbolic(int dim, DiagonalPattern const& pattern,
                         uint32_t letter);

// Strips the strictly-upper part; diagonals of symbolic products are
// always constant, so this cannot fail on matrices built here.
DiagonalPattern diag_of(SymMatrix const& m);

// Product of the images of the letters, in order. A starred letter maps
// to the skew transpose of the unstarred image. Throws when a letter of
// the word has no image.
template <typename S>
UpperTri<S> eval_word(Word const& w,
                      std::map<uint32_t, UpperTri<S>> const& assignment) {
  std::optional<UpperTri<S>> acc;
  for (auto const& a : w.letters()) {
    auto it = assignment.find(a.index);
    if (it == assignment.end()) {
      throw std::invalid_argument("eval_word: no image for letter x" +
                                  std::to_string(a.index));
    }
    UpperTri<S> m = a.starred ? skew_transpose(it->second) : it->second;
    acc = acc ? *acc * m : m;
  }
  return *acc;
}

struct VerifyOptions {
  uint64_t cap = 1000000;   // combination cap for mixed enumeration
  unsigned workers = 1;
  uint64_t seed = 987654321;  // sampling cross-checks
  int samples = 50;
};

// One sub-check per pattern: every letter of the identity receives a
// fresh symbolic matrix with that same diagonal pattern and the two
// sides are compared entrywise as polynomials. Each sub-check carries a
// numeric sampling cross-check along the rational evaluation route.
CheckReport verify_uniform(int dim, std::vector<DiagonalPattern> const& pats,
                           Identity const& id, VerifyOptions const& opt = {});

// Enumerates all assignments of diagonal patterns to the letters of the
// identity independently; passes iff every combination yields entrywise
// polynomial equality. Aborts when the combination count exceeds the cap.
CheckReport verify_mixed(int dim, DiagAlphabet const& alphabet,
                         Identity const& id, VerifyOptions const& opt = {});

struct NumericWitness {
  // (letter, matrix) by ascending letter index.
  std::vector<std::pair<uint32_t, UpperTri<Int>>> assignment;
  UpperTri<Int> lhs;
  UpperTri<Int> rhs;
};

// Deterministic scan over small-integer matrix assignments (diagonals
// from the allowed patterns, strictly-upper entries from [lo, hi]);
// returns the first assignment, in enumeration order, on which the two
// sides evaluate to different matrices.
std::optional<NumericWitness> find_numeric_counterexample(
    int dim, std::vector<DiagonalPattern> const& allowed, Identity const& id,
    int lo, int hi, VerifyOptions const& opt = {});

Json witness_json(NumericWitness const& w);

// Symbolic check, over all pattern pairs, that stripping the upper part
// commutes with multiplication.
CheckReport diag_hom_check(int dim, DiagAlphabet const& alphabet);

// The corner embedding of 2x2 into 3x3 triangular matrices:
// multiplicativity and skew-transpose compatibility over all pattern
// pairs, plus injectivity of the coordinate map.
CheckReport embedding_check();

Json matrix_json(UpperTri<Polynomial> const& m);
Json matrix_json(UpperTri<Int> const& m);

}  // namespace idsem

#endif  // IDSEM_SYMBOLIC_HPP_
