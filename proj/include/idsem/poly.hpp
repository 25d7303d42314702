// Exact multivariate polynomials over the integers, the value domain of
// all symbolic matrix entries. Canonical form: terms sorted in graded
// lexicographic order on the variables (letter, row, col), no zero
// coefficients stored.

#ifndef IDSEM_POLY_HPP_
#define IDSEM_POLY_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace idsem {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Symbolic strictly-upper matrix entry: row < col, both 1-based.
struct EntryVar {
  uint32_t letter;
  uint32_t row;
  uint32_t col;

  friend auto operator<=>(EntryVar const&, EntryVar const&) = default;
};

std::string print_var(EntryVar v);

// Product of variables with positive exponents, kept sorted by variable.
class Monomial {
 public:
  Monomial() = default;  // the empty product (constant term)
  explicit Monomial(EntryVar v) : factors_{{v, 1}} {}

  std::vector<std::pair<EntryVar, uint32_t>> const& factors() const {
    return factors_;
  }
  uint32_t degree() const;
  bool is_constant() const { return factors_.empty(); }

  static Monomial merged(Monomial const& a, Monomial const& b);

  friend bool operator==(Monomial const&, Monomial const&) = default;
  // Graded lexicographic: lower total degree first, ties broken by the
  // flattened variable sequence.
  static bool less(Monomial const& a, Monomial const& b);

 private:
  std::vector<std::pair<EntryVar, uint32_t>> factors_;
};

class Polynomial {
 public:
  Polynomial() = default;  // zero
  static Polynomial constant(Int c);
  static Polynomial var(EntryVar v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Int constant_value() const;  // requires is_constant()

  std::vector<std::pair<Monomial, Int>> const& terms() const {
    return terms_;
  }
  std::vector<EntryVar> variables() const;

  Polynomial& operator+=(Polynomial const& o);
  Polynomial& operator-=(Polynomial const& o);
  friend Polynomial operator+(Polynomial a, Polynomial const& b);
  friend Polynomial operator-(Polynomial a, Polynomial const& b);
  friend Polynomial operator-(Polynomial const& a);
  friend Polynomial operator*(Polynomial const& a, Polynomial const& b);
  friend Polynomial operator*(Int const& c, Polynomial const& p);

  friend bool operator==(Polynomial const&, Polynomial const&) = default;

  // Exact value at a point; throws std::invalid_argument when the
  // assignment misses a variable of the polynomial.
  Rational eval(std::map<EntryVar, Rational> const& assignment) const;
  Int eval_int(std::map<EntryVar, Int> const& assignment) const;

  std::string str() const;

 private:
  // Sorted by Monomial::less; coefficients never zero.
  std::vector<std::pair<Monomial, Int>> terms_;
};

}  // namespace idsem

#endif  // IDSEM_POLY_HPP_
