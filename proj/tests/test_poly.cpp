#include "doctest.h"

#include <random>

#include "idsem/poly.hpp"

using namespace idsem;

namespace {

EntryVar const X{1, 1, 2};

Polynomial random_poly(std::mt19937_64& rng) {
  // Up to 8 terms over 6 variables, degree <= 4, coefficients in [-9, 9].
  std::vector<EntryVar> vars{{1, 1, 2}, {1, 1, 3}, {1, 2, 3},
                             {2, 1, 2}, {2, 1, 3}, {2, 2, 3}};
  Polynomial p;
  size_t terms = 1 + rng() % 8;
  for (size_t t = 0; t < terms; ++t) {
    Polynomial m = Polynomial::constant(int(rng() % 19) - 9);
    size_t deg = rng() % 5;
    for (size_t d = 0; d < deg; ++d) {
      m = m * Polynomial::var(vars[rng() % vars.size()]);
    }
    p += m;
  }
  return p;
}

Rational random_point_value(std::mt19937_64& rng) {
  return Rational(int(rng() % 19) - 9, int(rng() % 4) + 1);
}

std::map<EntryVar, Rational> random_point(Polynomial const& p,
                                          Polynomial const& q,
                                          std::mt19937_64& rng) {
  std::map<EntryVar, Rational> pt;
  for (auto v : p.variables()) {
    pt.emplace(v, random_point_value(rng));
  }
  for (auto v : q.variables()) {
    pt.emplace(v, random_point_value(rng));
  }
  return pt;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  Polynomial x = Polynomial::var(X);
  Polynomial one = Polynomial::constant(1);
  Polynomial p = (x + one) * (x - one);
  CHECK(p == x * x - one);
  CHECK(p.str() == "-1 + x1_12^2");

  // a + (-a) is the zero polynomial with an empty term map.
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    Polynomial q = random_poly(rng);
    CHECK((q + (-q)).is_zero());
    CHECK((q - q).terms().empty());
  }

  // 8*a13 + 4*b13 assembled by repeated addition.
  Polynomial sum;
  for (int i = 0; i < 8; ++i) {
    sum += Polynomial::var(EntryVar{1, 1, 3});
  }
  for (int i = 0; i < 4; ++i) {
    sum += Polynomial::var(EntryVar{2, 1, 3});
  }
  CHECK(sum.terms().size() == 2);
  CHECK(sum.str() == "8*x1_13 + 4*x2_13");
  CHECK(sum == Polynomial::constant(8) * Polynomial::var(EntryVar{1, 1, 3}) +
                   Polynomial::constant(4) * Polynomial::var(EntryVar{2, 1, 3}));
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * Polynomial::constant(1) == a);
    CHECK((a * Polynomial::constant(0)).is_zero());
  }
}

TEST_CASE("exact evaluation") {
  Polynomial x = Polynomial::var(X);
  Polynomial p = x * x - Polynomial::constant(1);
  CHECK(p.eval({{X, Rational(3)}}) == Rational(8));
  CHECK(Polynomial().eval({}) == Rational(0));
  CHECK_THROWS_AS(p.eval({}), std::invalid_argument);

  // The 15-letter product entry over the (1,0,1) class, all entries 1:
  // 8 + 4 + 2 + 1 + (4 + 2 + 1) + (4 + 2 + 1) = 29.
  auto var = [](uint32_t l, uint32_t r, uint32_t c) {
    return Polynomial::var(EntryVar{l, r, c});
  };
  Polynomial eps =
      Polynomial::constant(8) * var(1, 1, 3) +
      Polynomial::constant(4) * var(2, 1, 3) +
      Polynomial::constant(2) * var(3, 1, 3) + var(4, 1, 3) +
      var(1, 1, 2) * (Polynomial::constant(4) * var(2, 2, 3) +
                      Polynomial::constant(2) * var(3, 2, 3) + var(4, 2, 3)) +
      (Polynomial::constant(4) * var(2, 1, 2) +
       Polynomial::constant(2) * var(3, 1, 2) + var(4, 1, 2)) *
          var(1, 2, 3);
  std::map<EntryVar, Rational> ones;
  for (auto v : eps.variables()) {
    ones.emplace(v, Rational(1));
  }
  CHECK(eps.eval(ones) == Rational(29));

  std::map<EntryVar, Int> ones_int;
  for (auto v : eps.variables()) {
    ones_int.emplace(v, Int(1));
  }
  CHECK(eps.eval_int(ones_int) == Int(29));
}

TEST_CASE("structural equality matches evaluation") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    Polynomial a = random_poly(rng), b = random_poly(rng);
    if (a == b) {
      for (int s = 0; s < 20; ++s) {
        auto pt = random_point(a, b, rng);
        CHECK(a.eval(pt) == b.eval(pt));
      }
    } else {
      // Cross-validation only: unequal polynomials should differ at one
      // of 20 random points with overwhelming probability.
      bool differ = false;
      for (int s = 0; s < 20 && !differ; ++s) {
        auto pt = random_point(a, b, rng);
        differ = a.eval(pt) != b.eval(pt);
      }
      CHECK(differ);
    }
    // Equal-by-construction pair.
    Polynomial c = a * b + b;
    Polynomial d = (a + Polynomial::constant(1)) * b;
    CHECK(c == d);
  }
}

TEST_CASE("canonical ordering is graded lexicographic") {
  auto var = [](uint32_t l, uint32_t r, uint32_t c) {
    return Polynomial::var(EntryVar{l, r, c});
  };
  Polynomial p = var(1, 2, 3) * var(2, 1, 2) + var(1, 1, 2) +
                 Polynomial::constant(5) + var(1, 1, 2) * var(1, 1, 2);
  // Constant first, then degree 1, then the degree-2 terms ordered by
  // their variable sequences.
  CHECK(p.str() == "5 + x1_12 + x1_12^2 + x1_23*x2_12");

  CHECK(Polynomial().str() == "0");
  CHECK((-Polynomial::constant(1)).str() == "-1");
  CHECK((var(1, 1, 2) - Polynomial::constant(2)).str() == "-2 + x1_12");
}

TEST_CASE("arbitrary precision coefficients") {
  Polynomial x = Polynomial::var(X);
  Polynomial p = Polynomial::constant(1);
  for (int i = 0; i < 40; ++i) {
    p = p * (Polynomial::constant(1000000) * x);
  }
  // 10^240 does not overflow.
  CHECK(p.terms().size() == 1);
  CHECK(p.terms().front().second == boost::multiprecision::pow(Int(10), 240));
}
