#include "doctest.h"

#include <set>
#include <array>
#include <random>
#include <sstream>

#include "idsem/builtins.hpp"
#include "idsem/finite_semigroup.hpp"

using namespace idsem;

TEST_CASE("d3 is the commutative idempotent diagonal semigroup") {
  FiniteSemigroup d3 = builtin_semigroup("d3");
  CHECK(d3.size() == 8);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      CHECK(d3.mul(a, b) == d3.mul(b, a));
    }
  }
  CHECK(d3.idempotents().size() == 8);
  CHECK(d3.has_star());
  // The star reverses the diagonal: 100 <-> 001.
  CHECK(d3.star(d3.index_of("100")) == d3.index_of("001"));
  CHECK(d3.star(d3.index_of("010")) == d3.index_of("010"));
}

TEST_CASE("ta21 validates as an involution semigroup") {
  FiniteSemigroup t = builtin_semigroup("ta21");
  CHECK(t.size() == 6);
  CHECK(t.has_star());
  CHECK(t.star(t.index_of("e11")) == t.index_of("c01"));
  CHECK(t.star(t.index_of("c01")) == t.index_of("e11"));
  CHECK(t.star(t.index_of("e12")) == t.index_of("e12"));
  CHECK(t.star(t.index_of("0")) == t.index_of("0"));

  // Idempotents recomputed independently from the defining matrices.
  using Mat2 = std::array<std::array<int, 2>, 2>;
  std::vector<std::pair<std::string, Mat2>> mats = {
      {"0", {{{0, 0}, {0, 0}}}},   {"e11", {{{1, 0}, {0, 0}}}},
      {"e12", {{{0, 1}, {0, 0}}}}, {"c10", {{{1, 0}, {1, 0}}}},
      {"c01", {{{0, 1}, {0, 1}}}}, {"i", {{{1, 0}, {0, 1}}}}};
  std::set<std::string> expected;
  for (auto const& [name, m] : mats) {
    Mat2 sq{};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        sq[size_t(i)][size_t(j)] =
            m[size_t(i)][0] * m[0][size_t(j)] + m[size_t(i)][1] * m[1][size_t(j)];
      }
    }
    if (sq == m) {
      expected.insert(name);
    }
  }
  CHECK(expected ==
        std::set<std::string>{"0", "e11", "c10", "c01", "i"});  // not e12
  std::set<std::string> got;
  for (int e : t.idempotents()) {
    got.insert(t.name(e));
  }
  CHECK(got == expected);
}

TEST_CASE("d3pm has exactly eight idempotents") {
  FiniteSemigroup d = builtin_semigroup("d3pm");
  CHECK(d.size() == 27);
  auto idem = d.idempotents();
  CHECK(idem.size() == 8);
  for (int e : idem) {
    // Idempotent diagonals have no -1 entries.
    CHECK(d.name(e).find('-') == std::string::npos);
  }
}

TEST_CASE("construction rejects broken tables") {
  // a(ab) != (aa)b.
  CHECK_THROWS_WITH_AS(
      FiniteSemigroup({"a", "b"}, {{0, 0}, {1, 0}}, std::nullopt),
      doctest::Contains("associativity"), std::invalid_argument);
  // Left zero semigroup is associative but this star is not an
  // anti-automorphism.
  CHECK_THROWS_WITH_AS(
      FiniteSemigroup({"a", "b"}, {{0, 0}, {1, 1}},
                      std::vector<int>{1, 0}),
      doctest::Contains("anti-automorphism"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteSemigroup({"a"}, {{0}, {0}}, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteSemigroup({"a", "a"}, {{0, 0}, {0, 0}}, std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("holds on the diagonal semigroup") {
  FiniteSemigroup d3 = builtin_semigroup("d3");
  CHECK(holds(d3, parse_identity("x1 x2 = x2 x1")).status == Status::pass);
  CHECK(holds(d3, parse_identity("x1 x1 = x1")).status == Status::pass);
  CHECK(holds(d3, parse_identity("x1 x2 = x1")).status == Status::fail);
}

TEST_CASE("z4 fails on ta21 with a checkable witness") {
  FiniteSemigroup t = builtin_semigroup("ta21");
  Identity z4 = builtin_identity("z4");
  CheckReport r = holds(t, z4);
  CHECK(r.status == Status::fail);
  REQUIRE(!r.witness.is_null());
  // Re-evaluate the witness by hand through the Cayley table.
  std::map<uint32_t, int> asg;
  for (auto const& e : r.witness.at("assignment")) {
    asg[e.at("letter").get<uint32_t>()] = t.index_of(e.at("element"));
  }
  auto eval = [&](Word const& w) {
    int acc = -1;
    for (auto const& a : w.letters()) {
      int e = asg.at(a.index);
      acc = acc < 0 ? e : t.mul(acc, e);
    }
    return acc;
  };
  CHECK(eval(z4.lhs) != eval(z4.rhs));
  CHECK(t.name(eval(z4.lhs)) == r.witness.at("lhs").get<std::string>());

  // Witness selection is by enumeration index, not completion order.
  CheckReport r4 = holds(t, z4, 4);
  CHECK(r4.witness == r.witness);
}

TEST_CASE("holds respects involutory identities") {
  FiniteSemigroup t = builtin_semigroup("ta21");
  // (x y)* = y* x* holds in every involution semigroup.
  CHECK(holds(t, parse_identity("x2* x1* = x2* x1*")).status == Status::pass);
  FiniteSemigroup starless({"a"}, {{0}}, std::nullopt);
  CHECK_THROWS_AS(holds(starless, parse_identity("x1* = x1")),
                  std::invalid_argument);
}

TEST_CASE("trivial identities hold everywhere") {
  std::mt19937_64 rng(43);
  for (auto const& name : {"d3", "ta21", "mquot"}) {
    FiniteSemigroup s = builtin_semigroup(name);
    for (int i = 0; i < 5; ++i) {
      size_t len = 1 + rng() % 6;
      std::vector<Letter> letters;
      for (size_t j = 0; j < len; ++j) {
        letters.push_back(Letter{uint32_t(rng() % 3) + 1, rng() % 2 == 0});
      }
      Word u(letters);
      CHECK(holds(s, Identity(u, u, true)).status == Status::pass);
    }
  }
}

TEST_CASE("holds is invariant under letter renaming") {
  FiniteSemigroup t = builtin_semigroup("ta21");
  Identity a = parse_identity("x1 x2 x1 = x1 x1 x2");
  Identity b = parse_identity("x5 x9 x5 = x5 x5 x9");
  CHECK(holds(t, a).status == holds(t, b).status);
  Identity c = parse_identity("x1 x2 = x2 x1");
  Identity d = parse_identity("x7 x3 = x3 x7");
  CHECK(holds(t, c).status == holds(t, d).status);
}

TEST_CASE("closure with ideal reproduces the six-element quotient") {
  MatrixClosure closure =
      closure_with_ideal(m_quotient_generators(), m_quotient_ideal, 100);
  auto const& Q = closure.semigroup;
  CHECK(Q.size() == 6);
  CHECK(closure.sink == 5);
  CHECK(Q.name(closure.sink) == "0");
  std::set<std::string> names;
  for (size_t i = 0; i < Q.size(); ++i) {
    names.insert(Q.name(int(i)));
  }
  CHECK(names == std::set<std::string>{"e", "x", "y", "xy", "yx", "0"});
  // Star closure: the skew transpose of xy is yx.
  CHECK(Q.star(Q.index_of("xy")) == Q.index_of("yx"));
  CHECK(Q.star(Q.index_of("e")) == Q.index_of("e"));
}

TEST_CASE("closure reports free growth via the cap") {
  CHECK_THROWS_AS(closure_with_ideal(
                      builtin_generators("zeta"),
                      [](UpperTri<Int> const&) { return false; }, 50),
                  ClosureCapExceeded);
}

TEST_CASE("closure rejects a non-ideal predicate") {
  // Entry (1,2) == 1 is not closed under multiplication.
  UpperTri<Int> g(2);
  g.at(0, 0) = 1;
  g.at(0, 1) = 1;
  g.at(1, 1) = 1;
  CHECK_THROWS_AS(
      closure_with_ideal({{"g", g}},
                         [](UpperTri<Int> const& m) { return m.at(0, 1) == 1; },
                         50),
      std::logic_error);
}

TEST_CASE("isomorphism onto ta21") {
  FiniteSemigroup Q = builtin_semigroup("mquot");
  FiniteSemigroup T = builtin_semigroup("ta21");
  std::vector<int> map(Q.size());
  for (auto const& [from, to] : m_quotient_to_ta21()) {
    map[size_t(Q.index_of(from))] = T.index_of(to);
  }
  CHECK(check_iso(Q, T, map).status == Status::pass);

  // Swapping the images of x and y breaks multiplicativity.
  std::vector<int> swapped = map;
  std::swap(swapped[size_t(Q.index_of("x"))], swapped[size_t(Q.index_of("y"))]);
  CheckReport bad = check_iso(Q, T, swapped);
  CHECK(bad.status == Status::fail);
  CHECK(!bad.witness.is_null());

  // The identity map on d3 is an automorphism.
  FiniteSemigroup d3 = builtin_semigroup("d3");
  std::vector<int> ident(d3.size());
  for (size_t i = 0; i < d3.size(); ++i) {
    ident[i] = int(i);
  }
  CHECK(check_iso(d3, d3, ident).status == Status::pass);
}

TEST_CASE("cayley table file format round-trips") {
  FiniteSemigroup t = builtin_semigroup("ta21");
  Json j = t.to_json();
  CHECK(j.contains("elements"));
  CHECK(j.contains("table"));
  CHECK(j.contains("star"));
  FiniteSemigroup back = FiniteSemigroup::from_json(j);
  CHECK(back.size() == t.size());
  CHECK(back.to_json() == j);

  std::istringstream bad(R"({"elements": ["a"], "table": [[0]], "star": [1]})");
  CHECK_THROWS_AS(FiniteSemigroup::from_json(Json::parse(bad)),
                  std::exception);
}
