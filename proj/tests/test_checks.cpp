#include "doctest.h"

#include <set>

#include "idsem/builtins.hpp"
#include "idsem/checks.hpp"

using namespace idsem;

TEST_CASE("case8 derivation is purely syntactic") {
  CheckReport r = derivation_case8();
  CHECK(r.status == Status::pass);
  CHECK(r.witness.at("derived_lhs").get<std::string>() ==
        print_word(zimin(4)));
  CHECK(r.witness.at("derived_rhs").get<std::string>() ==
        "x1 x2 x1 x2 x1 x3 x1 x4 x1 x3 x1 x2 x1 x2 x1");

  // Negative control: perturbing the substitution breaks the match.
  Identity malcev = builtin_identity("class2");
  std::map<uint32_t, Word> bad{{1, parse_word("x1")},
                               {2, parse_word("x3")},
                               {3, parse_word("x2 x1 x2")},
                               {4, parse_word("x4")}};
  Word left =
      parse_word("x1 x2") * substitute(malcev.lhs, bad) * parse_word("x2 x1");
  CHECK(print_word(left) != print_word(zimin(4)));
}

TEST_CASE("isoterm scans on ta21") {
  FiniteSemigroup t = builtin_semigroup("ta21");
  CHECK(isoterm_scan(t, zimin(1), 4).status == Status::pass);
  CHECK(isoterm_scan(t, zimin(1), 7).status == Status::pass);
  CHECK(isoterm_scan(t, zimin(2), 7).status == Status::pass);
}

TEST_CASE("isoterm scan finds commutativity partners") {
  FiniteSemigroup d3 = builtin_semigroup("d3");
  CheckReport r = isoterm_scan(d3, parse_word("x1 x2"), 3);
  CHECK(r.status == Status::fail);
  CHECK(r.witness.at("partner").get<std::string>() == "x2 x1");
  CHECK(r.witness.at("bound") == 3);

  // Worker count does not change the reported partner.
  ScanOptions three;
  three.workers = 3;
  CheckReport r3 = isoterm_scan(d3, parse_word("x1 x2"), 3, three);
  CHECK(r3.witness == r.witness);
  CHECK(r3.status == r.status);
}

TEST_CASE("isoterm scan aborts on the candidate cap") {
  FiniteSemigroup t = builtin_semigroup("ta21");
  ScanOptions tiny;
  tiny.cap = 10;
  CHECK(isoterm_scan(t, zimin(2), 7, tiny).status == Status::aborted);
}

TEST_CASE("isoterm scan without a star uses plain candidates") {
  FiniteSemigroup two({"a", "b"}, {{0, 1}, {1, 0}}, std::nullopt);
  // The two-element group satisfies x1 = x1 x1 x1.
  CheckReport r = isoterm_scan(two, parse_word("x1"), 3);
  CHECK(r.status == Status::fail);
  CHECK(r.witness.at("partner").get<std::string>() == "x1 x1 x1");
  CHECK_THROWS_AS(isoterm_scan(two, parse_word("x1*"), 3),
                  std::invalid_argument);
}

TEST_CASE("freeness scans") {
  CheckReport t2 = freeness_scan(builtin_generators("t2"), 12);
  CHECK(t2.status == Status::pass);
  CHECK(t2.witness.at("products") == 8190);

  CheckReport zeta = freeness_scan(builtin_generators("zeta"), 10);
  CHECK(zeta.status == Status::pass);
  CHECK(zeta.witness.at("products") == 2046);

  // Monotonicity: passing at 12 implies passing at every smaller bound.
  for (size_t l : {10, 8, 4, 2}) {
    CHECK(freeness_scan(builtin_generators("t2"), l).status == Status::pass);
  }

  // A single idempotent generator collides at length 2.
  UpperTri<Int> one(1);
  one.at(0, 0) = 1;
  CheckReport idem = freeness_scan({{"g1", one}}, 5);
  CHECK(idem.status == Status::fail);
  CHECK(idem.witness.at("first").get<std::string>() == "g1");
  CHECK(idem.witness.at("second").get<std::string>() == "g1 g1");

  CHECK(freeness_scan(builtin_generators("t2"), 30, 1000).status ==
        Status::aborted);
  CHECK_THROWS_AS(freeness_scan(builtin_generators("t2"), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(freeness_scan({}, 5), std::invalid_argument);
}

TEST_CASE("z4 epsilon closed form") {
  CHECK(z4_epsilon_check().status == Status::pass);
}

TEST_CASE("s010 anomaly record") {
  CheckReport r = s010_anomaly_check();
  CHECK(r.status == Status::pass);
  REQUIRE(r.children.size() == 4);
  for (auto const& c : r.children) {
    CHECK(c.status == Status::pass);
  }
}

TEST_CASE("m quotient replay") {
  CheckReport r = m_quotient_check();
  CHECK(r.status == Status::pass);
  REQUIRE(r.children.size() == 4);
}

TEST_CASE("malcev witness report") {
  CheckReport r = malcev_witness_report(DiagAlphabet::zero_one());
  CHECK(r.status == Status::pass);
  REQUIRE(r.children.size() == 4);
  // Equivalent to the conjunction of its independently runnable parts.
  CHECK(diag_hom_check(3, DiagAlphabet::zero_one()).status == Status::pass);
  CHECK(builtin_semigroup("d3").idempotents().size() == 8);
  CHECK(verify_uniform(3, all_patterns(3, DiagAlphabet::zero_one()),
                       builtin_identity("z4"))
            .status == Status::pass);
  CHECK(is_balanced(builtin_identity("z4")));
  // The report states the scope of what is computed.
  CHECK(r.details.find("cited theory") != std::string::npos);

  CheckReport ext = malcev_witness_report(DiagAlphabet::zero_pm_one());
  CHECK(ext.status == Status::pass);

  // Negative control for the premise sub-check: an unbalanced identity
  // or a non-Zimin left side would not qualify.
  CHECK_FALSE(is_balanced(parse_identity("x1 x1 = x1")));
  CHECK_FALSE(parse_word("x1 x2") == zimin(2));
}

TEST_CASE("paper suite is green and fully named") {
  VerifyOptions opt;
  opt.workers = 2;
  auto reports = paper_suite(opt);
  CHECK(reports.size() == 25);
  std::set<std::string> names;
  for (auto const& r : reports) {
    CHECK(r.status == Status::pass);
    names.insert(r.check);
  }
  CHECK(names.size() == reports.size());
}
