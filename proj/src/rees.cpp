#include "idsem/rees.hpp"

#include "idsem/symbolic.hpp"

namespace idsem {

namespace {

ReesElement<Polynomial> to_rees(SymMatrix const& m) {
  // left = (2,3) entry, middle = (1,3) entry, right = (1,2) entry.
  return {m.at(1, 2), m.at(0, 2), m.at(0, 1)};
}

}  // namespace

CheckReport s101_iso_check() {
  DiagonalPattern s101({1, 0, 1});
  SymMatrix a = fresh_symbolic(3, s101, 1);
  SymMatrix b = fresh_symbolic(3, s101, 2);
  ReesElement<Polynomial> direct = to_rees(a * b);
  ReesElement<Polynomial> mapped = rees_mul(to_rees(a), to_rees(b));
  if (direct == mapped) {
    Json w;
    w["middle"] = direct.middle.str();
    return CheckReport::pass(
        "s101-iso",
        "coordinate map is multiplicative on generic elements; middle "
        "component of the product is " +
            direct.middle.str(),
        std::move(w));
  }
  Json w;
  w["direct"] = Json::array(
      {direct.left.str(), direct.middle.str(), direct.right.str()});
  w["mapped"] = Json::array(
      {mapped.left.str(), mapped.middle.str(), mapped.right.str()});
  return CheckReport::fail(
      "s101-iso", "coordinate map does not commute with multiplication",
      std::move(w));
}

CheckReport abelian_rees_criterion(Identity const& id) {
  if (id.involutory) {
    throw std::invalid_argument(
        "abelian_rees_criterion: plain identities only");
  }
  auto su = occurrence_stats(id.lhs);
  auto sv = occurrence_stats(id.rhs);
  CheckReport top = CheckReport::pass(
      "rees-criterion", "identity " + print_identity(id));
  bool first = su.first == sv.first;
  top.add_child(first
                    ? CheckReport::pass("first-letter",
                                        "both sides start with " +
                                            print_letter(su.first))
                    : CheckReport::fail("first-letter",
                                        print_letter(su.first) + " vs " +
                                            print_letter(sv.first)));
  bool last = su.last == sv.last;
  top.add_child(last ? CheckReport::pass("last-letter",
                                         "both sides end with " +
                                             print_letter(su.last))
                     : CheckReport::fail("last-letter",
                                         print_letter(su.last) + " vs " +
                                             print_letter(sv.last)));
  if (su.pair_counts == sv.pair_counts) {
    top.add_child(CheckReport::pass(
        "pair-counts", "adjacent ordered-pair counts coincide (" +
                           std::to_string(su.pair_counts.size()) +
                           " distinct pairs)"));
  } else {
    // Report the first pair whose counts differ.
    std::string detail = "adjacent ordered-pair counts differ";
    for (auto const& [pair, count] : su.pair_counts) {
      auto it = sv.pair_counts.find(pair);
      size_t other = it == sv.pair_counts.end() ? 0 : it->second;
      if (other != count) {
        detail += ": (" + print_letter(pair.first) + "," +
                  print_letter(pair.second) + ") occurs " +
                  std::to_string(count) + " vs " + std::to_string(other);
        break;
      }
    }
    if (detail == "adjacent ordered-pair counts differ") {
      for (auto const& [pair, count] : sv.pair_counts) {
        if (!su.pair_counts.contains(pair)) {
          detail += ": (" + print_letter(pair.first) + "," +
                    print_letter(pair.second) + ") occurs 0 vs " +
                    std::to_string(count);
          break;
        }
      }
    }
    top.add_child(CheckReport::fail("pair-counts", detail));
  }
  return top;
}

}  // namespace idsem
