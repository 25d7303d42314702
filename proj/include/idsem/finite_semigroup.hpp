// Finite (involution) semigroups as validated Cayley tables, identity
// checking by exhaustive homomorphism enumeration, and ideal-collapsing
// closure of integer matrix generators.

#ifndef IDSEM_FINITE_SEMIGROUP_HPP_
#define IDSEM_FINITE_SEMIGROUP_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idsem/poly.hpp"
#include "idsem/report.hpp"
#include "idsem/upper_tri.hpp"
#include "idsem/words.hpp"

namespace idsem {

// Associativity and the involution laws are checked eagerly over all
// triples/pairs at construction; every downstream check relies on them.
class FiniteSemigroup {
 public:
  FiniteSemigroup(std::vector<std::string> names,
                  std::vector<std::vector<int>> table,
                  std::optional<std::vector<int>> star = std::nullopt);

  size_t size() const { return names_.size(); }
  int mul(int a, int b) const { return table_[size_t(a)][size_t(b)]; }
  bool has_star() const { return star_.has_value(); }
  int star(int e) const { return (*star_)[size_t(e)]; }
  std::string const& name(int e) const { return names_[size_t(e)]; }
  int index_of(std::string const& name) const;  // throws when unknown

  std::vector<int> idempotents() const;

  static FiniteSemigroup from_json(Json const& j);
  Json to_json() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::optional<std::vector<int>> star_;
};

// Evaluates both sides under all |S|^k assignments of elements to the
// distinct unstarred letters; starred letters map through the star.
// The witness, when the identity fails, is the first assignment in
// enumeration order (letters ascending, first letter most significant).
CheckReport holds(FiniteSemigroup const& S, Identity const& id,
                  unsigned workers = 1);

// Verifies that the index bijection intertwines multiplication and, when
// both sides carry one, the involution.
CheckReport check_iso(FiniteSemigroup const& S, FiniteSemigroup const& T,
                      std::vector<int> const& map);

struct ClosureCapExceeded : std::runtime_error {
  explicit ClosureCapExceeded(size_t count);
  size_t element_count;
};

struct MatrixClosure {
  FiniteSemigroup semigroup;
  std::vector<UpperTri<Int>> representatives;  // one per element
  int sink = -1;  // index of the collapsed ideal class, -1 when absent
};

// Closes the generators under product and skew transpose, collapsing
// every matrix satisfying the ideal predicate to a single sink element.
// Throws ClosureCapExceeded when the number of distinct non-collapsed
// elements grows past the cap, and std::logic_error when a product of
// the sink representative escapes the predicate.
MatrixClosure closure_with_ideal(
    std::vector<std::pair<std::string, UpperTri<Int>>> const& generators,
    std::function<bool(UpperTri<Int> const&)> const& ideal, size_t cap);

}  // namespace idsem

#endif  // IDSEM_FINITE_SEMIGROUP_HPP_
