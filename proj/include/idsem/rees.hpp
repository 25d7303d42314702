// Rees matrix semigroup over an additive group with sandwich P(r, s) = rs,
// and the syntactic identity criterion for Rees matrix semigroups over
// Abelian groups.

#ifndef IDSEM_REES_HPP_
#define IDSEM_REES_HPP_

#include "idsem/poly.hpp"
#include "idsem/report.hpp"
#include "idsem/words.hpp"

namespace idsem {

// Triple (left index, group element, right index). The scalar is exact:
// rationals for numeric work, polynomials for symbolic certificates.
template <typename S>
struct ReesElement {
  S left;
  S middle;
  S right;

  friend bool operator==(ReesElement const&, ReesElement const&) = default;
};

// (s1, g, r1) * (s2, h, r2) = (s1, g + r1*s2 + h, r2).
template <typename S>
ReesElement<S> rees_mul(ReesElement<S> const& a, ReesElement<S> const& b) {
  return {a.left, a.middle + a.right * b.left + b.middle, b.right};
}

// Symbolic verification that the coordinate map from the (1,0,1)-diagonal
// triangular matrices onto the Rees matrix semigroup is multiplicative.
CheckReport s101_iso_check();

// First letters equal, last letters equal, and for every ordered pair of
// letters the adjacent-occurrence counts coincide. Plain identities only.
CheckReport abelian_rees_criterion(Identity const& id);

}  // namespace idsem

#endif  // IDSEM_REES_HPP_
