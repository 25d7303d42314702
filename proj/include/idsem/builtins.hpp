// The concrete instances every higher-level check refers to: the named
// identities, the diagonal and (0,1)-matrix semigroups, and the free
// subsemigroup generator sets. Semigroups are generated from their
// matrix definitions, not hardcoded as tables.

#ifndef IDSEM_BUILTINS_HPP_
#define IDSEM_BUILTINS_HPP_

#include <string>
#include <vector>

#include "idsem/finite_semigroup.hpp"
#include "idsem/upper_tri.hpp"
#include "idsem/words.hpp"

namespace idsem {

// z4      Z4 = x1x2x1x2x1 x3 x1 x4 x1 x3 x1x2x1x2x1 (the symmetric form)
// z4new   Z4 = x1x2x1x3x1x1x2x4x2x1x1x3x1x2x1
// class2  x1x2x3x4x3x2x1 = x3x2x1x4x1x2x3 (nilpotency class 2)
// class3  the analogous 15-letter identity for nilpotency class 3
Identity builtin_identity(std::string const& name);
bool is_builtin_identity(std::string const& name);

// d3    the 8 diagonal 0/1 matrices of size 3, star = diagonal reversal
// d3pm  the 27 diagonal {0,1,-1} matrices of size 3
// ta21  the six 2x2 (0,1)-matrices with the swap involution
// mquot the 6-element quotient of the e,x,y matrix closure
FiniteSemigroup builtin_semigroup(std::string const& name);

// t2    [[2,0],[0,1]] and [[2,1],[0,1]]
// zeta  [[2,0,0],[0,1,1],[0,0,2]] and its skew transpose
std::vector<std::pair<std::string, UpperTri<Int>>> builtin_generators(
    std::string const& name);

// Generators e, x, y of the matrix semigroup whose ideal quotient is
// isomorphic to ta21, and the predicate defining the ideal.
std::vector<std::pair<std::string, UpperTri<Int>>> m_quotient_generators();
bool m_quotient_ideal(UpperTri<Int> const& m);

// The element map sending the quotient onto ta21 (by element name).
std::vector<std::pair<std::string, std::string>> m_quotient_to_ta21();

}  // namespace idsem

#endif  // IDSEM_BUILTINS_HPP_
