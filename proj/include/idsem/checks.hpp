// Composite checks: the substitution derivation, isoterm and freeness
// scans, and the assembled multi-step reports.

#ifndef IDSEM_CHECKS_HPP_
#define IDSEM_CHECKS_HPP_

#include <cstdint>
#include <vector>

#include "idsem/finite_semigroup.hpp"
#include "idsem/report.hpp"
#include "idsem/symbolic.hpp"
#include "idsem/upper_tri.hpp"
#include "idsem/words.hpp"

namespace idsem {

// Substitutes x1, x3, x1x2x1, x4 for the four letters of the class2
// identity, multiplies through by x1x2 on the left and x2x1 on the
// right, and compares the result syntactically with both sides of z4.
CheckReport derivation_case8();

struct ScanOptions {
  uint64_t cap = 10000000;  // candidate words for isoterm scans
  unsigned workers = 1;
};

// Enumerates, in shortlex order, the words over the letters of v and
// their stars (stars only when S has one) up to the length bound, and
// passes iff no candidate other than v itself evaluates identically to
// v under all assignments. The length bound is a scan boundary and is
// recorded in the report.
CheckReport isoterm_scan(FiniteSemigroup const& S, Word const& v,
                         size_t max_len, ScanOptions const& opt = {});

// Multiplies out every generator sequence of length <= max_len with
// exact integer arithmetic and passes iff all products are pairwise
// distinct. On a collision the two colliding sequences are reported.
CheckReport freeness_scan(
    std::vector<std::pair<std::string, UpperTri<Int>>> const& generators,
    size_t max_len, uint64_t cap = 1000000);

// The assembled argument: the diagonal map is a homomorphism, all its
// image elements are idempotent (so every kernel class is a
// subsemigroup), every class satisfies z4 uniformly, and z4 is a
// balanced nontrivial identity with Zimin left side. Local finiteness
// conclusions are cited theory and explicitly not computed.
CheckReport malcev_witness_report(DiagAlphabet const& alphabet,
                                  VerifyOptions const& opt = {});

// The product of the 15-letter Zimin word over generic (1,0,1)-diagonal
// matrices, compared entrywise against the expected closed form of its
// top-right entry.
CheckReport z4_epsilon_check();

// Records that xyx = x fails symbolically on the (0,1,0) class while z4
// holds there, and that products of length >= 2 in that class are
// determined by their first and last factors.
CheckReport s010_anomaly_check();

// The collapse of the e,x,y matrix semigroup modulo its ideal, with the
// isomorphism onto ta21 (star included).
CheckReport m_quotient_check();

// Generated corpus linking the syntactic Rees criterion to symbolic
// verification on the (1,0,1) class: criterion pass must imply symbolic
// pass, and a pair-count failure with matching endpoints must imply
// symbolic failure.
CheckReport rees_corpus_crosscheck(size_t min_each = 200,
                                   uint64_t seed = 987654321);

// Every check above plus the headline verifications, in a fixed order.
std::vector<CheckReport> paper_suite(VerifyOptions const& opt = {});

}  // namespace idsem

#endif  // IDSEM_CHECKS_HPP_
