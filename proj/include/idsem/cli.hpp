// Configuration and dispatch for the command-line frontend; the actual
// flag parsing lives in the tool binary.

#ifndef IDSEM_CLI_HPP_
#define IDSEM_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace idsem {

struct RunConfig {
  std::string subcommand;        // e.g. "verify.theta-classes"
  std::string identity;          // builtin name or inline identity text
  std::string word;              // isoterm target word
  int zimin_n = 0;               // isoterm target via zimin(n)
  int dim = 3;
  std::string alphabet = "01";   // "01" | "0pm1"
  std::vector<std::string> patterns;  // optional restriction, e.g. "101"
  size_t max_len = 7;
  uint64_t cap = 0;              // 0 = per-check default
  unsigned workers = 1;
  uint64_t seed = 987654321;
  int range_lo = 0;
  int range_hi = 2;
  std::string semigroup;         // builtin name or path to a table file
  std::string gens = "t2";       // builtin generator set or file path
  std::string check = "case8";   // derive target
  int n = 4;                     // zimin subcommand order
  std::string out;               // output path; empty = stdout
  std::string format = "text";   // "text" | "structured"
};

// Exit status: 0 all checks pass, 1 some check failed, 2 configuration
// or input error, 3 a check aborted on a cap.
int run(RunConfig const& config, std::ostream& os);

}  // namespace idsem

#endif  // IDSEM_CLI_HPP_
