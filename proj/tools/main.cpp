#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "idsem/cli.hpp"

namespace {

void add_common(CLI::App* cmd, idsem::RunConfig& cfg) {
  cmd->add_option("--cap", cfg.cap, "enumeration cap (0 = default)");
  cmd->add_option("--workers", cfg.workers, "worker count");
  cmd->add_option("--seed", cfg.seed, "seed for sampling cross-checks");
  cmd->add_option("--out", cfg.out, "write the report to this file");
  cmd->add_option("--format", cfg.format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "idsem: identity verification in triangular matrix semigroups,\n"
      "finite involution semigroups, and Rees matrix semigroups"};
  app.require_subcommand(1);
  idsem::RunConfig cfg;
  std::string range_text;

  auto* verify = app.add_subcommand(
      "verify", "symbolic identity verification on matrix classes");
  verify->require_subcommand(1);

  auto* theta = verify->add_subcommand(
      "theta-classes", "one fresh symbolic matrix per letter, same diagonal "
                       "pattern for all letters, every pattern checked");
  theta->add_option("--identity", cfg.identity,
                    "identity text or builtin (z4, z4new, class2, class3)");
  theta->add_option("--dim", cfg.dim, "matrix dimension");
  theta->add_option("--alphabet", cfg.alphabet, "diagonal alphabet: 01 | 0pm1");
  theta->add_option("--pattern", cfg.patterns,
                    "restrict to these diagonal patterns, e.g. 101");
  add_common(theta, cfg);
  theta->callback([&] { cfg.subcommand = "verify.theta-classes"; });

  auto* mixed = verify->add_subcommand(
      "mixed", "independent diagonal pattern per letter, all combinations");
  mixed->add_option("--identity", cfg.identity, "identity text or builtin");
  mixed->add_option("--dim", cfg.dim, "matrix dimension");
  mixed->add_option("--alphabet", cfg.alphabet, "diagonal alphabet");
  mixed->add_option("--range", range_text,
                    "entry range for the numeric witness search, lo:hi");
  add_common(mixed, cfg);
  mixed->callback([&] { cfg.subcommand = "verify.mixed"; });

  auto* unitri = verify->add_subcommand(
      "unitriangular", "all-ones diagonal (the unitriangular group)");
  unitri->add_option("--identity", cfg.identity, "identity text or builtin");
  unitri->add_option("--dim", cfg.dim, "matrix dimension");
  unitri->add_option("--range", range_text,
                     "entry range for the numeric witness search, lo:hi");
  add_common(unitri, cfg);
  unitri->callback([&] { cfg.subcommand = "verify.unitriangular"; });

  auto* dh = verify->add_subcommand(
      "diag-hom", "diagonal extraction commutes with multiplication");
  dh->add_option("--dim", cfg.dim, "matrix dimension");
  dh->add_option("--alphabet", cfg.alphabet, "diagonal alphabet");
  add_common(dh, cfg);
  dh->callback([&] { cfg.subcommand = "verify.diag-hom"; });

  auto* emb = verify->add_subcommand(
      "embedding", "corner embedding of 2x2 into 3x3 matrices");
  add_common(emb, cfg);
  emb->callback([&] { cfg.subcommand = "verify.embedding"; });

  auto* finite = app.add_subcommand(
      "check-finite", "exhaustive identity check on a finite semigroup");
  finite->add_option("--identity", cfg.identity, "identity text or builtin");
  finite->add_option("--builtin", cfg.semigroup,
                     "builtin semigroup: d3 | d3pm | ta21 | mquot");
  finite->add_option("--semigroup", cfg.semigroup,
                     "path to a Cayley table file (elements/table/star)");
  add_common(finite, cfg);
  finite->callback([&] { cfg.subcommand = "check-finite"; });

  auto* rees = app.add_subcommand("rees", "Rees matrix semigroup checks");
  rees->require_subcommand(1);
  auto* crit = rees->add_subcommand(
      "criterion", "first letter, last letter, adjacent pair counts");
  crit->add_option("--identity", cfg.identity, "identity text or builtin");
  add_common(crit, cfg);
  crit->callback([&] { cfg.subcommand = "rees.criterion"; });
  auto* iso = rees->add_subcommand(
      "iso", "coordinate map onto the Rees matrix semigroup");
  add_common(iso, cfg);
  iso->callback([&] { cfg.subcommand = "rees.iso"; });

  auto* derive = app.add_subcommand("derive", "syntactic derivations");
  derive->add_option("--check", cfg.check, "derivation name (case8)");
  add_common(derive, cfg);
  derive->callback([&] { cfg.subcommand = "derive"; });

  auto* iso_scan = app.add_subcommand(
      "isoterm", "bounded scan for partner words of a target word");
  iso_scan->add_option("--builtin", cfg.semigroup, "builtin semigroup");
  iso_scan->add_option("--semigroup", cfg.semigroup, "Cayley table file");
  iso_scan->add_option("--zimin", cfg.zimin_n, "target word zimin(n)");
  iso_scan->add_option("--word", cfg.word, "target word, e.g. 'x1 x2 x1'");
  iso_scan->add_option("--max-len", cfg.max_len, "candidate length bound");
  add_common(iso_scan, cfg);
  iso_scan->callback([&] { cfg.subcommand = "isoterm"; });

  auto* fscan = app.add_subcommand(
      "free-scan", "pairwise distinctness of bounded generator products");
  fscan->add_option("--gens", cfg.gens,
                    "builtin generator set (t2 | zeta) or a JSON file");
  fscan->add_option("--max-len", cfg.max_len, "product length bound");
  add_common(fscan, cfg);
  fscan->callback([&] { cfg.subcommand = "free-scan"; });

  auto* malcev = app.add_subcommand(
      "malcev-report", "assembled kernel-class report");
  malcev->add_option("--alphabet", cfg.alphabet, "diagonal alphabet");
  add_common(malcev, cfg);
  malcev->callback([&] { cfg.subcommand = "malcev-report"; });

  auto* quot = app.add_subcommand(
      "quotient", "ideal quotient of the e,x,y matrix semigroup and its "
                  "isomorphism onto ta21");
  add_common(quot, cfg);
  quot->callback([&] { cfg.subcommand = "quotient"; });

  auto* zim = app.add_subcommand("zimin", "print a Zimin word");
  zim->add_option("--n", cfg.n, "order")->check(CLI::PositiveNumber);
  add_common(zim, cfg);
  zim->callback([&] { cfg.subcommand = "zimin"; });

  auto* suite = app.add_subcommand(
      "paper-suite", "run every check and print a summary table");
  add_common(suite, cfg);
  suite->callback([&] { cfg.subcommand = "paper-suite"; });

  CLI11_PARSE(app, argc, argv);
  if (!range_text.empty()) {
    auto colon = range_text.find(':');
    if (colon == std::string::npos) {
      std::cerr << "error: --range expects lo:hi\n";
      return 2;
    }
    try {
      cfg.range_lo = std::stoi(range_text.substr(0, colon));
      cfg.range_hi = std::stoi(range_text.substr(colon + 1));
    } catch (std::exception const&) {
      std::cerr << "error: --range expects lo:hi\n";
      return 2;
    }
  }
  return idsem::run(cfg, std::cout);
}
