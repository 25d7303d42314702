#include "idsem/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "idsem/builtins.hpp"
#include "idsem/checks.hpp"
#include "idsem/rees.hpp"

namespace idsem {

namespace {

Identity resolve_identity(std::string const& text) {
  if (text.empty()) {
    throw std::invalid_argument("no identity given (--identity)");
  }
  if (is_builtin_identity(text)) {
    return builtin_identity(text);
  }
  return parse_identity(text);
}

FiniteSemigroup resolve_semigroup(std::string const& spec) {
  if (spec.empty()) {
    throw std::invalid_argument("no semigroup given (--builtin/--semigroup)");
  }
  if (spec == "d3" || spec == "d3pm" || spec == "ta21" || spec == "mquot") {
    return builtin_semigroup(spec);
  }
  std::ifstream in(spec);
  if (!in) {
    throw std::invalid_argument("cannot open semigroup file: " + spec);
  }
  return FiniteSemigroup::from_json(Json::parse(in));
}

std::vector<std::pair<std::string, UpperTri<Int>>> resolve_generators(
    std::string const& spec) {
  if (spec == "t2" || spec == "zeta") {
    return builtin_generators(spec);
  }
  std::ifstream in(spec);
  if (!in) {
    throw std::invalid_argument("cannot open generator file: " + spec);
  }
  Json j = Json::parse(in);
  int dim = j.at("dim");
  std::vector<std::pair<std::string, UpperTri<Int>>> out;
  size_t index = 1;
  for (auto const& rows : j.at("generators")) {
    UpperTri<Int> m(dim);
    for (int i = 0; i < dim; ++i) {
      for (int c = 0; c < dim; ++c) {
        int64_t v = rows.at(size_t(i)).at(size_t(c));
        if (c < i) {
          if (v != 0) {
            throw std::invalid_argument(
                "generator matrices must be upper triangular");
          }
        } else {
          m.at(i, c) = v;
        }
      }
    }
    out.emplace_back("g" + std::to_string(index++), std::move(m));
  }
  if (out.empty()) {
    throw std::invalid_argument("generator file contains no matrices");
  }
  return out;
}

DiagonalPattern all_ones(int dim) {
  return DiagonalPattern(std::vector<int>(size_t(dim), 1));
}

std::vector<DiagonalPattern> resolve_patterns(RunConfig const& cfg) {
  if (!cfg.patterns.empty()) {
    std::vector<DiagonalPattern> out;
    for (auto const& p : cfg.patterns) {
      DiagonalPattern pat = DiagonalPattern::parse(p);
      if (pat.size() != size_t(cfg.dim)) {
        throw std::invalid_argument("pattern " + p + " has wrong length");
      }
      out.push_back(std::move(pat));
    }
    return out;
  }
  return all_patterns(cfg.dim, DiagAlphabet::parse(cfg.alphabet));
}

VerifyOptions verify_options(RunConfig const& cfg) {
  VerifyOptions opt;
  if (cfg.cap > 0) {
    opt.cap = cfg.cap;
  }
  opt.workers = cfg.workers;
  opt.seed = cfg.seed;
  return opt;
}

void attach_numeric(CheckReport& report, RunConfig const& cfg,
                    std::vector<DiagonalPattern> const& allowed,
                    Identity const& id) {
  auto w = find_numeric_counterexample(cfg.dim, allowed, id, cfg.range_lo,
                                       cfg.range_hi, verify_options(cfg));
  if (w && !(w->lhs == w->rhs)) {
    report.children.push_back(CheckReport::pass(
        "numeric-witness",
        "concrete integer assignment with entries in [" +
            std::to_string(cfg.range_lo) + ", " +
            std::to_string(cfg.range_hi) +
            "] re-evaluates to unequal matrices",
        witness_json(*w)));
  } else {
    report.children.push_back(
        CheckReport::fail("numeric-witness", "no integer witness in range"));
  }
}

Word resolve_scan_word(RunConfig const& cfg) {
  if (cfg.zimin_n > 0) {
    return zimin(uint32_t(cfg.zimin_n));
  }
  if (!cfg.word.empty()) {
    return parse_word(cfg.word);
  }
  throw std::invalid_argument("no scan target given (--zimin or --word)");
}

std::vector<CheckReport> dispatch(RunConfig const& cfg) {
  VerifyOptions opt = verify_options(cfg);
  std::vector<CheckReport> reports;
  auto timed = [&](auto&& f) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r = f();
    r.duration_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    reports.push_back(std::move(r));
  };

  if (cfg.subcommand == "verify.theta-classes") {
    timed([&] {
      CheckReport r =
          verify_uniform(cfg.dim, resolve_patterns(cfg),
                         resolve_identity(cfg.identity), opt);
      r.check = "theta-classes";
      return r;
    });
  } else if (cfg.subcommand == "verify.mixed") {
    timed([&] {
      Identity id = resolve_identity(cfg.identity);
      CheckReport r =
          verify_mixed(cfg.dim, DiagAlphabet::parse(cfg.alphabet), id, opt);
      if (r.status == Status::fail) {
        attach_numeric(r, cfg,
                       all_patterns(cfg.dim, DiagAlphabet::parse(cfg.alphabet)),
                       id);
      }
      return r;
    });
  } else if (cfg.subcommand == "verify.unitriangular") {
    timed([&] {
      Identity id = resolve_identity(cfg.identity);
      CheckReport r = verify_uniform(cfg.dim, {all_ones(cfg.dim)}, id, opt);
      r.check = "unitriangular";
      if (r.status == Status::fail) {
        attach_numeric(r, cfg, {all_ones(cfg.dim)}, id);
      }
      return r;
    });
  } else if (cfg.subcommand == "verify.diag-hom") {
    timed([&] {
      return diag_hom_check(cfg.dim, DiagAlphabet::parse(cfg.alphabet));
    });
  } else if (cfg.subcommand == "verify.embedding") {
    timed([&] { return embedding_check(); });
  } else if (cfg.subcommand == "check-finite") {
    timed([&] {
      return holds(resolve_semigroup(cfg.semigroup),
                   resolve_identity(cfg.identity), cfg.workers);
    });
  } else if (cfg.subcommand == "rees.criterion") {
    timed([&] {
      return abelian_rees_criterion(resolve_identity(cfg.identity));
    });
  } else if (cfg.subcommand == "rees.iso") {
    timed([&] { return s101_iso_check(); });
  } else if (cfg.subcommand == "derive") {
    if (cfg.check != "case8") {
      throw std::invalid_argument("unknown derivation: " + cfg.check);
    }
    timed([&] { return derivation_case8(); });
  } else if (cfg.subcommand == "isoterm") {
    timed([&] {
      ScanOptions scan;
      if (cfg.cap > 0) {
        scan.cap = cfg.cap;
      }
      scan.workers = cfg.workers;
      return isoterm_scan(resolve_semigroup(cfg.semigroup),
                          resolve_scan_word(cfg), cfg.max_len, scan);
    });
  } else if (cfg.subcommand == "free-scan") {
    timed([&] {
      return freeness_scan(resolve_generators(cfg.gens), cfg.max_len,
                           cfg.cap > 0 ? cfg.cap : 1000000);
    });
  } else if (cfg.subcommand == "malcev-report") {
    timed([&] {
      return malcev_witness_report(DiagAlphabet::parse(cfg.alphabet), opt);
    });
  } else if (cfg.subcommand == "quotient") {
    timed([&] { return m_quotient_check(); });
  } else if (cfg.subcommand == "zimin") {
    timed([&] {
      Word w = zimin(uint32_t(cfg.n));
      return CheckReport::pass("zimin", print_word(w));
    });
  } else if (cfg.subcommand == "paper-suite") {
    reports = paper_suite(opt);
  } else {
    throw std::invalid_argument("unknown subcommand: " + cfg.subcommand);
  }
  return reports;
}

std::string summary_table(std::vector<CheckReport> const& reports) {
  size_t width = 8;
  for (auto const& r : reports) {
    width = std::max(width, r.check.size());
  }
  std::ostringstream os;
  size_t passed = 0;
  for (auto const& r : reports) {
    os << r.check << std::string(width - r.check.size() + 2, ' ')
       << to_string(r.status) << "\n";
    passed += r.passed() ? 1 : 0;
  }
  os << passed << "/" << reports.size() << " checks passed\n";
  return os.str();
}

}  // namespace

int run(RunConfig const& cfg, std::ostream& os) {
  std::vector<CheckReport> reports;
  try {
    reports = dispatch(cfg);
  } catch (std::exception const& e) {
    os << "error: " << e.what() << "\n";
    return 2;
  }
  std::string rendered;
  if (cfg.format == "structured") {
    rendered = render_structured(reports);
  } else if (cfg.subcommand == "zimin") {
    rendered = reports.front().details + "\n";
  } else {
    rendered = render_text(reports);
    if (cfg.subcommand == "paper-suite") {
      rendered += "\n" + summary_table(reports);
    }
  }
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      os << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << rendered;
  } else {
    os << rendered;
  }
  bool any_fail = false, any_abort = false;
  for (auto const& r : reports) {
    any_fail = any_fail || r.status == Status::fail;
    any_abort = any_abort || r.status == Status::aborted;
  }
  if (any_fail) {
    return 1;
  }
  if (any_abort) {
    return 3;
  }
  return 0;
}

}  // namespace idsem
