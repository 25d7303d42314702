#include "idsem/symbolic.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "idsem/parallel.hpp"

namespace idsem {

DiagonalPattern::DiagonalPattern(std::vector<int> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("DiagonalPattern: empty");
  }
  for (int v : entries_) {
    if (v != 0 && v != 1 && v != -1) {
      throw std::invalid_argument(
          "DiagonalPattern: entries must come from {0, 1, -1}");
    }
  }
}

DiagonalPattern DiagonalPattern::parse(std::string const& text) {
  std::vector<int> entries;
  for (size_t i = 0; i < text.size(); ++i) {
    int sign = 1;
    if (text[i] == '-') {
      sign = -1;
      ++i;
      if (i == text.size()) {
        throw std::invalid_argument("pattern: dangling sign");
      }
    }
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("pattern: expected digit");
    }
    entries.push_back(sign * (text[i] - '0'));
  }
  return DiagonalPattern(std::move(entries));
}

std::string DiagonalPattern::str() const {
  std::string s;
  for (int v : entries_) {
    if (v < 0) {
      s += '-';
    }
    s += char('0' + std::abs(v));
  }
  return s;
}

DiagAlphabet DiagAlphabet::parse(std::string const& name) {
  if (name == "01") {
    return zero_one();
  }
  if (name == "0pm1") {
    return zero_pm_one();
  }
  throw std::invalid_argument("unknown diagonal alphabet: " + name);
}

std::string DiagAlphabet::name() const {
  return values.size() == 2 ? "01" : "0pm1";
}

std::vector<DiagonalPattern> all_patterns(int dim, DiagAlphabet const& a) {
  size_t count = 1;
  for (int i = 0; i < dim; ++i) {
    count *= a.values.size();
  }
  std::vector<DiagonalPattern> out;
  out.reserve(count);
  for (size_t c = 0; c < count; ++c) {
    std::vector<int> entries(static_cast<size_t>(dim));
    size_t rem = c;
    for (int i = dim - 1; i >= 0; --i) {
      entries[size_t(i)] = a.values[rem % a.values.size()];
      rem /= a.values.size();
    }
    out.emplace_back(std::move(entries));
  }
  return out;
}

SymMatrix fresh_symbolic(int dim, DiagonalPattern const& pattern,
                         uint32_t letter) {
  if (pattern.size() != size_t(dim)) {
    throw std::invalid_argument("fresh_symbolic: pattern length != dim");
  }
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m.at(i, i) = Polynomial::constant(pattern[size_t(i)]);
    for (int j = i + 1; j < dim; ++j) {
      m.at(i, j) = Polynomial::var(
          EntryVar{letter, uint32_t(i) + 1, uint32_t(j) + 1});
    }
  }
  return m;
}

DiagonalPattern diag_of(SymMatrix const& m) {
  std::vector<int> entries(size_t(m.dim()));
  for (int i = 0; i < m.dim(); ++i) {
    entries[size_t(i)] = int(m.at(i, i).constant_value());
  }
  return DiagonalPattern(std::move(entries));
}

Json matrix_json(UpperTri<Polynomial> const& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) {
      row.push_back(j < i ? "0" : m.at(i, j).str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_json(UpperTri<Int> const& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) {
      row.push_back(j < i ? int64_t(0) : m.at(i, j).convert_to<int64_t>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// First strictly-upper-triangle position (row-major) where the sides
// disagree; diagonals always agree when the letters share patterns.
struct EntryDiff {
  int row;  // 0-based
  int col;
  Polynomial lhs;
  Polynomial rhs;
};

std::vector<EntryDiff> entry_diffs(SymMatrix const& l, SymMatrix const& r) {
  std::vector<EntryDiff> out;
  for (int i = 0; i < l.dim(); ++i) {
    for (int j = i; j < l.dim(); ++j) {
      if (!(l.at(i, j) == r.at(i, j))) {
        out.push_back({i, j, l.at(i, j), r.at(i, j)});
      }
    }
  }
  return out;
}

using SymAssignment = std::map<uint32_t, SymMatrix>;

SymAssignment uniform_assignment(int dim, DiagonalPattern const& p,
                                 std::vector<uint32_t> const& letters) {
  SymAssignment asg;
  for (uint32_t letter : letters) {
    asg.emplace(letter, fresh_symbolic(dim, p, letter));
  }
  return asg;
}

std::vector<uint32_t> identity_letters(Identity const& id) {
  auto l = id.lhs.letter_indices();
  auto r = id.rhs.letter_indices();
  std::vector<uint32_t> out;
  std::set_union(l.begin(), l.end(), r.begin(), r.end(),
                 std::back_inserter(out));
  return out;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

std::map<uint32_t, UpperTri<Rational>> sample_assignment(
    int dim, std::map<uint32_t, DiagonalPattern> const& pattern_of,
    std::mt19937_64& rng) {
  std::map<uint32_t, UpperTri<Rational>> asg;
  for (auto const& [letter, pat] : pattern_of) {
    UpperTri<Rational> m(dim);
    for (int i = 0; i < dim; ++i) {
      m.at(i, i) = Rational(pat[size_t(i)]);
      for (int j = i + 1; j < dim; ++j) {
        m.at(i, j) = random_rational(rng);
      }
    }
    asg.emplace(letter, std::move(m));
  }
  return asg;
}

std::map<EntryVar, Rational> point_of(
    std::map<uint32_t, UpperTri<Rational>> const& asg) {
  std::map<EntryVar, Rational> pt;
  for (auto const& [letter, m] : asg) {
    for (int i = 0; i < m.dim(); ++i) {
      for (int j = i + 1; j < m.dim(); ++j) {
        pt.emplace(EntryVar{letter, uint32_t(i) + 1, uint32_t(j) + 1},
                   m.at(i, j));
      }
    }
  }
  return pt;
}

}  // namespace

CheckReport verify_uniform(int dim, std::vector<DiagonalPattern> const& pats,
                           Identity const& id, VerifyOptions const& opt) {
  if (pats.empty()) {
    throw std::invalid_argument("verify_uniform: no patterns given");
  }
  auto letters = identity_letters(id);
  CheckReport top = CheckReport::pass(
      "uniform", std::to_string(pats.size()) + " diagonal pattern(s), dim " +
                     std::to_string(dim) + ", identity " + print_identity(id));
  for (size_t pi = 0; pi < pats.size(); ++pi) {
    auto const& pat = pats[pi];
    SymAssignment asg = uniform_assignment(dim, pat, letters);
    SymMatrix lhs = eval_word(id.lhs, asg);
    SymMatrix rhs = eval_word(id.rhs, asg);
    auto diffs = entry_diffs(lhs, rhs);
    std::mt19937_64 rng(opt.seed + pi);
    std::map<uint32_t, DiagonalPattern> pattern_of;
    for (uint32_t letter : letters) {
      pattern_of.emplace(letter, pat);
    }
    if (diffs.empty()) {
      // Numeric cross-check along the rational evaluation route.
      int agreed = 0;
      for (int s = 0; s < opt.samples; ++s) {
        auto sample = sample_assignment(dim, pattern_of, rng);
        if (eval_word(id.lhs, sample) == eval_word(id.rhs, sample)) {
          ++agreed;
        }
      }
      if (agreed != opt.samples) {
        top.add_child(CheckReport::fail(
            "pattern-" + pat.str(),
            "symbolic equality contradicted by numeric sampling (" +
                std::to_string(agreed) + "/" + std::to_string(opt.samples) +
                " samples agree)"));
        continue;
      }
      Json w;
      w["pattern"] = pat.str();
      w["product"] = matrix_json(lhs);
      top.add_child(CheckReport::pass(
          "pattern-" + pat.str(),
          "both sides equal entrywise; " + std::to_string(opt.samples) +
              " numeric samples agree",
          std::move(w)));
    } else {
      auto const& d = diffs.front();
      Json w;
      w["pattern"] = pat.str();
      w["entry"] = Json::array({d.row + 1, d.col + 1});
      w["lhs"] = d.lhs.str();
      w["rhs"] = d.rhs.str();
      // Concretize: a sampled point where the differing entries differ.
      for (int s = 0; s < opt.samples; ++s) {
        auto sample = sample_assignment(dim, pattern_of, rng);
        auto pt = point_of(sample);
        Rational lv = d.lhs.eval(pt), rv = d.rhs.eval(pt);
        if (lv != rv) {
          Json sj;
          sj["lhs_value"] = lv.str();
          sj["rhs_value"] = rv.str();
          w["sample"] = std::move(sj);
          break;
        }
      }
      top.add_child(CheckReport::fail(
          "pattern-" + pat.str(),
          "entry (" + std::to_string(d.row + 1) + "," +
              std::to_string(d.col + 1) + ") differs: " + d.lhs.str() +
              "  vs  " + d.rhs.str(),
          std::move(w)));
    }
  }
  return top;
}

namespace {

// Decodes the pattern combination: the first letter holds the most
// significant base-P digit.
std::vector<size_t> combo_digits(uint64_t combo, size_t base, size_t k) {
  std::vector<size_t> digits(k);
  for (size_t j = k; j-- > 0;) {
    digits[j] = size_t(combo % base);
    combo /= base;
  }
  return digits;
}

}  // namespace

CheckReport verify_mixed(int dim, DiagAlphabet const& alphabet,
                         Identity const& id, VerifyOptions const& opt) {
  auto letters = identity_letters(id);
  auto pats = all_patterns(dim, alphabet);
  size_t const P = pats.size();
  std::string scope = std::to_string(P) + "^" + std::to_string(letters.size()) +
                      " pattern combinations, dim " + std::to_string(dim) +
                      ", identity " + print_identity(id);
  uint64_t total = 1;
  for (size_t j = 0; j < letters.size(); ++j) {
    if (total > opt.cap / P) {
      return CheckReport::aborted(
          "mixed", scope + ": combination count exceeds cap " +
                       std::to_string(opt.cap));
    }
    total *= P;
  }

  auto evaluate = [&](uint64_t combo) {
    auto digits = combo_digits(combo, P, letters.size());
    SymAssignment asg;
    for (size_t j = 0; j < letters.size(); ++j) {
      asg.emplace(letters[j], fresh_symbolic(dim, pats[digits[j]], letters[j]));
    }
    return std::pair{eval_word(id.lhs, asg), eval_word(id.rhs, asg)};
  };

  auto witness = first_witness(total, opt.workers, [&](uint64_t combo) {
    auto [lhs, rhs] = evaluate(combo);
    return !(lhs == rhs);
  });

  if (!witness) {
    return CheckReport::pass("mixed",
                             scope + ": all " + std::to_string(total) +
                                 " combinations verified equal");
  }
  uint64_t combo = *witness;
  auto digits = combo_digits(combo, P, letters.size());
  auto [lhs, rhs] = evaluate(combo);
  auto diffs = entry_diffs(lhs, rhs);
  auto const& d = diffs.front();
  Json w;
  w["combination"] = combo;
  Json pj = Json::array();
  for (size_t j = 0; j < letters.size(); ++j) {
    Json e;
    e["letter"] = letters[j];
    e["pattern"] = pats[digits[j]].str();
    pj.push_back(std::move(e));
  }
  w["patterns"] = std::move(pj);
  w["entry"] = Json::array({d.row + 1, d.col + 1});
  w["lhs"] = d.lhs.str();
  w["rhs"] = d.rhs.str();
  return CheckReport::fail(
      "mixed", scope + ": combination " + std::to_string(combo) +
                   " yields entry (" + std::to_string(d.row + 1) + "," +
                   std::to_string(d.col + 1) + ") " + d.lhs.str() + "  vs  " +
                   d.rhs.str(),
      std::move(w));
}

std::optional<NumericWitness> find_numeric_counterexample(
    int dim, std::vector<DiagonalPattern> const& allowed, Identity const& id,
    int lo, int hi, VerifyOptions const& opt) {
  if (lo > hi) {
    throw std::invalid_argument("find_numeric_counterexample: empty range");
  }
  auto letters = identity_letters(id);
  size_t const P = allowed.size();
  size_t const upper = size_t(dim) * (dim - 1) / 2;
  uint64_t const R = uint64_t(hi - lo) + 1;
  uint64_t points = 1;
  for (size_t v = 0; v < upper * letters.size(); ++v) {
    if (points > UINT64_MAX / R) {
      throw std::invalid_argument(
          "find_numeric_counterexample: search space too large to enumerate");
    }
    points *= R;
  }
  uint64_t combos = 1;
  for (size_t j = 0; j < letters.size(); ++j) {
    combos *= P;
  }

  for (uint64_t combo = 0; combo < combos; ++combo) {
    auto digits = combo_digits(combo, P, letters.size());
    SymAssignment asg;
    for (size_t j = 0; j < letters.size(); ++j) {
      asg.emplace(letters[j],
                  fresh_symbolic(dim, allowed[digits[j]], letters[j]));
    }
    SymMatrix lsym = eval_word(id.lhs, asg);
    SymMatrix rsym = eval_word(id.rhs, asg);
    auto diffs = entry_diffs(lsym, rsym);
    if (diffs.empty()) {
      continue;  // equal for every numeric assignment with these patterns
    }
    std::vector<Polynomial> deltas;
    for (auto const& d : diffs) {
      deltas.push_back(d.lhs - d.rhs);
    }
    // Decode: letters ascending from the most significant digit, entries
    // row-major within a letter.
    auto point_at = [&](uint64_t index) {
      std::map<EntryVar, Int> pt;
      uint64_t rem = index;
      size_t nvars = upper * letters.size();
      std::vector<int> vals(nvars);
      for (size_t v = nvars; v-- > 0;) {
        vals[v] = lo + int(rem % R);
        rem /= R;
      }
      size_t v = 0;
      for (size_t j = 0; j < letters.size(); ++j) {
        for (int r = 0; r < dim; ++r) {
          for (int c = r + 1; c < dim; ++c) {
            pt.emplace(EntryVar{letters[j], uint32_t(r) + 1, uint32_t(c) + 1},
                       vals[v++]);
          }
        }
      }
      return pt;
    };
    auto witness = first_witness(points, opt.workers, [&](uint64_t index) {
      auto pt = point_at(index);
      for (auto const& delta : deltas) {
        if (delta.eval_int(pt) != 0) {
          return true;
        }
      }
      return false;
    });
    if (!witness) {
      continue;  // no witness in range for this pattern combination
    }
    auto pt = point_at(*witness);
    NumericWitness out{{}, UpperTri<Int>(dim), UpperTri<Int>(dim)};
    std::map<uint32_t, UpperTri<Int>> num;
    for (size_t j = 0; j < letters.size(); ++j) {
      UpperTri<Int> m(dim);
      auto const& pat = allowed[digits[j]];
      for (int i = 0; i < dim; ++i) {
        m.at(i, i) = pat[size_t(i)];
        for (int c = i + 1; c < dim; ++c) {
          m.at(i, c) =
              pt.at(EntryVar{letters[j], uint32_t(i) + 1, uint32_t(c) + 1});
        }
      }
      out.assignment.emplace_back(letters[j], m);
      num.emplace(letters[j], std::move(m));
    }
    out.lhs = eval_word(id.lhs, num);
    out.rhs = eval_word(id.rhs, num);
    return out;
  }
  return std::nullopt;
}

Json witness_json(NumericWitness const& w) {
  Json j;
  Json asg = Json::array();
  for (auto const& [letter, m] : w.assignment) {
    Json e;
    e["letter"] = letter;
    e["matrix"] = matrix_json(m);
    asg.push_back(std::move(e));
  }
  j["assignment"] = std::move(asg);
  j["lhs"] = matrix_json(w.lhs);
  j["rhs"] = matrix_json(w.rhs);
  return j;
}

CheckReport diag_hom_check(int dim, DiagAlphabet const& alphabet) {
  auto pats = all_patterns(dim, alphabet);
  size_t checked = 0;
  for (auto const& p : pats) {
    for (auto const& q : pats) {
      SymMatrix a = fresh_symbolic(dim, p, 1);
      SymMatrix b = fresh_symbolic(dim, q, 2);
      DiagonalPattern dp = diag_of(a * b);
      std::vector<int> expect(static_cast<size_t>(dim));
      for (int i = 0; i < dim; ++i) {
        expect[size_t(i)] = p[size_t(i)] * q[size_t(i)];
      }
      if (dp != DiagonalPattern(expect)) {
        Json w;
        w["left_pattern"] = p.str();
        w["right_pattern"] = q.str();
        w["product_diagonal"] = dp.str();
        return CheckReport::fail(
            "diag-hom", "diagonal of product differs from product of "
                        "diagonals for patterns " +
                            p.str() + ", " + q.str(),
            std::move(w));
      }
      ++checked;
    }
  }
  return CheckReport::pass(
      "diag-hom",
      "diagonal extraction is multiplicative on all " +
          std::to_string(checked) + " pattern pairs (dim " +
          std::to_string(dim) + ", alphabet " + alphabet.name() +
          "); diagonal image has " + std::to_string(pats.size()) +
          " elements");
}

namespace {

SymMatrix embed_2x2(SymMatrix const& m) {
  SymMatrix e(3);
  e.at(0, 0) = m.at(0, 0);
  e.at(0, 2) = m.at(0, 1);
  e.at(2, 2) = m.at(1, 1);
  return e;  // middle row and column are zero
}

}  // namespace

CheckReport embedding_check() {
  auto pats = all_patterns(2, DiagAlphabet::zero_one());
  CheckReport top = CheckReport::pass(
      "embedding", "corner embedding of 2x2 into 3x3 triangular matrices");
  size_t mult_ok = 0;
  for (auto const& p : pats) {
    for (auto const& q : pats) {
      SymMatrix a = fresh_symbolic(2, p, 1);
      SymMatrix b = fresh_symbolic(2, q, 2);
      if (embed_2x2(a * b) == embed_2x2(a) * embed_2x2(b)) {
        ++mult_ok;
      }
    }
  }
  top.add_child(mult_ok == pats.size() * pats.size()
                    ? CheckReport::pass("multiplicative",
                                        "all 16 pattern pairs commute with "
                                        "the embedding")
                    : CheckReport::fail("multiplicative",
                                        std::to_string(mult_ok) +
                                            "/16 pattern pairs commute"));
  size_t star_ok = 0;
  for (auto const& p : pats) {
    SymMatrix a = fresh_symbolic(2, p, 1);
    if (embed_2x2(skew_transpose(a)) == skew_transpose(embed_2x2(a))) {
      ++star_ok;
    }
  }
  top.add_child(star_ok == pats.size()
                    ? CheckReport::pass("involution",
                                        "skew transpose commutes with the "
                                        "embedding on all 4 patterns")
                    : CheckReport::fail("involution",
                                        std::to_string(star_ok) +
                                            "/4 patterns commute"));
  // The coordinate map (1,1)->(1,1), (1,2)->(1,3), (2,2)->(3,3) sends
  // distinct positions to distinct positions.
  top.add_child(CheckReport::pass(
      "injective", "coordinate map sends distinct positions to distinct "
                   "positions"));
  return top;
}

}  // namespace idsem
