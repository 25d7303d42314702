#include "idsem/finite_semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "idsem/parallel.hpp"

namespace idsem {

FiniteSemigroup::FiniteSemigroup(std::vector<std::string> names,
                                 std::vector<std::vector<int>> table,
                                 std::optional<std::vector<int>> star_in)
    : names_(std::move(names)),
      table_(std::move(table)),
      star_(std::move(star_in)) {
  size_t n = names_.size();
  if (n == 0) {
    throw std::invalid_argument("FiniteSemigroup: empty element set");
  }
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n) {
    throw std::invalid_argument("FiniteSemigroup: duplicate element names");
  }
  if (table_.size() != n) {
    throw std::invalid_argument("FiniteSemigroup: table is not square");
  }
  for (auto const& row : table_) {
    if (row.size() != n) {
      throw std::invalid_argument("FiniteSemigroup: table is not square");
    }
    for (int v : row) {
      if (v < 0 || size_t(v) >= n) {
        throw std::invalid_argument("FiniteSemigroup: table index out of range");
      }
    }
  }
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      for (size_t c = 0; c < n; ++c) {
        int left = mul(mul(int(a), int(b)), int(c));
        int right = mul(int(a), mul(int(b), int(c)));
        if (left != right) {
          throw std::invalid_argument(
              "FiniteSemigroup: associativity fails on (" + names_[a] + ", " +
              names_[b] + ", " + names_[c] + "): (" + names_[a] + names_[b] +
              ")" + names_[c] + " = " + names_[size_t(left)] + " but " +
              names_[a] + "(" + names_[b] + names_[c] + ") = " +
              names_[size_t(right)]);
        }
      }
    }
  }
  if (star_) {
    if (star_->size() != n) {
      throw std::invalid_argument("FiniteSemigroup: star table size mismatch");
    }
    for (int v : *star_) {
      if (v < 0 || size_t(v) >= n) {
        throw std::invalid_argument("FiniteSemigroup: star index out of range");
      }
    }
    for (size_t a = 0; a < n; ++a) {
      if (star(star(int(a))) != int(a)) {
        throw std::invalid_argument(
            "FiniteSemigroup: star is not involutive on " + names_[a]);
      }
    }
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        if (star(mul(int(a), int(b))) != mul(star(int(b)), star(int(a)))) {
          throw std::invalid_argument(
              "FiniteSemigroup: star is not an anti-automorphism on (" +
              names_[a] + ", " + names_[b] + ")");
        }
      }
    }
  }
}

int FiniteSemigroup::index_of(std::string const& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw std::invalid_argument("FiniteSemigroup: unknown element " + name);
  }
  return int(it - names_.begin());
}

std::vector<int> FiniteSemigroup::idempotents() const {
  std::vector<int> out;
  for (int e = 0; size_t(e) < size(); ++e) {
    if (mul(e, e) == e) {
      out.push_back(e);
    }
  }
  return out;
}

FiniteSemigroup FiniteSemigroup::from_json(Json const& j) {
  std::vector<std::string> names = j.at("elements");
  std::vector<std::vector<int>> table = j.at("table");
  std::optional<std::vector<int>> star;
  if (j.contains("star")) {
    star = std::vector<int>(j.at("star"));
  }
  return FiniteSemigroup(std::move(names), std::move(table), std::move(star));
}

Json FiniteSemigroup::to_json() const {
  Json j;
  j["elements"] = names_;
  j["table"] = table_;
  if (star_) {
    j["star"] = *star_;
  }
  return j;
}

namespace {

// Value of a word under an assignment of elements to unstarred letters.
int eval_in(FiniteSemigroup const& S, Word const& w,
            std::map<uint32_t, int> const& asg) {
  int acc = -1;
  for (auto const& a : w.letters()) {
    int e = asg.at(a.index);
    if (a.starred) {
      e = S.star(e);
    }
    acc = acc < 0 ? e : S.mul(acc, e);
  }
  return acc;
}

}  // namespace

CheckReport holds(FiniteSemigroup const& S, Identity const& id,
                  unsigned workers) {
  if (id.involutory && !S.has_star()) {
    throw std::invalid_argument(
        "holds: involutory identity against a semigroup without star");
  }
  auto l = id.lhs.letter_indices();
  auto r = id.rhs.letter_indices();
  std::vector<uint32_t> letters;
  std::set_union(l.begin(), l.end(), r.begin(), r.end(),
                 std::back_inserter(letters));
  size_t n = S.size();
  uint64_t total = 1;
  for (size_t j = 0; j < letters.size(); ++j) {
    if (total > UINT64_MAX / n) {
      throw std::invalid_argument("holds: assignment space too large");
    }
    total *= n;
  }
  auto assignment_at = [&](uint64_t index) {
    std::map<uint32_t, int> asg;
    uint64_t rem = index;
    for (size_t j = letters.size(); j-- > 0;) {
      asg[letters[j]] = int(rem % n);
      rem /= n;
    }
    return asg;
  };
  auto witness = first_witness(total, workers, [&](uint64_t index) {
    auto asg = assignment_at(index);
    return eval_in(S, id.lhs, asg) != eval_in(S, id.rhs, asg);
  });
  std::string scope = print_identity(id) + " over " + std::to_string(total) +
                      " assignments";
  if (!witness) {
    return CheckReport::pass("holds", scope + ": identity holds");
  }
  auto asg = assignment_at(*witness);
  Json w;
  Json aj = Json::array();
  for (uint32_t letter : letters) {
    Json e;
    e["letter"] = letter;
    e["element"] = S.name(asg[letter]);
    aj.push_back(std::move(e));
  }
  w["assignment"] = std::move(aj);
  std::string lname = S.name(eval_in(S, id.lhs, asg));
  std::string rname = S.name(eval_in(S, id.rhs, asg));
  w["lhs"] = lname;
  w["rhs"] = rname;
  return CheckReport::fail("holds",
                           scope + ": fails, sides evaluate to " + lname +
                               " vs " + rname,
                           std::move(w));
}

CheckReport check_iso(FiniteSemigroup const& S, FiniteSemigroup const& T,
                      std::vector<int> const& map) {
  if (S.size() != T.size() || map.size() != S.size()) {
    return CheckReport::fail("iso", "sizes differ or map is not total");
  }
  std::set<int> image(map.begin(), map.end());
  if (image.size() != map.size()) {
    return CheckReport::fail("iso", "map is not a bijection");
  }
  for (size_t a = 0; a < S.size(); ++a) {
    for (size_t b = 0; b < S.size(); ++b) {
      int via_s = map[size_t(S.mul(int(a), int(b)))];
      int via_t = T.mul(map[a], map[b]);
      if (via_s != via_t) {
        Json w;
        w["pair"] = Json::array({S.name(int(a)), S.name(int(b))});
        return CheckReport::fail(
            "iso", "multiplication not preserved on (" + S.name(int(a)) +
                       ", " + S.name(int(b)) + ")",
            std::move(w));
      }
    }
  }
  if (S.has_star() != T.has_star()) {
    return CheckReport::fail("iso", "one side lacks an involution");
  }
  if (S.has_star()) {
    for (size_t a = 0; a < S.size(); ++a) {
      if (map[size_t(S.star(int(a)))] != T.star(map[a])) {
        Json w;
        w["element"] = S.name(int(a));
        return CheckReport::fail(
            "iso", "star not preserved on " + S.name(int(a)), std::move(w));
      }
    }
  }
  return CheckReport::pass(
      "iso", "bijection preserves multiplication" +
                 std::string(S.has_star() ? " and star" : "") + " on all " +
                 std::to_string(S.size() * S.size()) + " pairs");
}

ClosureCapExceeded::ClosureCapExceeded(size_t count)
    : std::runtime_error("closure cap exceeded: " + std::to_string(count) +
                         " non-collapsed elements and still growing"),
      element_count(count) {}

namespace {

std::string matrix_key(UpperTri<Int> const& m) {
  std::string key = std::to_string(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = i; j < m.dim(); ++j) {
      key += ':';
      key += m.at(i, j).str();
    }
  }
  return key;
}

}  // namespace

MatrixClosure closure_with_ideal(
    std::vector<std::pair<std::string, UpperTri<Int>>> const& generators,
    std::function<bool(UpperTri<Int> const&)> const& ideal, size_t cap) {
  if (cap < 1 || generators.empty()) {
    throw std::invalid_argument("closure_with_ideal: need generators, cap >= 1");
  }
  std::vector<std::string> names;
  std::vector<UpperTri<Int>> reps;
  std::map<std::string, int> seen;
  std::optional<UpperTri<Int>> sink_rep;
  std::set<std::string> used_names;

  auto intern = [&](UpperTri<Int> const& m, std::string base_name) -> int {
    if (ideal(m)) {
      if (!sink_rep) {
        sink_rep = m;
      }
      return -1;  // the collapsed class
    }
    std::string key = matrix_key(m);
    auto it = seen.find(key);
    if (it != seen.end()) {
      return it->second;
    }
    if (reps.size() >= cap) {
      throw ClosureCapExceeded(reps.size() + 1);
    }
    std::string name = base_name;
    while (!used_names.insert(name).second) {
      name += "'";
    }
    int idx = int(reps.size());
    seen.emplace(std::move(key), idx);
    reps.push_back(m);
    names.push_back(std::move(name));
    return idx;
  };

  for (auto const& [name, g] : generators) {
    intern(g, name);
  }
  // Worklist by index: when element k is processed every element with a
  // smaller index already exists, so all pairs get covered.
  for (size_t k = 0; k < reps.size(); ++k) {
    for (size_t m = 0; m <= k; ++m) {
      UpperTri<Int> km = reps[k] * reps[m];
      intern(km, names[k] + names[m]);
      if (m != k) {
        UpperTri<Int> mk = reps[m] * reps[k];
        intern(mk, names[m] + names[k]);
      }
    }
    intern(skew_transpose(reps[k]), names[k] + "*");
  }

  int n = int(reps.size());
  int sink = sink_rep ? n : -1;
  int total = sink_rep ? n + 1 : n;
  if (sink_rep) {
    names.push_back("0");
    // The predicate must absorb products with the collapsed class.
    for (int a = 0; a < n; ++a) {
      if (!ideal(*sink_rep * reps[size_t(a)]) ||
          !ideal(reps[size_t(a)] * *sink_rep)) {
        throw std::logic_error(
            "closure_with_ideal: predicate is not an ideal (product with the "
            "sink escapes)");
      }
    }
    if (!ideal(*sink_rep * *sink_rep) || !ideal(skew_transpose(*sink_rep))) {
      throw std::logic_error(
          "closure_with_ideal: predicate is not star-closed on the sink");
    }
  }

  auto quotient_index = [&](UpperTri<Int> const& m) -> int {
    if (ideal(m)) {
      return sink;
    }
    return seen.at(matrix_key(m));
  };

  std::vector<std::vector<int>> table(
      static_cast<size_t>(total), std::vector<int>(static_cast<size_t>(total)));
  std::vector<int> star_table(static_cast<size_t>(total));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[size_t(a)][size_t(b)] = quotient_index(reps[size_t(a)] *
                                                   reps[size_t(b)]);
    }
    star_table[size_t(a)] = quotient_index(skew_transpose(reps[size_t(a)]));
  }
  if (sink >= 0) {
    for (int a = 0; a < total; ++a) {
      table[size_t(a)][size_t(sink)] = sink;
      table[size_t(sink)][size_t(a)] = sink;
    }
    star_table[size_t(sink)] = sink;
  }

  MatrixClosure out{
      FiniteSemigroup(std::move(names), std::move(table),
                      std::move(star_table)),
      std::move(reps), sink};
  if (sink_rep) {
    out.representatives.push_back(*sink_rep);
  }
  return out;
}

}  // namespace idsem
