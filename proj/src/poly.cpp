#include "idsem/poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace idsem {

std::string print_var(EntryVar v) {
  return "x" + std::to_string(v.letter) + "_" + std::to_string(v.row) +
         std::to_string(v.col);
}

uint32_t Monomial::degree() const {
  uint32_t d = 0;
  for (auto const& [v, e] : factors_) {
    d += e;
  }
  return d;
}

Monomial Monomial::merged(Monomial const& a, Monomial const& b) {
  Monomial out;
  auto ia = a.factors_.begin(), ea = a.factors_.end();
  auto ib = b.factors_.begin(), eb = b.factors_.end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      out.factors_.push_back(*ia++);
    } else if (ia == ea || ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool Monomial::less(Monomial const& a, Monomial const& b) {
  uint32_t da = a.degree(), db = b.degree();
  if (da != db) {
    return da < db;
  }
  // Lexicographic on the flattened variable sequence; at a shared
  // variable the higher exponent sorts first.
  auto ia = a.factors_.begin(), ea = a.factors_.end();
  auto ib = b.factors_.begin(), eb = b.factors_.end();
  while (ia != ea && ib != eb) {
    if (ia->first != ib->first) {
      return ia->first < ib->first;
    }
    if (ia->second != ib->second) {
      return ia->second > ib->second;
    }
    ++ia;
    ++ib;
  }
  return false;  // equal degree and all runs matched: equal monomials
}

Polynomial Polynomial::constant(Int c) {
  Polynomial p;
  if (c != 0) {
    p.terms_.emplace_back(Monomial{}, std::move(c));
  }
  return p;
}

Polynomial Polynomial::var(EntryVar v) {
  Polynomial p;
  p.terms_.emplace_back(Monomial(v), 1);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.front().first.is_constant());
}

Int Polynomial::constant_value() const {
  if (terms_.empty()) {
    return 0;
  }
  if (!is_constant()) {
    throw std::logic_error("constant_value: polynomial is not constant");
  }
  return terms_.front().second;
}

std::vector<EntryVar> Polynomial::variables() const {
  std::set<EntryVar> vars;
  for (auto const& [m, c] : terms_) {
    for (auto const& [v, e] : m.factors()) {
      vars.insert(v);
    }
  }
  return {vars.begin(), vars.end()};
}

Polynomial& Polynomial::operator+=(Polynomial const& o) {
  std::vector<std::pair<Monomial, Int>> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto ia = terms_.begin(), ea = terms_.end();
  auto ib = o.terms_.begin(), eb = o.terms_.end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && Monomial::less(ia->first, ib->first))) {
      out.push_back(*ia++);
    } else if (ia == ea || Monomial::less(ib->first, ia->first)) {
      out.push_back(*ib++);
    } else {
      Int c = ia->second + ib->second;
      if (c != 0) {
        out.emplace_back(ia->first, std::move(c));
      }
      ++ia;
      ++ib;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(Polynomial const& o) { return *this += -o; }

Polynomial operator+(Polynomial a, Polynomial const& b) { return a += b; }

Polynomial operator-(Polynomial a, Polynomial const& b) { return a -= b; }

Polynomial operator-(Polynomial const& a) {
  Polynomial out = a;
  for (auto& [m, c] : out.terms_) {
    c = -c;
  }
  return out;
}

Polynomial operator*(Polynomial const& a, Polynomial const& b) {
  std::map<Monomial, Int, bool (*)(Monomial const&, Monomial const&)> acc(
      &Monomial::less);
  for (auto const& [ma, ca] : a.terms_) {
    for (auto const& [mb, cb] : b.terms_) {
      acc[Monomial::merged(ma, mb)] += ca * cb;
    }
  }
  Polynomial out;
  for (auto& [m, c] : acc) {
    if (c != 0) {
      out.terms_.emplace_back(m, std::move(c));
    }
  }
  return out;
}

Polynomial operator*(Int const& c, Polynomial const& p) {
  if (c == 0) {
    return {};
  }
  Polynomial out = p;
  for (auto& [m, k] : out.terms_) {
    k *= c;
  }
  return out;
}

Rational Polynomial::eval(std::map<EntryVar, Rational> const& asg) const {
  Rational total = 0;
  for (auto const& [m, c] : terms_) {
    Rational term(c);
    for (auto const& [v, e] : m.factors()) {
      auto it = asg.find(v);
      if (it == asg.end()) {
        throw std::invalid_argument("eval: no value for " + print_var(v));
      }
      for (uint32_t k = 0; k < e; ++k) {
        term *= it->second;
      }
    }
    total += term;
  }
  return total;
}

Int Polynomial::eval_int(std::map<EntryVar, Int> const& asg) const {
  Int total = 0;
  for (auto const& [m, c] : terms_) {
    Int term = c;
    for (auto const& [v, e] : m.factors()) {
      auto it = asg.find(v);
      if (it == asg.end()) {
        throw std::invalid_argument("eval_int: no value for " + print_var(v));
      }
      for (uint32_t k = 0; k < e; ++k) {
        term *= it->second;
      }
    }
    total += term;
  }
  return total;
}

std::string Polynomial::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    auto const& [m, c] = terms_[i];
    Int abs = c < 0 ? Int(-c) : c;
    if (i == 0) {
      if (c < 0) {
        s += '-';
      }
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    bool show_coeff = m.is_constant() || abs != 1;
    if (show_coeff) {
      s += abs.str();
    }
    bool first_var = true;
    for (auto const& [v, e] : m.factors()) {
      if (!first_var || show_coeff) {
        s += '*';
      }
      first_var = false;
      s += print_var(v);
      if (e > 1) {
        s += '^' + std::to_string(e);
      }
    }
  }
  return s;
}

}  // namespace idsem
