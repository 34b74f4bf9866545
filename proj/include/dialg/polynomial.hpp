#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dialg/rational.hpp"
#include "dialg/term.hpp"

namespace dialg {

/// Finite rational linear combination of terms; zero coefficients are never stored.
class Polynomial {
 public:
  using Map = std::map<Term, Rational>;

  Polynomial() = default;
  explicit Polynomial(Term t, Rational c = 1) { add(std::move(t), c); }

  void add(const Term& t, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (inserted) {
      it->second.canonicalize();
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(long s, Polynomial a) { return a *= Rational(s); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

  /// Common degree of all monomials, if homogeneous and nonzero.
  std::optional<std::size_t> degree() const {
    std::optional<std::size_t> d;
    for (const auto& [t, c] : terms_) {
      if (d && *d != t.degree()) return std::nullopt;
      d = t.degree();
    }
    return d;
  }

  std::vector<Variable> variables() const {
    std::set<Variable> s;
    for (const auto& [t, c] : terms_) {
      for (auto& v : t.leaves()) s.insert(std::move(v));
    }
    return {s.begin(), s.end()};
  }

  /// Every monomial contains each of the same variables exactly once.
  bool is_multilinear() const {
    std::optional<std::vector<Variable>> common;
    for (const auto& [t, c] : terms_) {
      auto l = t.leaves();
      std::sort(l.begin(), l.end());
      if (std::adjacent_find(l.begin(), l.end()) != l.end()) return false;
      if (common && *common != l) return false;
      common = std::move(l);
    }
    return true;
  }

  Signature signature() const {
    Signature s = Signature::Empty;
    for (const auto& [t, c] : terms_) s = join(s, signature_of(t));
    return s;
  }

 private:
  Map terms_;
};

inline Polynomial poly(const Term& t) { return Polynomial(t); }
inline Polynomial poly(const char* name) { return Polynomial(leaf(name)); }
inline Polynomial poly(const Variable& v) { return Polynomial(Term::leaf(v)); }

/// A polynomial asserted to vanish identically.
struct Identity {
  std::string label;
  Polynomial poly;
  /// Original form before linearization, kept for display.
  std::optional<Polynomial> nonlinear;
};

/// Multilinear extension of an operation to polynomial arguments (no normalisation).
inline Polynomial apply(OpTag tag, std::span<const Polynomial> args) {
  if (args.size() != tag.arity) throw ArityError("wrong number of operation arguments");
  Polynomial out;
  std::vector<Polynomial::Map::const_iterator> pos(args.size());
  for (const Polynomial& a : args) {
    if (a.is_zero()) return out;
  }
  for (std::size_t i = 0; i < args.size(); ++i) pos[i] = args[i].terms().begin();
  while (true) {
    std::vector<Term> kids;
    Rational c = 1;
    for (std::size_t i = 0; i < args.size(); ++i) {
      kids.push_back(pos[i]->first);
      c *= pos[i]->second;
    }
    out.add(Term::node(tag, std::move(kids)), c);
    std::size_t i = args.size();
    while (i > 0) {
      --i;
      if (++pos[i] != args[i].terms().end()) break;
      pos[i] = args[i].terms().begin();
      if (i == 0) return out;
    }
  }
}

inline Polynomial product(OpTag tag, const Polynomial& a, const Polynomial& b) {
  const Polynomial args[] = {a, b};
  return dialg::apply(tag, args);
}
inline Polynomial times(const Polynomial& a, const Polynomial& b) { return product(OpTag::plain(), a, b); }
inline Polynomial left(const Polynomial& a, const Polynomial& b) { return product(OpTag::left(), a, b); }
inline Polynomial right(const Polynomial& a, const Polynomial& b) { return product(OpTag::right(), a, b); }

/// Termwise map, collecting like terms.
inline Polynomial map_terms(const Polynomial& p, const std::function<Polynomial(const Term&)>& f) {
  Polynomial out;
  for (const auto& [t, c] : p.terms()) out += c * f(t);
  return out;
}

inline Polynomial canonicalize(const Polynomial& p) {
  Polynomial out;
  for (const auto& [t, c] : p.terms()) out.add(canonicalize(t), c);
  return out;
}

inline Polynomial erase_tags(const Polynomial& p) {
  Polynomial out;
  for (const auto& [t, c] : p.terms()) out.add(erase_tags(t), c);
  return out;
}

using Assignment = std::map<Variable, Polynomial>;

/// Simultaneous substitution without normalisation. Variables missing from the
/// assignment are left in place.
inline Polynomial substitute_raw(const Term& t, const Assignment& a) {
  if (t.is_leaf()) {
    auto it = a.find(t.variable());
    return it == a.end() ? Polynomial(t) : it->second;
  }
  std::vector<Polynomial> kids;
  kids.reserve(t.children().size());
  for (const Term& k : t.children()) kids.push_back(substitute_raw(k, a));
  return dialg::apply(t.tag(), kids);
}

inline Polynomial substitute_raw(const Polynomial& p, const Assignment& a) {
  Polynomial out;
  for (const auto& [t, c] : p.terms()) out += c * substitute_raw(t, a);
  return out;
}

/// Substitution followed by bar-identity normalisation and collection of like terms.
inline Polynomial substitute(const Polynomial& p, const Assignment& a) {
  Polynomial out = substitute_raw(p, a);
  if (out.signature() == Signature::Mixed) {
    throw SignatureError("substitution mixes operation families");
  }
  return canonicalize(out);
}

inline Polynomial rename(const Polynomial& p, const std::map<Variable, Variable>& m) {
  Assignment a;
  for (const auto& [from, to] : m) a.emplace(from, poly(to));
  return substitute_raw(p, a);
}

/// Sends a dialgebra polynomial to the one-operation algebra in which
/// x -| y = xy and x |- y = -yx (right product expressed through the left one).
inline Polynomial collapse_right_anticommutative(const Polynomial& p) {
  auto rec = [](auto&& self, const Term& t) -> std::pair<int, Term> {
    if (t.is_leaf()) return {1, t};
    if (t.tag().kind != OpKind::Left && t.tag().kind != OpKind::Right) {
      throw SignatureError("collapse expects a dialgebra polynomial");
    }
    auto [sl, l] = self(self, t.child(0));
    auto [sr, r] = self(self, t.child(1));
    if (t.tag().kind == OpKind::Left) return {sl * sr, times(std::move(l), std::move(r))};
    return {-sl * sr, times(std::move(r), std::move(l))};
  };
  Polynomial out;
  for (const auto& [t, c] : p.terms()) {
    auto [s, m] = rec(rec, t);
    out.add(m, s * c);
  }
  return out;
}

/// Full polarization of `x`: in every monomial, its k occurrences are replaced by
/// the fresh variables in all k! orders and the results summed. Fresh names are
/// x1, x2, ... unless given.
inline Polynomial linearize(const Polynomial& p, const Variable& x,
                            std::vector<Variable> fresh = {}) {
  Polynomial out;
  for (const auto& [t, c] : p.terms()) {
    const auto leaves = t.leaves();
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (leaves[i] == x) slots.push_back(i);
    }
    if (fresh.empty()) {
      for (std::size_t i = 1; i <= slots.size(); ++i) fresh.emplace_back(x.name + std::to_string(i));
    }
    if (fresh.size() != slots.size()) {
      throw MultilinearityError("variable " + x.name + " has inconsistent multiplicity");
    }
    std::vector<std::size_t> perm(slots.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      auto names = leaves;
      for (std::size_t k = 0; k < slots.size(); ++k) names[slots[k]] = fresh[perm[k]];
      out.add(with_leaves(t, names), c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

/// Linearizes every repeated variable, yielding a multilinear polynomial.
inline Polynomial linearize_all(const Polynomial& p) {
  Polynomial cur = p;
  if (cur.is_zero()) return cur;
  while (true) {
    const auto leaves = cur.terms().begin()->first.leaves();
    std::map<Variable, int> count;
    for (const auto& v : leaves) ++count[v];
    auto it = std::find_if(count.begin(), count.end(), [](const auto& kv) { return kv.second > 1; });
    if (it == count.end()) return cur;
    cur = linearize(cur, it->first);
  }
}

/// Multilinear input is returned as is; anything else is fully polarized.
inline Polynomial multilinear_form(const Polynomial& p) { return p.is_multilinear() ? p : linearize_all(p); }

}  // namespace dialg
