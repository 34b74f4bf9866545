#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dialg/polynomial.hpp"
#include "dialg/qlinalg.hpp"

namespace dialg {

enum class Ambient {
  Plain,                 // free nonassociative algebra
  Dialgebra,             // free 0-dialgebra (bar identities built in)
  RightAnticommutative,  // free algebra modulo x(yz) + x(zy)
};

inline const char* to_string(Ambient a) {
  switch (a) {
    case Ambient::Plain: return "plain";
    case Ambient::Dialgebra: return "dialgebra";
    case Ambient::RightAnticommutative: return "ra";
  }
  return "?";
}

inline std::optional<Ambient> parse_ambient(std::string_view s) {
  if (s == "plain") return Ambient::Plain;
  if (s == "dialgebra") return Ambient::Dialgebra;
  if (s == "ra") return Ambient::RightAnticommutative;
  return std::nullopt;
}

/// Signature of the free object underlying an ambient space.
inline Signature signature_of(Ambient a) {
  return a == Ambient::Dialgebra ? Signature::Dialgebra : Signature::Plain;
}

/// a, b, c, ... as used for basis listings.
inline std::vector<Variable> default_variables(std::size_t n) {
  std::vector<Variable> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

inline std::size_t catalan(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

inline std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

namespace detail {

inline std::vector<Term> binary_trees(std::size_t n) {
  if (n == 1) return {Term::leaf(Variable("_"))};
  std::vector<Term> out;
  for (std::size_t i = 1; i < n; ++i) {
    for (const Term& l : binary_trees(i))
      for (const Term& r : binary_trees(n - i)) out.push_back(times(l, r));
  }
  return out;
}

}  // namespace detail

/// Binary association types of a degree, leaves a, b, c, ... in order, sorted by
/// `compare_shapes`.
inline std::vector<Term> plain_shapes(std::size_t degree) {
  require_degree(degree);
  if (degree == 0) return {};
  auto trees = detail::binary_trees(degree);
  std::sort(trees.begin(), trees.end(), [](const Term& a, const Term& b) { return compare_shapes(a, b) < 0; });
  const auto names = default_variables(degree);
  for (Term& t : trees) t = with_leaves(t, names);
  return trees;
}

struct AssociationType {
  Term shape;
  std::optional<std::size_t> center;  // 0-based leaf index, dialgebra types only
};

inline AssociationType make_type(const Term& shape, std::optional<std::size_t> center) {
  return {center ? point_at(shape, *center) : shape, center};
}

/// Oriented straightening for the right-anticommutative quotient.
///
/// The relation u(vw) = -u(wv) may be applied at any product whose right factor is a
/// product. A monomial's class under these swaps is explored exhaustively; the
/// representative minimises (number of products whose right factor is a product,
/// association type, leaf sequence). In degree 4 this removes type a(b(cd)) in favour
/// of -a((cd)b), and orders the arguments of each skew-symmetric pair alphabetically.
struct StraighteningRules {
  /// Signed representative of the class, or nullopt if the class is zero.
  std::optional<std::pair<int, Term>> normal_form(const Term& t) const {
    if (t.is_leaf()) return std::pair{1, t};
    std::map<Term, int> seen{{t, 1}};
    std::deque<Term> queue{t};
    while (!queue.empty()) {
      Term cur = std::move(queue.front());
      queue.pop_front();
      const int sign = seen.at(cur);
      for (Term& n : swaps(cur)) {
        auto [it, inserted] = seen.try_emplace(n, -sign);
        if (inserted) {
          queue.push_back(std::move(n));
        } else if (it->second != -sign) {
          return std::nullopt;
        }
      }
    }
    auto best = seen.begin();
    std::size_t best_count = right_products(best->first);
    for (auto it = std::next(seen.begin()); it != seen.end(); ++it) {
      const std::size_t c = right_products(it->first);
      if (c < best_count) {
        best = it;
        best_count = c;
      }
    }
    return std::pair{best->second, best->first};
  }

  /// Every monomial obtained by one swap u(vw) -> u(wv).
  static std::vector<Term> swaps(const Term& t) {
    std::vector<Term> out;
    if (t.is_leaf()) return out;
    if (t.tag().arity != 2 || !t.tag().is_plain()) throw SignatureError("straightening expects binary plain terms");
    const Term& l = t.child(0);
    const Term& r = t.child(1);
    if (!r.is_leaf()) out.push_back(Term::binary(t.tag(), l, Term::binary(r.tag(), r.child(1), r.child(0))));
    for (Term& n : swaps(l)) out.push_back(Term::binary(t.tag(), std::move(n), r));
    for (Term& n : swaps(r)) out.push_back(Term::binary(t.tag(), l, std::move(n)));
    return out;
  }

  static std::size_t right_products(const Term& t) {
    if (t.is_leaf()) return 0;
    std::size_t n = t.child(1).is_leaf() ? 0 : 1;
    for (const Term& k : t.children()) n += right_products(k);
    return n;
  }
};

/// Ordered multilinear basis of a fixed degree on fixed variables.
class MonomialBasis {
 public:
  MonomialBasis(Ambient ambient, std::vector<Variable> variables, std::vector<Term> monomials)
      : ambient_(ambient), variables_(std::move(variables)), monomials_(std::move(monomials)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
      if (!index_.emplace(monomials_[i], i).second) throw Error("duplicate basis monomial");
    }
  }

  Ambient ambient() const noexcept { return ambient_; }
  std::size_t degree() const noexcept { return variables_.size(); }
  std::size_t dimension() const noexcept { return monomials_.size(); }
  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const std::vector<Term>& monomials() const noexcept { return monomials_; }
  const Term& at(std::size_t i) const { return monomials_.at(i); }

  std::optional<std::size_t> index_of(const Term& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  Ambient ambient_;
  std::vector<Variable> variables_;
  std::vector<Term> monomials_;
  std::map<Term, std::size_t> index_;
};

namespace detail {

inline std::vector<std::vector<Variable>> permutations_of(std::vector<Variable> vs) {
  std::sort(vs.begin(), vs.end());
  std::vector<std::vector<Variable>> out;
  do {
    out.push_back(vs);
  } while (std::next_permutation(vs.begin(), vs.end()));
  return out;
}

}  // namespace detail

inline MonomialBasis make_basis(Ambient ambient, std::vector<Variable> variables) {
  std::sort(variables.begin(), variables.end());
  if (std::adjacent_find(variables.begin(), variables.end()) != variables.end()) {
    throw Error("basis variables must be distinct");
  }
  const std::size_t n = variables.size();
  require_degree(n);
  std::vector<Term> monos;
  const auto perms = detail::permutations_of(variables);
  for (const Term& shape : plain_shapes(n)) {
    for (const auto& p : perms) {
      const Term m = with_leaves(shape, p);
      switch (ambient) {
        case Ambient::Plain: monos.push_back(m); break;
        case Ambient::Dialgebra:
          for (std::size_t c = 0; c < n; ++c) monos.push_back(point_at(m, c));
          break;
        case Ambient::RightAnticommutative:
          if (auto nf = StraighteningRules{}.normal_form(m)) monos.push_back(nf->second);
          break;
      }
    }
  }
  std::sort(monos.begin(), monos.end());
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  return MonomialBasis(ambient, std::move(variables), std::move(monos));
}

inline MonomialBasis make_basis(std::size_t degree, Ambient ambient) {
  return make_basis(ambient, default_variables(degree));
}

/// The 60 right-anticommutative monomials of degree 4 on a, b, c, d.
inline MonomialBasis ra_degree4_basis() { return make_basis(4, Ambient::RightAnticommutative); }

/// Plain: the Catalan(degree-1) binary shapes. Dialgebra: (shape, center) pairs.
/// Right-anticommutative: the shapes that occur among straightened monomials.
inline std::vector<AssociationType> association_types(std::size_t degree, Ambient ambient) {
  std::vector<AssociationType> out;
  switch (ambient) {
    case Ambient::Plain:
      for (const Term& s : plain_shapes(degree)) out.push_back(make_type(s, std::nullopt));
      break;
    case Ambient::Dialgebra:
      for (const Term& s : plain_shapes(degree))
        for (std::size_t c = 0; c < degree; ++c) out.push_back(make_type(s, c));
      break;
    case Ambient::RightAnticommutative: {
      const auto basis = make_basis(degree, ambient);
      const auto names = default_variables(degree);
      for (const Term& m : basis.monomials()) {
        const Term s = with_leaves(m, names);
        if (out.empty() || !(out.back().shape == s)) out.push_back(make_type(s, std::nullopt));
      }
      break;
    }
  }
  return out;
}

/// Signed basis coordinate of one monomial, or nullopt if it vanishes in the quotient.
inline std::optional<std::pair<int, std::size_t>> locate(const Term& t, const MonomialBasis& basis,
                                                         const StraighteningRules& rules = {}) {
  Term m = t;
  int sign = 1;
  switch (basis.ambient()) {
    case Ambient::Plain:
      if (signature_of(t) == Signature::Dialgebra || signature_of(t) == Signature::Slot) {
        throw SignatureError("dialgebra monomial in a one-operation space");
      }
      break;
    case Ambient::Dialgebra:
      if (signature_of(t) == Signature::Plain) throw SignatureError("one-operation monomial in a dialgebra space");
      m = canonicalize(t);
      break;
    case Ambient::RightAnticommutative: {
      if (signature_of(t) == Signature::Dialgebra) throw SignatureError("dialgebra monomial in a one-operation space");
      auto nf = rules.normal_form(t);
      if (!nf) return std::nullopt;
      sign = nf->first;
      m = std::move(nf->second);
      break;
    }
  }
  const auto idx = basis.index_of(m);
  if (!idx) throw Error("monomial does not reach a basis element");
  return std::pair{sign, *idx};
}

inline SparseRow straighten_sparse(const Polynomial& p, const MonomialBasis& basis,
                                   const StraighteningRules& rules = {}) {
  std::map<std::size_t, Rational> acc;
  for (const auto& [t, c] : p.terms()) {
    if (t.degree() != basis.degree()) throw DegreeError("polynomial degree differs from basis degree");
    if (auto loc = locate(t, basis, rules)) acc[loc->second] += loc->first * c;
  }
  SparseRow out;
  for (auto& [i, q] : acc) {
    if (q != 0) out.emplace_back(i, std::move(q));
  }
  return out;
}

/// Coordinate vector of p in the basis after rewriting every monomial to normal form.
inline std::vector<Rational> straighten(const Polynomial& p, const StraighteningRules& rules,
                                        const MonomialBasis& basis) {
  return to_dense(straighten_sparse(p, basis, rules), basis.dimension());
}

inline std::vector<Rational> straighten(const Polynomial& p, const MonomialBasis& basis) {
  return straighten(p, StraighteningRules{}, basis);
}

/// Polynomial with the given coordinates.
inline Polynomial from_coordinates(std::span<const Rational> v, const MonomialBasis& basis) {
  Polynomial p;
  for (std::size_t i = 0; i < v.size(); ++i) p.add(basis.at(i), v[i]);
  return p;
}

inline Polynomial from_coordinates(const SparseRow& v, const MonomialBasis& basis) {
  Polynomial p;
  for (const auto& [i, q] : v) p.add(basis.at(i), q);
  return p;
}

/// All n! variable permutations of f, in lexicographic order of the image of the
/// sorted variable list.
inline std::vector<Polynomial> sn_orbit(const Polynomial& f) {
  const auto vs = f.variables();
  std::vector<Polynomial> out;
  for (const auto& image : detail::permutations_of(vs)) {
    std::map<Variable, Variable> m;
    for (std::size_t i = 0; i < vs.size(); ++i) m.emplace(vs[i], image[i]);
    out.push_back(rename(f, m));
  }
  return out;
}

/// Degree-raising by one fresh variable v: every non-frozen variable x is replaced by
/// its products with v (x-|v, x|-v, v-|x, v|-x in a dialgebra; xv, vx otherwise), then
/// f itself is multiplied by v on both sides with each operation.
inline std::vector<Polynomial> lift(const Polynomial& f, const Variable& v,
                                    const std::vector<Variable>& frozen = {},
                                    std::optional<Signature> signature = std::nullopt) {
  const auto vs = f.variables();
  if (std::find(vs.begin(), vs.end(), v) != vs.end()) throw Error("lift: variable " + v.name + " is not fresh");
  Signature sig = signature.value_or(f.signature());
  if (sig == Signature::Empty) sig = Signature::Plain;
  if (sig != Signature::Plain && sig != Signature::Dialgebra) throw SignatureError("lift expects binary signatures");
  std::vector<OpTag> ops;
  if (sig == Signature::Dialgebra) {
    ops = {OpTag::left(), OpTag::right()};
  } else {
    ops = {OpTag::plain()};
  }
  const Polynomial pv = poly(v);
  std::vector<Polynomial> out;
  for (const Variable& x : vs) {
    if (std::find(frozen.begin(), frozen.end(), x) != frozen.end()) continue;
    const Polynomial px = poly(x);
    for (const OpTag op : ops) out.push_back(substitute(f, {{x, product(op, px, pv)}}));
    for (const OpTag op : ops) out.push_back(substitute(f, {{x, product(op, pv, px)}}));
  }
  for (const OpTag op : ops) out.push_back(canonicalize(product(op, f, pv)));
  for (const OpTag op : ops) out.push_back(canonicalize(product(op, pv, f)));
  return out;
}

}  // namespace dialg
