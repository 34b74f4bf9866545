#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dialg/macros.hpp"
#include "dialg/parser.hpp"
#include "dialg/polynomial.hpp"
#include "dialg/qlinalg.hpp"
#include "dialg/spaces.hpp"

namespace dialg {

// ---------------------------------------------------------------------------
// Free associative dialgebra

/// Word with a marked position; `center` is 1-based.
struct PointedWord {
  std::vector<Variable> word;
  std::size_t center = 1;

  friend bool operator==(const PointedWord&, const PointedWord&) = default;
  friend auto operator<=>(const PointedWord&, const PointedWord&) = default;
};

using PointedCombination = std::map<PointedWord, Rational>;

inline PointedWord normal_form_assoc_dialgebra(const Term& t) {
  const Signature s = signature_of(t);
  if (s != Signature::Dialgebra && s != Signature::Empty) {
    throw SignatureError("pointed words are defined for dialgebra monomials");
  }
  return {t.leaves(), *center_index(t) + 1};
}

inline PointedCombination normal_form_assoc_dialgebra(const Polynomial& p) {
  PointedCombination out;
  for (const auto& [t, c] : p.terms()) {
    auto [it, inserted] = out.try_emplace(normal_form_assoc_dialgebra(t), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

inline std::string print(const PointedWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.word.size(); ++i) {
    if (i) s += ' ';
    s += i + 1 == w.center ? "[" + w.word[i].name + "]" : w.word[i].name;
  }
  return s;
}

inline std::string print(const PointedCombination& c) {
  if (c.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, q] : c) {
    if (!first) s += q < 0 ? " - " : " + ";
    else if (q < 0) s += "-";
    first = false;
    const Rational a = abs(q);
    if (a != 1) s += a.get_str() + " * ";
    s += "(" + print(w) + ")";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Verdicts and identity modules

struct Verdict {
  bool holds = false;
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> dims;
  std::vector<std::string> generators;
  /// Remainder of the target after reduction; empty iff `holds`.
  SparseRow residual;
  Polynomial residual_poly;
};

/// Span of straightened identities inside one multilinear space.
class IdentityModule {
 public:
  explicit IdentityModule(MonomialBasis basis) : basis_(std::move(basis)), echelon_(basis_.dimension()) {}

  const MonomialBasis& basis() const noexcept { return basis_; }

  /// Returns true if the rank increased.
  bool add(const Polynomial& f) {
    SparseRow r = straighten_sparse(f, basis_);
    rows_.push_back(r);
    return echelon_.add(r);
  }

  void add_orbit(const Polynomial& f) {
    for (const Polynomial& g : sn_orbit(f)) add(g);
  }

  std::size_t rank() const noexcept { return echelon_.rank(); }
  std::size_t row_count() const noexcept { return rows_.size(); }
  const std::vector<SparseRow>& rows() const noexcept { return rows_; }

  SparseRow residual(const Polynomial& f) const { return echelon_.residual(straighten_sparse(f, basis_)); }
  bool contains(const Polynomial& f) const { return residual(f).empty(); }

  QMatrix matrix() const {
    QMatrix m(0, basis_.dimension());
    for (const SparseRow& r : rows_) m.append_row(to_dense(r, basis_.dimension()));
    return m;
  }

 private:
  MonomialBasis basis_;
  SparseEchelon echelon_;
  std::vector<SparseRow> rows_;
};

namespace detail {

inline void check_signature(const Polynomial& p, Ambient ambient) {
  const Signature s = p.signature();
  if (s == Signature::Empty) return;
  if (s != signature_of(ambient)) {
    throw SignatureError(std::string("a ") + to_string(s) + " identity cannot live in the " + to_string(ambient) +
                         " space");
  }
}

inline std::vector<Variable> target_variables(const Polynomial& target, std::size_t degree) {
  if (target.is_zero()) return default_variables(degree);
  if (!target.is_multilinear()) throw MultilinearityError("target must be multilinear");
  if (target.degree() != degree) throw DegreeError("target degree differs from the requested degree");
  return target.variables();
}

inline std::vector<Polynomial> dedupe(std::vector<Polynomial> v) {
  std::set<Polynomial> seen;
  std::vector<Polynomial> out;
  for (Polynomial& p : v) {
    if (!p.is_zero() && seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace detail

/// Copies of g of the target degree: g is renamed onto the first target variables,
/// then lifted once per missing variable, in order.
inline std::vector<Polynomial> raise_to_degree(const Polynomial& g, const std::vector<Variable>& target_vars,
                                               Signature sig, const std::vector<Variable>& frozen = {}) {
  if (g.is_zero()) return {};
  if (!g.is_multilinear()) throw MultilinearityError("generators must be multilinear");
  const auto gv = g.variables();
  if (gv.size() > target_vars.size()) throw DegreeError("generator degree exceeds the target degree");
  std::map<Variable, Variable> m;
  for (std::size_t k = 0; k < gv.size(); ++k) m.emplace(gv[k], target_vars[k]);
  std::vector<Polynomial> cur{rename(g, m)};
  for (std::size_t k = gv.size(); k < target_vars.size(); ++k) {
    std::vector<Polynomial> next;
    for (const Polynomial& f : cur) {
      for (Polynomial& h : lift(f, target_vars[k], frozen, sig)) next.push_back(std::move(h));
    }
    cur = detail::dedupe(std::move(next));
  }
  return cur;
}

/// Adds the S_n-module generated by g (lifted to the module's degree).
inline void add_generator(IdentityModule& mod, const Polynomial& g) {
  detail::check_signature(g, mod.basis().ambient());
  const Signature sig = signature_of(mod.basis().ambient());
  for (const Polynomial& f : raise_to_degree(multilinear_form(g), mod.basis().variables(), sig)) {
    mod.add_orbit(f);
  }
}

inline std::size_t effective_degree_cap() {
  std::size_t cap = kMaxDegree;
  if (const char* env = std::getenv("DIALG_MAX_DEGREE")) {
    try {
      cap = std::min<std::size_t>(cap, std::stoul(env));
    } catch (const std::exception&) {
    }
  }
  return cap;
}

/// f is a consequence of the generators if its straightened vector lies in the
/// S_n-module they generate (lower degree generators are lifted first).
inline Verdict is_consequence(const Polynomial& nonlinear_target, const std::vector<Identity>& generators,
                              Ambient ambient, std::size_t degree, std::size_t cap = effective_degree_cap()) {
  require_degree(degree, cap);
  const Polynomial target = multilinear_form(nonlinear_target);
  detail::check_signature(target, ambient);
  IdentityModule mod(make_basis(ambient, detail::target_variables(target, degree)));
  Verdict v;
  for (const Identity& g : generators) {
    add_generator(mod, g.poly);
    v.generators.push_back(g.label);
  }
  v.residual = mod.residual(target);
  v.holds = v.residual.empty();
  v.residual_poly = from_coordinates(v.residual, mod.basis());
  v.ranks = {mod.rank(), mod.rank() + (v.holds ? 0 : 1)};
  v.dims = {mod.basis().dimension(), mod.row_count()};
  return v;
}

/// Mutual consequence of two generator lists at one degree.
inline Verdict are_equivalent(const std::vector<Identity>& f, const std::vector<Identity>& g, Ambient ambient,
                              std::size_t degree, std::size_t cap = effective_degree_cap()) {
  require_degree(degree, cap);
  const auto basis = make_basis(degree, ambient);
  IdentityModule mf(basis), mg(basis), both(basis);
  Verdict v;
  for (const Identity& id : f) {
    add_generator(mf, id.poly);
    add_generator(both, id.poly);
    v.generators.push_back(id.label);
  }
  for (const Identity& id : g) {
    add_generator(mg, id.poly);
    add_generator(both, id.poly);
    v.generators.push_back(id.label);
  }
  v.ranks = {mf.rank(), mg.rank(), both.rank()};
  v.dims = {basis.dimension()};
  v.holds = mf.rank() == both.rank() && mg.rank() == both.rank();
  if (!v.holds) {
    const IdentityModule& small = mf.rank() < both.rank() ? mf : mg;
    const IdentityModule& large = mf.rank() < both.rank() ? mg : mf;
    for (const SparseRow& r : large.rows()) {
      SparseEchelon e(basis.dimension());
      for (const SparseRow& s : small.rows()) e.add(s);
      if (!e.contains(r)) {
        v.residual = e.residual(r);
        v.residual_poly = from_coordinates(v.residual, basis);
        break;
      }
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Varieties

struct VarietyPresentation {
  std::string name;
  Signature signature;
  Ambient ambient;
  std::vector<Identity> defining;
  /// Decided by pointed-word normal forms instead of linear algebra.
  bool associative = false;
};

namespace detail {

inline Identity parsed(std::string label, std::string_view text) {
  return {std::move(label), parse_polynomial(text), std::nullopt};
}

}  // namespace detail

inline const std::vector<VarietyPresentation>& variety_presets() {
  using detail::parsed;
  static const std::vector<VarietyPresentation> presets = [] {
    std::vector<VarietyPresentation> v;
    v.push_back({"associative-dialgebra", Signature::Dialgebra, Ambient::Dialgebra,
                 {parsed("left", "al(x,y,z)"), parsed("inner", "ax(x,y,z)"), parsed("right", "ar(x,y,z)")}, true});
    v.push_back({"alternative-dialgebra", Signature::Dialgebra, Ambient::Dialgebra,
                 {parsed("alt1", "al(x,y,z) + ar(z,y,x)"), parsed("alt2", "al(x,y,z) - ar(y,z,x)"),
                  parsed("alt3", "ax(x,y,z) + ar(x,z,y)")}});
    v.push_back({"flexible-dialgebra", Signature::Dialgebra, Ambient::Dialgebra,
                 {parsed("flex1", "al(x,y,z) + ar(z,y,x)"), parsed("flex2", "ax(x,y,z) + ax(z,y,x)")}});
    v.push_back({"0-dialgebra", Signature::Dialgebra, Ambient::Dialgebra, {}});
    v.push_back({"right-anticommutative", Signature::Plain, Ambient::RightAnticommutative,
                 {parsed("ra", "x*(y*z) + x*(z*y)")}});
    v.push_back({"malcev-dialgebra", Signature::Plain, Ambient::RightAnticommutative,
                 {parsed("ra", "x*(y*z) + x*(z*y)"),
                  parsed("di-malcev", "((x*y)*z)*t - ((x*t)*y)*z - (x*(z*t))*y - (x*z)*(y*t) - x*((y*z)*t)")}});
    v.push_back({"leibniz-algebra", Signature::Plain, Ambient::Plain,
                 {parsed("leibniz", "(x*y)*z - (x*z)*y - x*(y*z)")}});
    v.push_back({"lie-algebra", Signature::Plain, Ambient::Plain,
                 {parsed("anticommutativity", "x*y + y*x"), parsed("jacobi", "J(x,y,z)")}});
    Identity sagle = parsed("sagle", "(x*z)*(y*t) - ((x*y)*z)*t - ((y*z)*t)*x - ((z*t)*x)*y - ((t*x)*y)*z");
    sagle.nonlinear = parse_polynomial("(x*y)*(x*z) - ((x*y)*z)*x - ((y*z)*x)*x - ((z*x)*x)*y");
    v.push_back({"malcev-algebra", Signature::Plain, Ambient::Plain, {parsed("anticommutativity", "x*y + y*x"), sagle}});
    return v;
  }();
  return presets;
}

inline const VarietyPresentation* find_variety(std::string_view name) {
  for (const auto& v : variety_presets()) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

inline Verdict holds_in_variety(const Polynomial& nonlinear_target, const VarietyPresentation& variety,
                                std::size_t degree, std::size_t cap = effective_degree_cap()) {
  const Polynomial target = multilinear_form(nonlinear_target);
  if (!variety.associative) return is_consequence(target, variety.defining, variety.ambient, degree, cap);
  require_degree(degree, cap);
  detail::check_signature(target, Ambient::Dialgebra);
  detail::target_variables(target, degree);
  Verdict v;
  const auto nf = normal_form_assoc_dialgebra(target);
  v.holds = nf.empty();
  for (const auto& id : variety.defining) v.generators.push_back(id.label);
  v.dims = {degree * factorial(degree)};
  for (const auto& [w, q] : nf) {
    Term t = point_at(with_leaves(plain_shapes(degree).front(), w.word), w.center - 1);
    v.residual_poly.add(t, q);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Conditional consequences

/// An identity assumed only for particular elements: `distinguished` variables stay
/// fixed, all others range over the whole algebra.
struct Hypothesis {
  std::string label;
  Polynomial identity;
  std::vector<Variable> distinguished;
};

/// Every instance of the hypothesis at the target degree: generic variables are sent
/// injectively to target variables other than the distinguished ones, then the
/// instance is lifted with the unused target variables, never substituting into a
/// distinguished variable.
inline std::vector<Polynomial> hypothesis_instances(const Hypothesis& h, const std::vector<Variable>& target_vars) {
  const auto hv = h.identity.variables();
  for (const Variable& d : h.distinguished) {
    if (std::find(hv.begin(), hv.end(), d) == hv.end()) {
      throw Error("distinguished variable " + d.name + " absent from hypothesis " + h.label);
    }
    if (std::find(target_vars.begin(), target_vars.end(), d) == target_vars.end()) {
      throw Error("distinguished variable " + d.name + " absent from the target");
    }
  }
  std::vector<Variable> generic, free;
  for (const Variable& v : hv) {
    if (std::find(h.distinguished.begin(), h.distinguished.end(), v) == h.distinguished.end()) generic.push_back(v);
  }
  for (const Variable& v : target_vars) {
    if (std::find(h.distinguished.begin(), h.distinguished.end(), v) == h.distinguished.end()) free.push_back(v);
  }
  if (generic.size() > free.size()) return {};
  std::vector<Polynomial> base;
  // injective maps generic -> free, via ordered selections
  std::vector<std::size_t> pick(free.size());
  std::iota(pick.begin(), pick.end(), 0);
  std::set<std::vector<std::size_t>> done;
  do {
    std::vector<std::size_t> sel(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(generic.size()));
    if (!done.insert(sel).second) continue;
    std::map<Variable, Variable> m;
    for (std::size_t k = 0; k < generic.size(); ++k) m.emplace(generic[k], free[sel[k]]);
    base.push_back(rename(h.identity, m));
  } while (std::next_permutation(pick.begin(), pick.end()));

  std::vector<Polynomial> out;
  for (const Polynomial& b : base) {
    std::vector<Polynomial> cur{b};
    for (std::size_t step = hv.size(); step < target_vars.size(); ++step) {
      std::vector<Polynomial> next;
      for (const Polynomial& f : cur) {
        const auto used = f.variables();
        for (const Variable& v : target_vars) {
          if (std::find(used.begin(), used.end(), v) != used.end()) continue;
          for (Polynomial& g : lift(f, v, h.distinguished, Signature::Dialgebra)) next.push_back(std::move(g));
        }
      }
      cur = detail::dedupe(std::move(next));
    }
    for (Polynomial& f : cur) out.push_back(std::move(f));
  }
  return detail::dedupe(std::move(out));
}

/// Membership of the target in the span of all hypothesis instances inside the free
/// 0-dialgebra of the target's degree.
inline Verdict conditional_consequence(const Polynomial& nonlinear_target, const std::vector<Hypothesis>& hypotheses,
                                       std::size_t degree, std::size_t cap = effective_degree_cap()) {
  const Polynomial target = multilinear_form(nonlinear_target);
  require_degree(degree, cap);
  detail::check_signature(target, Ambient::Dialgebra);
  const auto vars = detail::target_variables(target, degree);
  IdentityModule mod(make_basis(Ambient::Dialgebra, vars));
  Verdict v;
  for (const Hypothesis& h : hypotheses) {
    detail::check_signature(h.identity, Ambient::Dialgebra);
    if (!h.identity.is_multilinear()) throw MultilinearityError("hypotheses must be multilinear");
    for (const Polynomial& f : hypothesis_instances(h, vars)) mod.add(f);
    v.generators.push_back(h.label);
  }
  v.residual = mod.residual(target);
  v.holds = v.residual.empty();
  v.residual_poly = from_coordinates(v.residual, mod.basis());
  v.ranks = {mod.rank(), mod.rank() + (v.holds ? 0 : 1)};
  v.dims = {mod.basis().dimension(), mod.row_count()};
  return v;
}

// ---------------------------------------------------------------------------
// Multiplication operators of a dialgebra, applied to elements

/// x -> arg o x (on_left) or x -> x o arg, with o the given operation.
struct Multiplication {
  bool on_left;
  OpTag op;
  Polynomial arg;
};

/// Linear combination of composites of multiplication operators. A word
/// [m1, m2, ..., mk] acts as m1(m2(...mk(y))).
class Operator {
 public:
  using Word = std::vector<Multiplication>;

  Operator() = default;
  explicit Operator(Multiplication m) { terms_.push_back({Rational(1), {std::move(m)}}); }

  Polynomial operator()(const Polynomial& y) const {
    Polynomial out;
    for (const auto& [c, w] : terms_) {
      Polynomial v = y;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        v = it->on_left ? product(it->op, it->arg, v) : product(it->op, v, it->arg);
      }
      out += c * v;
    }
    return canonicalize(out);
  }

  friend Operator operator+(Operator a, const Operator& b) {
    a.terms_.insert(a.terms_.end(), b.terms_.begin(), b.terms_.end());
    return a;
  }
  friend Operator operator*(const Rational& s, Operator a) {
    for (auto& t : a.terms_) t.first *= s;
    return a;
  }
  friend Operator operator-(const Operator& a, const Operator& b) { return a + Rational(-1) * b; }
  friend Operator operator-(const Operator& a) { return Rational(-1) * a; }

  /// Composition: (a * b)(y) = a(b(y)).
  friend Operator operator*(const Operator& a, const Operator& b) {
    Operator out;
    for (const auto& [ca, wa] : a.terms_)
      for (const auto& [cb, wb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.terms_.push_back({ca * cb, std::move(w)});
      }
    return out;
  }

 private:
  std::vector<std::pair<Rational, Word>> terms_;
};

/// L^|-_a : x -> a |- x
inline Operator L_right(const Polynomial& a) { return Operator({true, OpTag::right(), a}); }
/// L^-|_a : x -> a -| x
inline Operator L_left(const Polynomial& a) { return Operator({true, OpTag::left(), a}); }
/// R^|-_a : x -> x |- a
inline Operator R_right(const Polynomial& a) { return Operator({false, OpTag::right(), a}); }
/// R^-|_a : x -> x -| a
inline Operator R_left(const Polynomial& a) { return Operator({false, OpTag::left(), a}); }
/// T^x_a = L^|-_a + R^-|_a
inline Operator T_times(const Polynomial& a) { return L_right(a) + R_left(a); }
/// T~^x_a = R^|-_a + L^-|_a
inline Operator T_tilde(const Polynomial& a) { return R_right(a) + L_left(a); }

inline Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

}  // namespace dialg
