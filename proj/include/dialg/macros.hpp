#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dialg/polynomial.hpp"

namespace dialg {

// Derived operations, extended multilinearly to polynomial arguments.

inline Polynomial com(const Polynomial& x, const Polynomial& y) { return times(x, y) - times(y, x); }

/// <x,y> = x -| y - y |- x
inline Polynomial dicom(const Polynomial& x, const Polynomial& y) { return left(x, y) - right(y, x); }

inline Polynomial assoc(const Polynomial& x, const Polynomial& y, const Polynomial& z) {
  return times(times(x, y), z) - times(x, times(y, z));
}

inline Polynomial assoc_left(const Polynomial& x, const Polynomial& y, const Polynomial& z) {
  return left(left(x, y), z) - left(x, left(y, z));
}

inline Polynomial assoc_inner(const Polynomial& x, const Polynomial& y, const Polynomial& z) {
  return left(right(x, y), z) - right(x, left(y, z));
}

inline Polynomial assoc_right(const Polynomial& x, const Polynomial& y, const Polynomial& z) {
  return right(right(x, y), z) - right(x, right(y, z));
}

inline Polynomial jacobian(const Polynomial& x, const Polynomial& y, const Polynomial& z) {
  return times(times(x, y), z) + times(times(y, z), x) + times(times(z, x), y);
}

/// (xy)z - x(yz) - (xz)y
inline Polynomial di_jacobian(const Polynomial& x, const Polynomial& y, const Polynomial& z) {
  return times(times(x, y), z) - times(x, times(y, z)) - times(times(x, z), y);
}

/// Di-Jacobian of the dicommutator algebra.
inline Polynomial di_jacobian_dicom(const Polynomial& x, const Polynomial& y, const Polynomial& z) {
  return dicom(dicom(x, y), z) - dicom(x, dicom(y, z)) - dicom(dicom(x, z), y);
}

inline Polynomial cyclic_assoc(const Polynomial& x, const Polynomial& y, const Polynomial& z) {
  return assoc(x, y, z) + assoc(y, z, x) + assoc(z, x, y);
}

/// Dialgebra counterpart of the cyclic associator sum, centered at x.
inline Polynomial cyclic_assoc_dialgebra(const Polynomial& x, const Polynomial& y,
                                         const Polynomial& z) {
  return assoc_left(x, y, z) + assoc_right(y, z, x) + assoc_inner(z, x, y);
}

struct MacroDef {
  std::string name;
  std::size_t arity;
  Signature signature;
  std::function<Polynomial(std::span<const Polynomial>)> expand;
};

inline const std::vector<MacroDef>& macro_table() {
  using Args = std::span<const Polynomial>;
  static const std::vector<MacroDef> table = {
      {"com", 2, Signature::Plain, [](Args a) { return com(a[0], a[1]); }},
      {"dicom", 2, Signature::Dialgebra, [](Args a) { return dicom(a[0], a[1]); }},
      {"as", 3, Signature::Plain, [](Args a) { return assoc(a[0], a[1], a[2]); }},
      {"al", 3, Signature::Dialgebra, [](Args a) { return assoc_left(a[0], a[1], a[2]); }},
      {"ax", 3, Signature::Dialgebra, [](Args a) { return assoc_inner(a[0], a[1], a[2]); }},
      {"ar", 3, Signature::Dialgebra, [](Args a) { return assoc_right(a[0], a[1], a[2]); }},
      {"J", 3, Signature::Plain, [](Args a) { return jacobian(a[0], a[1], a[2]); }},
      {"L", 3, Signature::Plain, [](Args a) { return di_jacobian(a[0], a[1], a[2]); }},
      {"dL", 3, Signature::Dialgebra, [](Args a) { return di_jacobian_dicom(a[0], a[1], a[2]); }},
      {"S", 3, Signature::Plain, [](Args a) { return cyclic_assoc(a[0], a[1], a[2]); }},
      {"St", 3, Signature::Dialgebra,
       [](Args a) { return cyclic_assoc_dialgebra(a[0], a[1], a[2]); }},
  };
  return table;
}

inline const MacroDef* find_macro(std::string_view name) {
  for (const auto& m : macro_table()) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

/// Unevaluated expression: macros stay symbolic until expanded.
struct Expr {
  enum class Kind { Zero, Var, Sum, Apply, Macro };

  Kind kind = Kind::Zero;
  Variable variable;                // Var
  OpTag op{};                       // Apply
  std::string macro;                // Macro
  std::vector<Expr> args;           // Sum terms, Apply operands, Macro arguments
  std::vector<Rational> coefficients;  // Sum only, parallel to args

  static Expr zero() { return {}; }
  static Expr of_var(Variable v) {
    Expr e;
    e.kind = Kind::Var;
    e.variable = std::move(v);
    return e;
  }
  static Expr sum(std::vector<Rational> coefs, std::vector<Expr> terms) {
    Expr e;
    e.kind = Kind::Sum;
    e.coefficients = std::move(coefs);
    e.args = std::move(terms);
    return e;
  }
  static Expr apply(OpTag op, Expr a, Expr b) {
    Expr e;
    e.kind = Kind::Apply;
    e.op = op;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }
  static Expr call(std::string name, std::vector<Expr> args) {
    Expr e;
    e.kind = Kind::Macro;
    e.macro = std::move(name);
    e.args = std::move(args);
    return e;
  }
};

/// Evaluates an expression without bar-identity normalisation.
inline Polynomial expand_raw(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Zero: return {};
    case Expr::Kind::Var: return poly(e.variable);
    case Expr::Kind::Sum: {
      Polynomial out;
      for (std::size_t i = 0; i < e.args.size(); ++i) out += e.coefficients[i] * expand_raw(e.args[i]);
      return out;
    }
    case Expr::Kind::Apply: return product(e.op, expand_raw(e.args[0]), expand_raw(e.args[1]));
    case Expr::Kind::Macro: {
      const MacroDef* m = find_macro(e.macro);
      if (m == nullptr) throw MacroError("unknown macro '" + e.macro + "'");
      if (m->arity != e.args.size()) {
        throw MacroError("macro '" + e.macro + "' takes " + std::to_string(m->arity) +
                         " arguments, given " + std::to_string(e.args.size()));
      }
      std::vector<Polynomial> vals;
      for (const Expr& a : e.args) vals.push_back(expand_raw(a));
      return m->expand(vals);
    }
  }
  return {};
}

/// Replaces all macros by their definitions and normalises modulo the bar identities.
inline Polynomial expand_macros(const Expr& e) {
  Polynomial p = expand_raw(e);
  if (p.signature() == Signature::Mixed) throw SignatureError("expression mixes operation families");
  return canonicalize(p);
}

}  // namespace dialg
