#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "dialg/polynomial.hpp"
#include "dialg/spaces.hpp"

namespace dialg {

namespace detail {

inline std::vector<Variable> positional_names(std::size_t n) {
  static const char* const names[] = {"x", "y", "z", "t", "u", "v", "w", "s"};
  std::vector<Variable> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(n <= std::size(names) ? std::string(names[i]) : "x" + std::to_string(i + 1));
  }
  return out;
}

// {a_1, ..., {b_1, ..., b_n}_k, ..., a_n}_j with the inner operation in argument i (1-based).
inline Term zero_identity_side(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  const auto names = positional_names(2 * n - 1);
  std::size_t pos = 0;
  std::vector<Term> outer;
  for (std::size_t arg = 1; arg <= n; ++arg) {
    if (arg == i) {
      std::vector<Term> inner;
      for (std::size_t b = 0; b < n; ++b) inner.push_back(Term::leaf(names[pos++]));
      outer.push_back(Term::node(OpTag::pointing(static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(n)),
                                 std::move(inner)));
    } else {
      outer.push_back(Term::leaf(names[pos++]));
    }
  }
  return Term::node(OpTag::pointing(static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(n)), std::move(outer));
}

inline std::string zero_label(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  return "zero(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",k=" + std::to_string(k) +
         ",l=" + std::to_string(l) + ")";
}

}  // namespace detail

/// Every 0-identity for n-ary operations: i != j and k != l, lhs minus rhs, not
/// normalised (each of them canonicalizes to zero). Binary subscripts are -| and |-.
inline std::vector<Identity> zero_identity_instances(std::size_t n) {
  if (n < 2) throw ArityError("0-identities need arity at least 2");
  if (2 * n - 1 > kMaxDegree) throw DegreeError("0-identities of arity " + std::to_string(n) + " exceed the degree cap");
  std::vector<Identity> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t l = 1; l <= n; ++l) {
          if (k == l) continue;
          Polynomial p = poly(detail::zero_identity_side(n, i, j, k)) - poly(detail::zero_identity_side(n, i, j, l));
          out.push_back({detail::zero_label(i, j, k, l), std::move(p), std::nullopt});
        }
    }
  return out;
}

/// The 0-identities with each unordered pair {k, l} taken once (k < l).
inline std::vector<Identity> zero_identities(std::size_t n) {
  std::vector<Identity> out;
  for (Identity& id : zero_identity_instances(n)) {
    const auto& lbl = id.label;
    const auto k = std::stoul(lbl.substr(lbl.find("k=") + 2));
    const auto l = std::stoul(lbl.substr(lbl.find("l=") + 2));
    if (k < l) out.push_back(std::move(id));
  }
  return out;
}

namespace detail {

inline std::size_t single_arity(const Polynomial& p) {
  std::optional<std::size_t> arity;
  auto rec = [&](auto&& self, const Term& t) -> void {
    if (t.is_leaf()) return;
    if (!t.tag().is_plain()) throw SignatureError("KP input must use a single unsubscripted operation");
    if (arity && *arity != t.tag().arity) throw SignatureError("KP input mixes operations of different arities");
    arity = t.tag().arity;
    for (const Term& k : t.children()) self(self, k);
  };
  for (const auto& [t, c] : p.terms()) rec(rec, t);
  return arity.value_or(2);
}

}  // namespace detail

/// KP identity for one central variable: every operation points at the argument
/// holding it, or at its first/last argument when it lies to the left/right.
inline Polynomial kp_identity(const Polynomial& p, const Variable& central) {
  detail::single_arity(p);
  if (!p.is_multilinear()) throw MultilinearityError("KP input must be multilinear");
  Polynomial out;
  for (const auto& [t, c] : p.terms()) {
    const auto leaves = t.leaves();
    auto it = std::find(leaves.begin(), leaves.end(), central);
    if (it == leaves.end()) throw Error("central variable " + central.name + " absent from a monomial");
    out.add(point_at(t, static_cast<std::size_t>(it - leaves.begin())), c);
  }
  return out;
}

struct KPIdentity {
  Variable central;
  Identity identity;
  /// Equal, up to sign and a renaming of variables, to an earlier output.
  bool duplicate = false;
};

struct KPResult {
  std::vector<Identity> zero_identities;
  std::vector<KPIdentity> kp_identities;
};

/// True if q = +-p after some renaming of p's variables.
inline bool equal_up_to_renaming(const Polynomial& p, const Polynomial& q) {
  const auto vs = p.variables();
  if (vs != q.variables()) return false;
  for (const Polynomial& r : sn_orbit(p)) {
    if (r == q || -r == q) return true;
  }
  return false;
}

/// KP identities for every central variable, in the given order (default: sorted).
inline KPResult kp_transform(const Identity& id, std::vector<Variable> order = {}) {
  const std::size_t arity = detail::single_arity(id.poly);
  if (order.empty()) order = id.poly.variables();
  KPResult res;
  res.zero_identities = zero_identities(arity);
  for (const Variable& v : order) {
    Polynomial q = kp_identity(id.poly, v);
    bool dup = false;
    for (const auto& prev : res.kp_identities) dup = dup || equal_up_to_renaming(prev.identity.poly, q);
    std::string label = id.label.empty() ? v.name : id.label + "[" + v.name + "]";
    res.kp_identities.push_back({v, {std::move(label), std::move(q), std::nullopt}, dup});
  }
  return res;
}

inline KPResult kp_transform(const Polynomial& p, std::vector<Variable> order = {}) {
  return kp_transform(Identity{"", p, std::nullopt}, std::move(order));
}

}  // namespace dialg
