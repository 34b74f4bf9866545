#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dialg/error.hpp"

namespace dialg {

struct Variable {
  std::string name;

  Variable() = default;
  explicit Variable(std::string n) : name(std::move(n)) {}

  friend bool operator==(const Variable&, const Variable&) = default;
  friend std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
    return a.name <=> b.name;
  }
};

inline Variable var(std::string name) { return Variable(std::move(name)); }

inline std::vector<Variable> vars(std::initializer_list<const char*> names) {
  std::vector<Variable> out;
  for (const char* n : names) out.emplace_back(n);
  return out;
}

enum class OpKind : std::uint8_t {
  Plain,  // the single operation of an ordinary (n-ary) algebra
  Left,   // dialgebra left product, pointing at its first argument
  Right,  // dialgebra right product, pointing at its second argument
  Slot,   // subscripted member {-,...,-}_j of an n-ary family
};

struct OpTag {
  OpKind kind = OpKind::Plain;
  std::uint8_t arity = 2;
  std::uint8_t slot = 0;  // 1..arity for Slot, 0 otherwise

  static constexpr OpTag plain(std::uint8_t n = 2) { return {OpKind::Plain, n, 0}; }
  static constexpr OpTag left() { return {OpKind::Left, 2, 0}; }
  static constexpr OpTag right() { return {OpKind::Right, 2, 0}; }
  static OpTag subscripted(std::uint8_t j, std::uint8_t n) {
    if (n < 2 || j < 1 || j > n) {
      throw ArityError("subscript " + std::to_string(j) + " out of range for arity " +
                       std::to_string(n));
    }
    return {OpKind::Slot, n, j};
  }

  /// Member j of the n-ary family; binary families use the dialgebra products.
  static OpTag pointing(std::uint8_t j, std::uint8_t n) {
    if (n == 2) return j == 1 ? left() : right();
    return subscripted(j, n);
  }

  bool is_plain() const noexcept { return kind == OpKind::Plain; }
  bool is_pointed() const noexcept { return kind != OpKind::Plain; }

  /// Argument (1-based) this operation points at; undefined for Plain.
  std::uint8_t points_to() const noexcept {
    switch (kind) {
      case OpKind::Left: return 1;
      case OpKind::Right: return 2;
      case OpKind::Slot: return slot;
      case OpKind::Plain: break;
    }
    return 0;
  }

  friend bool operator==(const OpTag&, const OpTag&) = default;
  friend auto operator<=>(const OpTag&, const OpTag&) = default;
};

/// Rooted operation tree over variables.
///
/// Terms are immutable values. Their ordering is the monomial order used everywhere:
/// degree, then association type, then center position, then operation tags in
/// preorder, then the leaf sequence.
class Term {
 public:
  Term() = default;

  static Term leaf(Variable v) {
    Term t;
    t.var_ = std::move(v);
    return t;
  }

  static Term node(OpTag tag, std::vector<Term> children) {
    if (children.size() != tag.arity) {
      throw ArityError("operation of arity " + std::to_string(tag.arity) + " given " +
                       std::to_string(children.size()) + " arguments");
    }
    if ((tag.kind == OpKind::Left || tag.kind == OpKind::Right) && tag.arity != 2) {
      throw ArityError("dialgebra products are binary");
    }
    if (tag.kind == OpKind::Slot && (tag.slot < 1 || tag.slot > tag.arity)) {
      throw ArityError("subscript out of range");
    }
    Term t;
    t.tag_ = tag;
    t.degree_ = 0;
    for (const Term& c : children) t.degree_ += c.degree_;
    t.children_ = std::move(children);
    return t;
  }

  static Term binary(OpTag tag, Term lhs, Term rhs) {
    std::vector<Term> kids;
    kids.reserve(2);
    kids.push_back(std::move(lhs));
    kids.push_back(std::move(rhs));
    return node(tag, std::move(kids));
  }

  bool is_leaf() const noexcept { return children_.empty(); }
  const Variable& variable() const noexcept { return var_; }
  const OpTag& tag() const noexcept { return tag_; }
  std::span<const Term> children() const noexcept { return children_; }
  const Term& child(std::size_t i) const { return children_.at(i); }
  std::size_t degree() const noexcept { return degree_; }

  std::vector<Variable> leaves() const {
    std::vector<Variable> out;
    out.reserve(degree_);
    collect_leaves(out);
    return out;
  }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.degree_ != b.degree_ || a.children_.size() != b.children_.size()) return false;
    if (a.is_leaf()) return a.var_ == b.var_;
    return a.tag_ == b.tag_ && a.children_ == b.children_;
  }

  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  void collect_leaves(std::vector<Variable>& out) const {
    if (is_leaf()) {
      out.push_back(var_);
      return;
    }
    for (const Term& c : children_) c.collect_leaves(out);
  }

  OpTag tag_{};
  Variable var_{};
  std::vector<Term> children_;
  std::size_t degree_ = 1;
};

inline Term leaf(const char* name) { return Term::leaf(Variable(name)); }
inline Term leaf(const Variable& v) { return Term::leaf(v); }
inline Term times(Term a, Term b) { return Term::binary(OpTag::plain(), std::move(a), std::move(b)); }
inline Term left(Term a, Term b) { return Term::binary(OpTag::left(), std::move(a), std::move(b)); }
inline Term right(Term a, Term b) { return Term::binary(OpTag::right(), std::move(a), std::move(b)); }

/// Compares association types only (tags and leaf names ignored).
///
/// Binary types of equal degree are ordered by decreasing size of the left factor,
/// then by the left factor in this order, then by the right factor in the mirrored
/// order. In degree 4 this gives ((ab)c)d, (a(bc))d, (ab)(cd), a(b(cd)), a((bc)d).
inline std::strong_ordering compare_shapes(const Term& a, const Term& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (a.is_leaf() || b.is_leaf()) return b.is_leaf() <=> a.is_leaf();
  if (auto c = a.children().size() <=> b.children().size(); c != 0) return c;
  const auto ka = a.children();
  const auto kb = b.children();
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (auto c = kb[i].degree() <=> ka[i].degree(); c != 0) return c;
  }
  if (auto c = compare_shapes(ka[0], kb[0]); c != 0) return c;
  for (std::size_t i = 1; i < ka.size(); ++i) {
    if (auto c = compare_shapes(kb[i], ka[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

/// 0-based leaf index reached by following pointed operations from the root, if every
/// operation on that path is pointed. For dialgebra terms this is the center.
inline std::optional<std::size_t> center_index(const Term& t) {
  std::size_t offset = 0;
  const Term* cur = &t;
  while (!cur->is_leaf()) {
    if (cur->tag().is_plain()) return std::nullopt;
    const std::size_t arg = cur->tag().points_to() - 1;
    for (std::size_t i = 0; i < arg; ++i) offset += cur->child(i).degree();
    cur = &cur->child(arg);
  }
  return offset;
}

namespace detail {

inline std::strong_ordering compare_tags(const Term& a, const Term& b) {
  if (a.is_leaf()) return std::strong_ordering::equal;
  if (auto c = a.tag() <=> b.tag(); c != 0) return c;
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    if (auto c = compare_tags(a.child(i), b.child(i)); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare_leaves(const Term& a, const Term& b) {
  if (a.is_leaf()) return a.variable() <=> b.variable();
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    if (auto c = compare_leaves(a.child(i), b.child(i)); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

inline std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = compare_shapes(a, b); c != 0) return c;
  const auto ca = center_index(a);
  const auto cb = center_index(b);
  if (auto c = ca.value_or(0) <=> cb.value_or(0); c != 0) return c;
  if (auto c = detail::compare_tags(a, b); c != 0) return c;
  return detail::compare_leaves(a, b);
}

enum class Signature { Empty, Plain, Dialgebra, Slot, Mixed };

inline const char* to_string(Signature s) {
  switch (s) {
    case Signature::Empty: return "empty";
    case Signature::Plain: return "algebra";
    case Signature::Dialgebra: return "dialgebra";
    case Signature::Slot: return "n-ary";
    case Signature::Mixed: return "mixed";
  }
  return "?";
}

inline Signature join(Signature a, Signature b) {
  if (a == Signature::Empty) return b;
  if (b == Signature::Empty || a == b) return a;
  return Signature::Mixed;
}

inline Signature signature_of(const Term& t) {
  if (t.is_leaf()) return Signature::Empty;
  Signature s = Signature::Empty;
  switch (t.tag().kind) {
    case OpKind::Plain: s = Signature::Plain; break;
    case OpKind::Left:
    case OpKind::Right: s = Signature::Dialgebra; break;
    case OpKind::Slot: s = Signature::Slot; break;
  }
  for (const Term& c : t.children()) s = join(s, signature_of(c));
  return s;
}

/// Center variable of a dialgebra (or subscripted) term.
inline Variable center(const Term& t) {
  const auto idx = center_index(t);
  if (!idx) throw SignatureError("center is only defined for dialgebra terms");
  return t.leaves()[*idx];
}

/// Recursive form of the center: c(y -| z) = c(y), c(y |- z) = c(z).
inline Variable center_recursive(const Term& t) {
  if (t.is_leaf()) return t.variable();
  if (t.tag().is_plain()) throw SignatureError("center is only defined for dialgebra terms");
  return center_recursive(t.child(t.tag().points_to() - 1));
}

namespace detail {

enum class CenterSide { Inside, ToTheLeft, ToTheRight };

// `offset` is the index of the first leaf of `t`; `c` the center's leaf index.
inline Term orient(const Term& t, std::size_t offset, std::size_t c, CenterSide side) {
  if (t.is_leaf()) return t;
  const auto n = static_cast<std::uint8_t>(t.children().size());
  std::vector<Term> kids;
  kids.reserve(n);
  if (side != CenterSide::Inside) {
    const OpTag tag = OpTag::pointing(side == CenterSide::ToTheLeft ? 1 : n, n);
    std::size_t off = offset;
    for (const Term& k : t.children()) {
      kids.push_back(orient(k, off, c, side));
      off += k.degree();
    }
    return Term::node(tag, std::move(kids));
  }
  std::size_t off = offset;
  std::uint8_t inside = 0;
  for (std::uint8_t i = 0; i < n; ++i) {
    const Term& k = t.child(i);
    CenterSide s = CenterSide::Inside;
    if (c < off) {
      s = CenterSide::ToTheLeft;
    } else if (c >= off + k.degree()) {
      s = CenterSide::ToTheRight;
    } else {
      inside = static_cast<std::uint8_t>(i + 1);
    }
    kids.push_back(orient(k, off, c, s));
    off += k.degree();
  }
  return Term::node(OpTag::pointing(inside, n), std::move(kids));
}

}  // namespace detail

/// Re-tags every operation so that it points at leaf `c` (0-based): operations on the
/// root-to-leaf path point into the argument holding it, all others point toward the
/// path (first argument when the leaf lies to the left, last when to the right).
/// Plain operations become dialgebra products (binary) or subscripted slots (n-ary).
inline Term point_at(const Term& t, std::size_t c) {
  if (c >= t.degree()) throw Error("center index out of range");
  return detail::orient(t, 0, c, detail::CenterSide::Inside);
}

/// Normal form modulo the bar identities (and their n-ary generalisation, the
/// 0-identities): the association type and center are kept, every tag is derived
/// from them. Plain terms are returned unchanged.
inline Term canonicalize(const Term& t) {
  const Signature s = signature_of(t);
  if (s == Signature::Mixed) throw SignatureError("term mixes operation families");
  if (s != Signature::Dialgebra && s != Signature::Slot) return t;
  return point_at(t, *center_index(t));
}

/// Replaces every tag by the Plain operation of the same arity.
inline Term erase_tags(const Term& t) {
  if (t.is_leaf()) return t;
  std::vector<Term> kids;
  kids.reserve(t.children().size());
  for (const Term& k : t.children()) kids.push_back(erase_tags(k));
  return Term::node(OpTag::plain(t.tag().arity), std::move(kids));
}

/// Same shape with the leaves replaced, in order, by `names`.
inline Term with_leaves(const Term& shape, std::span<const Variable> names) {
  std::size_t pos = 0;
  auto rec = [&](auto&& self, const Term& t) -> Term {
    if (t.is_leaf()) return Term::leaf(names[pos++]);
    std::vector<Term> kids;
    kids.reserve(t.children().size());
    for (const Term& k : t.children()) kids.push_back(self(self, k));
    return Term::node(t.tag(), std::move(kids));
  };
  if (names.size() != shape.degree()) throw Error("leaf count mismatch");
  return rec(rec, shape);
}

inline bool is_multilinear(const Term& t) {
  auto l = t.leaves();
  std::sort(l.begin(), l.end());
  return std::adjacent_find(l.begin(), l.end()) == l.end();
}

}  // namespace dialg
