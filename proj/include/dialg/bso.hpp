#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "dialg/polynomial.hpp"
#include "dialg/spaces.hpp"

namespace dialg {

namespace detail {

inline std::vector<Variable> bso_arguments(const Polynomial& p, std::vector<Variable> args) {
  if (p.signature() != Signature::Plain && p.signature() != Signature::Empty) {
    throw SignatureError("BSO input must be a one-operation polynomial");
  }
  for (const auto& [t, c] : p.terms()) {
    if (!t.is_leaf() && t.tag().arity != 2) throw ArityError("BSO input must be binary");
  }
  if (!p.is_multilinear()) throw MultilinearityError("BSO input must be multilinear");
  const auto vs = p.variables();
  if (args.empty()) return vs;
  auto sorted = args;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != vs) throw Error("BSO argument list does not match the variables of the operation");
  return args;
}

}  // namespace detail

/// The i-th (1-based) BSO expansion: every product of every monomial points toward
/// argument i.
inline Polynomial bso_expand(const Polynomial& op, std::size_t i, std::vector<Variable> arguments = {}) {
  const auto args = detail::bso_arguments(op, std::move(arguments));
  if (i < 1 || i > args.size()) throw Error("BSO argument index out of range");
  const Variable& c = args[i - 1];
  Polynomial out;
  for (const auto& [t, q] : op.terms()) {
    const auto leaves = t.leaves();
    const auto pos = static_cast<std::size_t>(std::find(leaves.begin(), leaves.end(), c) - leaves.begin());
    out.add(t.is_leaf() ? t : point_at(t, pos), q);
  }
  return out;
}

/// member[index](arguments) = sign * member[source](permuted arguments)
struct BSORelation {
  std::size_t index;
  std::size_t source;
  std::vector<Variable> arguments;
  int sign;
};

struct BSOFamily {
  std::vector<Variable> arguments;
  std::vector<Polynomial> members;
  std::vector<BSORelation> relations;
};

/// All n expansions, with the first renaming relation found for each member
/// against an earlier one.
inline BSOFamily bso_family(const Polynomial& op, std::vector<Variable> arguments = {}) {
  BSOFamily fam;
  fam.arguments = detail::bso_arguments(op, std::move(arguments));
  const auto& args = fam.arguments;
  for (std::size_t i = 1; i <= args.size(); ++i) fam.members.push_back(bso_expand(op, i, args));
  const auto perms = detail::permutations_of(args);
  for (std::size_t i = 1; i < fam.members.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < i && !found; ++j) {
      for (const auto& image : perms) {
        std::map<Variable, Variable> m;
        for (std::size_t k = 0; k < args.size(); ++k) m.emplace(args[k], image[k]);
        const Polynomial r = rename(fam.members[j], m);
        for (int sign : {1, -1}) {
          if (sign * r == fam.members[i]) {
            fam.relations.push_back({i, j, image, sign});
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
  }
  return fam;
}

}  // namespace dialg
